// Copyright 2026 The qbound developers

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qbound/bounds.hpp"

/// Executable reproductions of the two analyses this library is built
/// around:
///
///  * eigenstate_scenario — at an eigenstate of B, every bound in the
///    catalogue collapses to a self-referential statement of the form
///    (DeltaA)^2 >= c (DeltaA)^2 with c <= 1: the product bound reads
///    DeltaA * 0 >= 0, the optimal MP1 right side equals (DeltaA)^2 itself
///    and MP2 equals half the left side. None of them constrains DeltaA.
///
///  * counterexample_scenario / counterexample_search — states that are not
///    eigenstates of either observable yet have <[A,B]> = 0: the product
///    bound degenerates to 0 >= 0 while the real-part sum bound stays
///    strictly positive.

namespace qbound::scenarios {

using quantum::Observable;
using quantum::StateVector;

struct ScenarioCheck {
    std::string label;
    double computed;
    std::string relation; // "==", "<=", ">=", ">"
    double expected;
    double tolerance;
    bool pass;
};

struct ScenarioResult {
    std::string name;
    std::vector<ScenarioCheck> checks;
    std::vector<std::string> warnings; // e.g. degenerate eigenvalue selection
    std::string summary;
    bool verdict; // conjunction of checks
};

/// Run the eigenstate trivialization chain on the eig_index-th eigenvector
/// of B. Requires [A,B] != 0 (throws ValidationError otherwise). A
/// degenerate eigenvalue at eig_index is recorded as a warning: the
/// eigenvector choice is then basis-dependent but every identity checked
/// holds for any choice.
ScenarioResult eigenstate_scenario(const Observable& A, const Observable& B,
                                   std::size_t eig_index);

/// Test whether phi exhibits the vanishing-commutator counterexample:
/// <[A,B]>_phi = 0 within tol while phi is an eigenstate of neither
/// observable and the real-part bound m12a stays positive. A state failing
/// the predicate yields verdict false, not an error. tol defaults to
/// 1e-8 * scale_of(A, B).
ScenarioResult counterexample_scenario(const Observable& A, const Observable& B,
                                       const StateVector& phi,
                                       std::optional<double> tol = std::nullopt);

/// Multi-start search for a counterexample state: penalized
/// finite-difference ascent of m12a over the unit sphere (penalty weight
/// 1e3 on <[A,B]>_phi^2), followed by Newton restoration of the commutator
/// constraint. Start k draws its state from substream(seed, k); the first
/// start whose polished state passes counterexample_scenario wins, which
/// makes the result independent of evaluation order. Returns nullopt after
/// n_starts failures. Throws ValidationError for a commuting pair.
std::optional<StateVector> counterexample_search(const Observable& A, const Observable& B,
                                                 std::uint64_t seed, int n_starts = 32,
                                                 std::optional<double> tol = std::nullopt);

}  // namespace qbound::scenarios
