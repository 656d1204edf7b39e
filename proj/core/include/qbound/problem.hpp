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
#include <variant>
#include <vector>

#include "qbound/quantum.hpp"

/// Problem definitions for the CLI: a pair of observables plus either an
/// explicit state or an eigenstate selector, in JSON:
///
///   {
///     "A": "pauli_x",                          // or {"dim": d, "matrix": [[[re,im], ...], ...]}
///     "B": {"dim": 2, "matrix": [...]},
///     "state": {"dim": 2, "vector": [[re,im], ...]}   // or {"of": "B", "index": 1}, optional
///     "tolerances": {"eps_eigen": 1e-8, "commutator_tol": 2e-8}   // optional
///   }
///
/// The named built-ins pauli_x, pauli_y, pauli_z and identity(d) are
/// accepted wherever a matrix is expected.

namespace qbound::io {

/// Parse failure; the message is anchored to the offending line or entry.
class ParseError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

struct EigenstateSelector {
    char of; // 'A' or 'B'
    std::size_t index;
};

struct ToleranceOverrides {
    std::optional<double> eps_eigen;
    std::optional<double> commutator_tol;
};

struct ProblemSpec {
    quantum::Observable A;
    quantum::Observable B;
    std::optional<std::variant<quantum::StateVector, EigenstateSelector>> state;
    ToleranceOverrides tolerances;
};

/// "pauli_x" | "pauli_y" | "pauli_z" | "identity(d)".
quantum::Observable named_observable(const std::string& name);

ProblemSpec parse_problem_text(const std::string& text);
ProblemSpec load_problem_file(const std::string& path);

/// Problems shipped in the binary so no fixture files are needed.
const std::vector<std::string>& builtin_problem_names();
ProblemSpec builtin_problem(const std::string& name);

/// Materialize the problem's state: explicit vectors pass through, an
/// eigenstate selector resolves against the named operator's spectrum
/// (eigenvalues ascending). Throws ParseError when no state was given.
quantum::StateVector resolve_state(const ProblemSpec& problem);

}  // namespace qbound::io
