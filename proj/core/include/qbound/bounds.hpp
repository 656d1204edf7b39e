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

#include "qbound/av_decomposition.hpp"
#include "qbound/quantum.hpp"

/// The variance-bound catalogue for a pair of Hermitian observables (A, B)
/// and a pure state |phi>:
///
///   HR    DeltaA * DeltaB            >= 1/2 |<[A,B]>|
///   MP1   Delta^2 A + Delta^2 B      >= +-i<[A,B]> + |<phi|(A +- iB)|phi_perp>|^2
///   MP2   Delta^2 A + Delta^2 B      >= 1/2 |<phi_perp_(A+B)|(A+B)|phi>|^2
///                                     = 1/2 Delta^2(A+B)
///   M12A  Delta^2 A + Delta^2 B      >= 2 |Re<phi| deltaA deltaB |phi>|
///
/// MP1 holds for any unit |phi_perp> orthogonal to |phi> and either sign;
/// mp1_optimal picks the perpendicular state maximizing the overlap term,
/// which makes the right side coincide with the left (the bound becomes
/// self-referential at eigenstates of A or B).

namespace qbound::bounds {

using quantum::Observable;
using quantum::StateVector;

struct HRReport {
    double lhs_product; // DeltaA * DeltaB
    double rhs;         // 1/2 |<[A,B]>|
    double slack;       // lhs - rhs
};

struct MP1Report {
    int sign;               // +1 or -1
    StateVector perp_used;
    double commutator_term; // +-i<[A,B]>, real because <[A,B]> is imaginary
    double overlap_term;    // |<phi|(A +- iB)|phi_perp>|^2 >= 0
    double rhs;             // commutator_term + overlap_term
    bool degenerate_perp;   // true when the maximizing direction vanished and
                            // an arbitrary orthogonal unit vector was used
};

struct BoundSlacks {
    double mp1_plus;
    double mp1_minus;
    double mp1_best;
    double mp2;
    double m12a;
};

struct BoundSuiteReport {
    std::size_t dim;
    double lhs_sum; // Delta^2 A + Delta^2 B
    HRReport hr;
    double mp1_plus;  // mp1_optimal rhs, sign +
    double mp1_minus; // mp1_optimal rhs, sign -
    double mp1_best;  // max of the two
    double mp2;
    double m12a;
    double max_bound; // max(mp1_best, mp2)
    bool self_referential; // min(DeltaA, DeltaB) <= kEpsEigen * scale
    BoundSlacks slacks;    // lhs_sum minus each bound
};

HRReport hr_bound(const Observable& A, const Observable& B, const StateVector& phi);

/// Evaluates the MP1 right side exactly as written for the given sign and
/// perpendicular state. Preconditions: perp unit norm, |<phi|perp>| <= 1e-8.
MP1Report mp1_bound(const Observable& A, const Observable& B, const StateVector& phi,
                    const StateVector& perp, int sign);

/// MP1 with the maximizing perpendicular state: the normalized projection of
/// (A -+ iB)|phi> onto the orthogonal complement of |phi> (Cauchy-Schwarz
/// maximizer of the overlap term over all unit states orthogonal to phi).
/// Throws for dim 1 (no orthogonal complement).
MP1Report mp1_optimal(const Observable& A, const Observable& B, const StateVector& phi, int sign,
                      double eps_eigen = tol::kEpsEigen);

/// 1/2 Delta^2(A+B), the parallelogram-law form.
double mp2_bound(const Observable& A, const Observable& B, const StateVector& phi);

/// The matrix-element form 1/2 |<phi_perp_(A+B)|(A+B)|phi>|^2, computed
/// through the AV decomposition; absent when Delta(A+B) <= eps_eigen.
/// Agrees with mp2_bound within kConsistency * scale.
std::optional<double> mp2_bound_av_form(const Observable& A, const Observable& B,
                                        const StateVector& phi,
                                        double eps_eigen = tol::kEpsEigen);

/// 2 |Re<phi| deltaA deltaB |phi>|. Can stay positive where <[A,B]>_phi = 0.
double m12a_rhs(const Observable& A, const Observable& B, const StateVector& phi);

/// Every bound above plus left sides and slacks. eps_eigen feeds the
/// mp1_optimal degeneracy cutoff and the self_referential threshold.
BoundSuiteReport bound_suite(const Observable& A, const Observable& B, const StateVector& phi,
                             double eps_eigen = tol::kEpsEigen);

/// True when every slack in the report clears -kSlackFloor * scale. The
/// scan commands and selftest key their exit status off this.
bool suite_within_validity(const BoundSuiteReport& report, double scale);

}  // namespace qbound::bounds
