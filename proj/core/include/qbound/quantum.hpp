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

#include "qbound/linalg.hpp"

/// States, observables and their first/second moments: expectations,
/// deviations, variances, commutators and the mixed correlation term.

namespace qbound::quantum {

using linalg::CMatrix;
using linalg::Complex;
using linalg::CVector;

/// Unit-norm state |phi>. The constructor validates the norm; use
/// normalized() to build from an arbitrary non-zero vector.
class StateVector {
  public:
    explicit StateVector(CVector vec);

    static StateVector normalized(const CVector& vec);

    const CVector& vec() const noexcept { return vec_; }
    std::size_t dim() const noexcept { return vec_.dim(); }

  private:
    CVector vec_;
};

/// Hermitian operator. Validated against tol::kHermiticity on construction.
class Observable {
  public:
    explicit Observable(CMatrix mat);

    const CMatrix& mat() const noexcept { return mat_; }
    std::size_t dim() const noexcept { return mat_.dim(); }

    static Observable pauli_x();
    static Observable pauli_y();
    static Observable pauli_z();
    static Observable identity(std::size_t dim);

  private:
    CMatrix mat_;
};

struct MomentReport {
    double mean;
    double variance; // >= 0
    double std_dev;  // sqrt(variance)
};

struct CorrelationReport {
    Complex corr;                    // <phi| deltaA deltaB |phi>
    double re_part;
    double im_part;
    Complex commutator_expectation;  // <[A,B]>_phi, purely imaginary
};

/// Tolerance scale for an observable pair: 1 + max_abs(A) * max_abs(B).
double scale_of(const Observable& A, const Observable& B);

/// Re<phi|F|phi>. Throws ConsistencyError if the imaginary residue exceeds
/// kConsistency * (1 + max_abs(F)).
double expectation(const Observable& F, const StateVector& phi);

/// Deviation vector  deltaF|phi> = F|phi> - <F>_phi |phi>,  orthogonal to phi.
CVector deviation_apply(const Observable& F, const StateVector& phi);

/// Mean and variance of F in phi. The variance is the squared norm of the
/// deviation vector; this stays accurate near eigenstates where the
/// <F^2> - <F>^2 form cancels catastrophically.
MomentReport moments(const Observable& F, const StateVector& phi);

/// The moment-subtraction variance <F^2> - <F>^2, exposed as an independent
/// cross-check path only. Agrees with moments().variance within
/// kConsistency * (1 + max_abs(F)^2).
double variance_moment_form(const Observable& F, const StateVector& phi);

/// AB - BA. Anti-Hermitian up to rounding.
CMatrix commutator(const Observable& A, const Observable& B);

/// Mixed correlation <phi| deltaA deltaB |phi> together with the commutator
/// expectation. Enforces  <[A,B]>_phi = 2i Im<deltaA deltaB>_phi  within
/// kConsistency * scale_of(A, B).
CorrelationReport correlation(const Observable& A, const Observable& B, const StateVector& phi);

}  // namespace qbound::quantum
