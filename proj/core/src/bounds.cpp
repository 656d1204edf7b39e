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
#include "qbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qbound::bounds {

using linalg::apply;
using linalg::Complex;
using linalg::CVector;
using linalg::inner;
using quantum::scale_of;

namespace {

void check_sign(int sign) {
    if (sign != 1 && sign != -1) {
        throw ValidationError("mp1: sign must be +1 or -1, got " + std::to_string(sign));
    }
}

/// +-i<[A,B]> as a real number: with <[A,B]> = i c (c real), the term is
/// -sign * c. correlation() enforces the purely-imaginary contract.
double mp1_commutator_term(const Observable& A, const Observable& B, const StateVector& phi,
                           int sign) {
    const auto corr = quantum::correlation(A, B, phi);
    return -static_cast<double>(sign) * corr.commutator_expectation.imag();
}

/// Deterministic unit vector orthogonal to phi: standard basis vector with
/// the smallest |phi_k| component, projected and normalized.
StateVector fallback_orthogonal(const StateVector& phi) {
    const std::size_t d = phi.dim();
    std::size_t k = 0;
    double smallest = std::abs(phi.vec()[0]);
    for (std::size_t i = 1; i < d; ++i) {
        const double a = std::abs(phi.vec()[i]);
        if (a < smallest) {
            smallest = a;
            k = i;
        }
    }
    CVector basis(d);
    basis[k] = Complex{1.0, 0.0};
    return StateVector::normalized(linalg::project_orthogonal(basis, phi.vec()));
}

}  // namespace

HRReport hr_bound(const Observable& A, const Observable& B, const StateVector& phi) {
    const auto ma = quantum::moments(A, phi);
    const auto mb = quantum::moments(B, phi);
    const auto corr = quantum::correlation(A, B, phi);
    const double lhs = ma.std_dev * mb.std_dev;
    const double rhs = 0.5 * std::abs(corr.commutator_expectation);
    return {lhs, rhs, lhs - rhs};
}

MP1Report mp1_bound(const Observable& A, const Observable& B, const StateVector& phi,
                    const StateVector& perp, int sign) {
    check_sign(sign);
    if (perp.dim() != phi.dim()) throw DimensionError("mp1_bound: perp dimension mismatch");
    const double overlap_with_phi = std::abs(inner(phi.vec(), perp.vec()));
    if (overlap_with_phi > 1e-8) {
        throw ValidationError("mp1_bound: perp state not orthogonal to phi, |<phi|perp>| = " +
                              std::to_string(overlap_with_phi));
    }

    const double comm_term = mp1_commutator_term(A, B, phi, sign);

    // <phi|(A + sign*iB)|perp>
    const CVector a_perp = apply(A.mat(), perp.vec());
    const CVector b_perp = apply(B.mat(), perp.vec());
    const Complex i_sign{0.0, static_cast<double>(sign)};
    const Complex amplitude = inner(phi.vec(), a_perp) + i_sign * inner(phi.vec(), b_perp);
    const double overlap_term = std::norm(amplitude);

    return {sign, perp, comm_term, overlap_term, comm_term + overlap_term, false};
}

MP1Report mp1_optimal(const Observable& A, const Observable& B, const StateVector& phi, int sign,
                      double eps_eigen) {
    check_sign(sign);
    if (phi.dim() < 2) {
        throw DimensionError("mp1_optimal: no orthogonal complement in dimension " +
                             std::to_string(phi.dim()));
    }
    // The overlap term is |<(A -+ iB)phi | perp>|^2; over unit perp
    // orthogonal to phi it is maximized by the projected image itself.
    const CVector a_phi = apply(A.mat(), phi.vec());
    const CVector b_phi = apply(B.mat(), phi.vec());
    const Complex i_conj{0.0, -static_cast<double>(sign)};
    CVector target = a_phi;
    for (std::size_t i = 0; i < target.dim(); ++i) target[i] += i_conj * b_phi[i];

    const CVector projected = linalg::project_orthogonal(target, phi.vec());
    if (linalg::norm(projected) <= eps_eigen) {
        MP1Report report{sign, fallback_orthogonal(phi),
                         mp1_commutator_term(A, B, phi, sign), 0.0, 0.0, true};
        report.rhs = report.commutator_term;
        return report;
    }
    return mp1_bound(A, B, phi, StateVector::normalized(projected), sign);
}

double mp2_bound(const Observable& A, const Observable& B, const StateVector& phi) {
    const Observable sum(A.mat() + B.mat());
    return 0.5 * quantum::moments(sum, phi).variance;
}

std::optional<double> mp2_bound_av_form(const Observable& A, const Observable& B,
                                        const StateVector& phi, double eps_eigen) {
    const Observable sum(A.mat() + B.mat());
    const av::AVDecomposition dec = av::av_decompose(sum, phi, eps_eigen);
    if (!dec.perp_state) return std::nullopt;
    const Complex element = inner(dec.perp_state->vec(), apply(sum.mat(), phi.vec()));
    return 0.5 * std::norm(element);
}

double m12a_rhs(const Observable& A, const Observable& B, const StateVector& phi) {
    return 2.0 * std::abs(quantum::correlation(A, B, phi).re_part);
}

BoundSuiteReport bound_suite(const Observable& A, const Observable& B, const StateVector& phi,
                             double eps_eigen) {
    const auto ma = quantum::moments(A, phi);
    const auto mb = quantum::moments(B, phi);
    const double lhs_sum = ma.variance + mb.variance;

    const HRReport hr = hr_bound(A, B, phi);
    const MP1Report plus = mp1_optimal(A, B, phi, +1, eps_eigen);
    const MP1Report minus = mp1_optimal(A, B, phi, -1, eps_eigen);
    const double mp1_best = std::max(plus.rhs, minus.rhs);
    const double mp2 = mp2_bound(A, B, phi);
    const double m12a = m12a_rhs(A, B, phi);

    const double scale = scale_of(A, B);
    const bool self_referential = std::min(ma.std_dev, mb.std_dev) <= eps_eigen * scale;

    return {phi.dim(),
            lhs_sum,
            hr,
            plus.rhs,
            minus.rhs,
            mp1_best,
            mp2,
            m12a,
            std::max(mp1_best, mp2),
            self_referential,
            {lhs_sum - plus.rhs, lhs_sum - minus.rhs, lhs_sum - mp1_best, lhs_sum - mp2,
             lhs_sum - m12a}};
}

bool suite_within_validity(const BoundSuiteReport& report, double scale) {
    const double floor = -tol::kSlackFloor * scale;
    return report.hr.slack >= floor && report.slacks.mp1_plus >= floor &&
           report.slacks.mp1_minus >= floor && report.slacks.mp1_best >= floor &&
           report.slacks.mp2 >= floor && report.slacks.m12a >= floor;
}

}  // namespace qbound::bounds
