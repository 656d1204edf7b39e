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
#include "qbound/quantum.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace qbound::quantum {

using linalg::apply;
using linalg::inner;
using linalg::max_abs;

namespace {

void check_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                             " vs " + std::to_string(b) + ")");
    }
}

}  // namespace

StateVector::StateVector(CVector vec) : vec_(std::move(vec)) {
    const double n = linalg::norm(vec_);
    if (std::abs(n - 1.0) > tol::kNormalization) {
        throw ValidationError("StateVector: not unit norm, ||v|| = " + std::to_string(n));
    }
}

StateVector StateVector::normalized(const CVector& vec) {
    return StateVector(linalg::normalize(vec));
}

Observable::Observable(CMatrix mat) : mat_(std::move(mat)) {
    if (!linalg::is_hermitian(mat_, tol::kHermiticity)) {
        // Name the worst offending entry; CLI validation surfaces this.
        const std::size_t d = mat_.dim();
        double worst = -1.0;
        std::size_t wi = 0, wj = 0;
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = i; j < d; ++j) {
                const double dev = std::abs(mat_(i, j) - std::conj(mat_(j, i)));
                if (dev > worst) {
                    worst = dev;
                    wi = i;
                    wj = j;
                }
            }
        }
        throw ValidationError("Observable: matrix is not Hermitian; entry (" +
                              std::to_string(wi) + "," + std::to_string(wj) +
                              ") deviates from its mirror by " + std::to_string(worst));
    }
}

Observable Observable::pauli_x() {
    return Observable(CMatrix{{{0.0, 0.0}, {1.0, 0.0}}, {{1.0, 0.0}, {0.0, 0.0}}});
}

Observable Observable::pauli_y() {
    return Observable(CMatrix{{{0.0, 0.0}, {0.0, -1.0}}, {{0.0, 1.0}, {0.0, 0.0}}});
}

Observable Observable::pauli_z() {
    return Observable(CMatrix{{{1.0, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {-1.0, 0.0}}});
}

Observable Observable::identity(std::size_t dim) {
    return Observable(CMatrix::identity(dim));
}

double scale_of(const Observable& A, const Observable& B) {
    return 1.0 + max_abs(A.mat()) * max_abs(B.mat());
}

double expectation(const Observable& F, const StateVector& phi) {
    check_same_dim(F.dim(), phi.dim(), "expectation");
    const Complex val = inner(phi.vec(), apply(F.mat(), phi.vec()));
    const double allowed = tol::kConsistency * (1.0 + max_abs(F.mat()));
    if (std::abs(val.imag()) > allowed) {
        throw ConsistencyError("expectation: imaginary residue " + std::to_string(val.imag()) +
                               " exceeds " + std::to_string(allowed));
    }
    return val.real();
}

CVector deviation_apply(const Observable& F, const StateVector& phi) {
    check_same_dim(F.dim(), phi.dim(), "deviation_apply");
    const double mean = expectation(F, phi);
    CVector out = apply(F.mat(), phi.vec());
    for (std::size_t i = 0; i < out.dim(); ++i) out[i] -= mean * phi.vec()[i];
    return out;
}

MomentReport moments(const Observable& F, const StateVector& phi) {
    check_same_dim(F.dim(), phi.dim(), "moments");
    const double mean = expectation(F, phi);
    const CVector dev = deviation_apply(F, phi);
    double variance = 0.0;
    for (std::size_t i = 0; i < dev.dim(); ++i) variance += std::norm(dev[i]);
    return {mean, variance, std::sqrt(variance)};
}

double variance_moment_form(const Observable& F, const StateVector& phi) {
    check_same_dim(F.dim(), phi.dim(), "variance_moment_form");
    const CVector fphi = apply(F.mat(), phi.vec());
    const double second = inner(fphi, fphi).real(); // <F^2> via ||F phi||^2, F Hermitian
    const double mean = expectation(F, phi);
    return second - mean * mean;
}

CMatrix commutator(const Observable& A, const Observable& B) {
    check_same_dim(A.dim(), B.dim(), "commutator");
    return A.mat() * B.mat() - B.mat() * A.mat();
}

CorrelationReport correlation(const Observable& A, const Observable& B, const StateVector& phi) {
    check_same_dim(A.dim(), B.dim(), "correlation");
    check_same_dim(A.dim(), phi.dim(), "correlation");

    const CVector dev_a = deviation_apply(A, phi);
    const CVector dev_b = deviation_apply(B, phi);
    const Complex corr = inner(dev_a, dev_b);

    const Complex comm_exp = inner(phi.vec(), apply(commutator(A, B), phi.vec()));
    const double scale = scale_of(A, B);
    if (std::abs(comm_exp.real()) > tol::kConsistency * scale) {
        throw ConsistencyError("correlation: commutator expectation has real part " +
                               std::to_string(comm_exp.real()));
    }
    // <[A,B]>_phi = 2i Im<deltaA deltaB>_phi
    if (std::abs(comm_exp.imag() - 2.0 * corr.imag()) > tol::kConsistency * scale) {
        throw ConsistencyError("correlation: commutator identity violated by " +
                               std::to_string(comm_exp.imag() - 2.0 * corr.imag()));
    }
    return {corr, corr.real(), corr.imag(), comm_exp};
}

}  // namespace qbound::quantum
