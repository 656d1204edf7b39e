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
#include "qbound/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

namespace qbound::linalg {

namespace {

void check_finite(const std::vector<Complex>& entries, const char* what) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (!std::isfinite(entries[i].real()) || !std::isfinite(entries[i].imag())) {
            throw ValidationError(std::string(what) + ": non-finite entry at index " +
                                  std::to_string(i));
        }
    }
}

void check_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                             " vs " + std::to_string(b) + ")");
    }
}

}  // namespace

CVector::CVector(std::initializer_list<Complex> entries) : entries_(entries) {
    check_finite(entries_, "CVector");
}

CVector::CVector(std::vector<Complex> entries) : entries_(std::move(entries)) {
    check_finite(entries_, "CVector");
}

CVector& CVector::operator+=(const CVector& rhs) {
    check_same_dim(dim(), rhs.dim(), "CVector::operator+=");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

CVector& CVector::operator-=(const CVector& rhs) {
    check_same_dim(dim(), rhs.dim(), "CVector::operator-=");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
    return *this;
}

CVector& CVector::operator*=(Complex c) {
    for (auto& e : entries_) e *= c;
    return *this;
}

CMatrix::CMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_) {
        throw DimensionError("CMatrix: expected " + std::to_string(dim_ * dim_) +
                             " entries, got " + std::to_string(entries_.size()));
    }
    check_finite(entries_, "CMatrix");
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    dim_ = rows.size();
    entries_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
        if (row.size() != dim_) {
            throw DimensionError("CMatrix: ragged row (expected " + std::to_string(dim_) +
                                 " columns, got " + std::to_string(row.size()) + ")");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    check_finite(entries_, "CMatrix");
}

CMatrix CMatrix::identity(std::size_t dim) {
    CMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = Complex{1.0, 0.0};
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

Complex CMatrix::trace() const {
    Complex t{0.0, 0.0};
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

CMatrix& CMatrix::operator+=(const CMatrix& rhs) {
    check_same_dim(dim_, rhs.dim_, "CMatrix::operator+=");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& rhs) {
    check_same_dim(dim_, rhs.dim_, "CMatrix::operator-=");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
    return *this;
}

CMatrix& CMatrix::operator*=(Complex c) {
    for (auto& e : entries_) e *= c;
    return *this;
}

CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs) {
    check_same_dim(lhs.dim(), rhs.dim(), "CMatrix::operator*");
    const std::size_t d = lhs.dim();
    CMatrix out(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            const Complex lik = lhs(i, k);
            if (lik == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < d; ++j) out(i, j) += lik * rhs(k, j);
        }
    }
    return out;
}

Complex inner(const CVector& u, const CVector& v) {
    check_same_dim(u.dim(), v.dim(), "inner");
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < u.dim(); ++i) acc += std::conj(u[i]) * v[i];
    return acc;
}

CVector apply(const CMatrix& M, const CVector& v) {
    check_same_dim(M.dim(), v.dim(), "apply");
    const std::size_t d = M.dim();
    CVector out(d);
    for (std::size_t i = 0; i < d; ++i) {
        Complex acc{0.0, 0.0};
        for (std::size_t j = 0; j < d; ++j) acc += M(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

double norm(const CVector& v) {
    double acc = 0.0;
    for (std::size_t i = 0; i < v.dim(); ++i) acc += std::norm(v[i]);
    return std::sqrt(acc);
}

CVector normalize(const CVector& v, double tol) {
    const double n = norm(v);
    if (!(n > tol)) {
        throw DegenerateVectorError("normalize: degenerate direction, ||v|| = " +
                                    std::to_string(n));
    }
    CVector out = v;
    out *= Complex{1.0 / n, 0.0};
    return out;
}

double max_abs(const CMatrix& M) {
    double m = 0.0;
    for (const auto& e : M.entries()) m = std::max(m, std::abs(e));
    return m;
}

double max_abs(const CVector& v) {
    double m = 0.0;
    for (const auto& e : v.entries()) m = std::max(m, std::abs(e));
    return m;
}

bool is_hermitian(const CMatrix& M, double tol) {
    if (tol < 0.0) throw ValidationError("is_hermitian: tol must be >= 0");
    const std::size_t d = M.dim();
    double worst = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j)
            worst = std::max(worst, std::abs(M(i, j) - std::conj(M(j, i))));
    return worst <= tol * (1.0 + max_abs(M));
}

CVector project_orthogonal(const CVector& v, const CVector& phi) {
    check_same_dim(v.dim(), phi.dim(), "project_orthogonal");
    const double phi_norm = norm(phi);
    if (std::abs(phi_norm - 1.0) > 1e-10) {
        throw ValidationError("project_orthogonal: phi must be unit norm, got ||phi|| = " +
                              std::to_string(phi_norm));
    }
    const Complex overlap = inner(phi, v);
    CVector out = v;
    for (std::size_t i = 0; i < out.dim(); ++i) out[i] -= overlap * phi[i];
    return out;
}

namespace {

// One complex Jacobi rotation zeroing a(p,q). The 2x2 pivot block
// [[app, apq], [conj(apq), aqq]] is reduced to the real symmetric case by
// the phase of apq, then rotated with the classic minimal-angle tangent.
struct JacobiRotation {
    double c;      // cosine, real
    Complex phase; // e^{i arg(apq)}
    double s;      // sine, real
};

JacobiRotation make_rotation(double app, double aqq, Complex apq) {
    const double r = std::abs(apq);
    const Complex phase = apq / r;
    const double tau = (app - aqq) / (2.0 * r);
    double t;
    if (tau >= 0.0) {
        t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
    } else {
        t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    return {c, phase, t * c};
}

double max_offdiag(const CMatrix& a) {
    double m = 0.0;
    const std::size_t d = a.dim();
    for (std::size_t p = 0; p + 1 < d; ++p)
        for (std::size_t q = p + 1; q < d; ++q) m = std::max(m, std::abs(a(p, q)));
    return m;
}

}  // namespace

Eigensystem hermitian_eigensystem(const CMatrix& M, double tol) {
    if (!is_hermitian(M, tol)) {
        throw ValidationError("hermitian_eigensystem: input is not Hermitian within tolerance");
    }
    const std::size_t d = M.dim();
    if (d == 0) return {};

    // Scrub rounding-level asymmetry so the iteration sees an exactly
    // Hermitian matrix.
    CMatrix a = M;
    a += M.adjoint();
    a *= Complex{0.5, 0.0};

    CMatrix v = CMatrix::identity(d);
    const double scale = max_abs(a);
    const double stop = std::numeric_limits<double>::epsilon() * scale * static_cast<double>(d);

    constexpr int kMaxSweeps = 60;
    for (int sweep = 0; sweep < kMaxSweeps && max_offdiag(a) > stop; ++sweep) {
        for (std::size_t p = 0; p + 1 < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                const Complex apq = a(p, q);
                if (std::abs(apq) <= stop) continue;

                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const auto [c, phase, s] = make_rotation(app, aqq, apq);
                const Complex phase_conj = std::conj(phase);

                // A <- U^dag A U with U = I except the (p,q) block
                // [[c, -s*phase], [s*conj(phase), c]].
                for (std::size_t k = 0; k < d; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp + s * phase_conj * akq;
                    a(k, q) = -s * phase * akp + c * akq;
                }
                for (std::size_t k = 0; k < d; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk + s * phase * aqk;
                    a(q, k) = -s * phase_conj * apk + c * aqk;
                }
                const double r = std::abs(apq);
                a(p, p) = Complex{app * c * c + 2.0 * r * s * c + aqq * s * s, 0.0};
                a(q, q) = Complex{app * s * s - 2.0 * r * s * c + aqq * c * c, 0.0};
                a(p, q) = Complex{0.0, 0.0};
                a(q, p) = Complex{0.0, 0.0};

                // V <- V U, columns accumulate the eigenvectors.
                for (std::size_t k = 0; k < d; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = c * vkp + s * phase_conj * vkq;
                    v(k, q) = -s * phase * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&a](std::size_t i, std::size_t j) {
        return a(i, i).real() < a(j, j).real();
    });

    Eigensystem out;
    out.eigenvalues.reserve(d);
    out.eigenvectors.reserve(d);
    for (std::size_t k = 0; k < d; ++k) {
        const std::size_t col = order[k];
        out.eigenvalues.push_back(a(col, col).real());
        CVector vec(d);
        for (std::size_t i = 0; i < d; ++i) vec[i] = v(i, col);
        out.eigenvectors.push_back(std::move(vec));
    }
    return out;
}

}  // namespace qbound::linalg
