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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qbound/errors.hpp"
#include "qbound/tolerances.hpp"

/// Dense complex vector/matrix kernel for small dimensions (2 <= d <= ~64).
/// All operations are pure functions on immutable values and are safe for
/// concurrent use. Non-finite entries are rejected at construction.

namespace qbound::linalg {

using Complex = std::complex<double>;

class CVector {
  public:
    CVector() = default;

    /// Zero vector of the given dimension.
    explicit CVector(std::size_t dim) : entries_(dim, Complex{0.0, 0.0}) {}

    CVector(std::initializer_list<Complex> entries);
    explicit CVector(std::vector<Complex> entries);

    std::size_t dim() const noexcept { return entries_.size(); }

    Complex& operator[](std::size_t i) { return entries_[i]; }
    const Complex& operator[](std::size_t i) const { return entries_[i]; }

    const std::vector<Complex>& entries() const noexcept { return entries_; }

    CVector& operator+=(const CVector& rhs);
    CVector& operator-=(const CVector& rhs);
    CVector& operator*=(Complex c);

    friend CVector operator+(CVector lhs, const CVector& rhs) { return lhs += rhs; }
    friend CVector operator-(CVector lhs, const CVector& rhs) { return lhs -= rhs; }
    friend CVector operator*(Complex c, CVector v) { return v *= c; }
    friend CVector operator*(CVector v, Complex c) { return v *= c; }

  private:
    std::vector<Complex> entries_;
};

/// Square complex matrix, row-major storage.
class CMatrix {
  public:
    CMatrix() = default;

    /// Zero matrix of the given dimension.
    explicit CMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, Complex{0.0, 0.0}) {}

    /// Row-major entries; `entries.size()` must be `dim * dim`.
    CMatrix(std::size_t dim, std::vector<Complex> entries);

    /// Build from a nested row list (convenient for literals in tests).
    CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static CMatrix identity(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }

    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    const std::vector<Complex>& entries() const noexcept { return entries_; }

    CMatrix adjoint() const;
    Complex trace() const;

    CMatrix& operator+=(const CMatrix& rhs);
    CMatrix& operator-=(const CMatrix& rhs);
    CMatrix& operator*=(Complex c);

    friend CMatrix operator+(CMatrix lhs, const CMatrix& rhs) { return lhs += rhs; }
    friend CMatrix operator-(CMatrix lhs, const CMatrix& rhs) { return lhs -= rhs; }
    friend CMatrix operator*(Complex c, CMatrix m) { return m *= c; }
    friend CMatrix operator*(CMatrix m, Complex c) { return m *= c; }
    friend CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs);

  private:
    std::size_t dim_ = 0;
    std::vector<Complex> entries_;
};

/// Bra-ket inner product <u|v>: conjugate-linear in the FIRST argument,
/// linear in the second. inner(v, v) is real and non-negative.
Complex inner(const CVector& u, const CVector& v);

/// Matrix-vector product M|v>.
CVector apply(const CMatrix& M, const CVector& v);

/// Euclidean norm ||v||.
double norm(const CVector& v);

/// v / ||v||. Throws DegenerateVectorError when ||v|| <= tol.
CVector normalize(const CVector& v, double tol = tol::kNormalization);

/// Largest entry magnitude; the matrix norm used in every relative
/// tolerance of this library.
double max_abs(const CMatrix& M);
double max_abs(const CVector& v);

/// max|M - M^dag| <= tol * (1 + max|M|).
bool is_hermitian(const CMatrix& M, double tol = tol::kHermiticity);

/// Component of v orthogonal to the unit vector phi:  v - <phi|v> phi.
/// The zero vector is a legal result.
CVector project_orthogonal(const CVector& v, const CVector& phi);

struct Eigensystem {
    std::vector<double> eigenvalues;   // ascending, ties keep solver order
    std::vector<CVector> eigenvectors; // orthonormal, eigenvectors[k] pairs with eigenvalues[k]
};

/// Dense Hermitian eigensolver (cyclic Jacobi with complex rotations).
/// Accuracy: ||M v_k - lambda_k v_k|| <= d * tol * max_abs(M), eigenvector
/// set orthonormal to machine precision. Degenerate eigenspaces come out in
/// an arbitrary basis; callers must not rely on a particular choice.
/// Throws ValidationError for non-Hermitian input.
Eigensystem hermitian_eigensystem(const CMatrix& M, double tol = tol::kHermiticity);

}  // namespace qbound::linalg
