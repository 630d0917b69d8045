// Copyright 2026 The ddi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef DDI_LINALG_H
#define DDI_LINALG_H

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ddi {

using Vector = std::vector<double>;

/// Small dense real matrix stored row-major.
///
/// Sized for the problems in this library (tens of rows and columns); every
/// operation is a straightforward O(n^3) loop.
class Matrix {
   public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols, double fill = 0.0);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(size_t n);
    static Matrix diagonal(std::span<const double> diag);
    /// Matrix whose rows are the given vectors (all of equal length).
    static Matrix from_rows(const std::vector<Vector> &rows);
    static Matrix outer(std::span<const double> a, std::span<const double> b);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    bool empty() const {
        return data_.empty();
    }

    double &operator()(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }
    double operator()(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }

    std::span<const double> data() const {
        return data_;
    }
    std::span<const double> row_span(size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    Vector row(size_t r) const;
    Vector col(size_t c) const;
    void set_col(size_t c, std::span<const double> values);

    Matrix transpose() const;
    double max_abs() const;
    bool all_finite() const;
    std::string str() const;

    Matrix &operator+=(const Matrix &other);
    Matrix &operator-=(const Matrix &other);
    Matrix &operator*=(double s);

    bool operator==(const Matrix &other) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix operator+(Matrix a, const Matrix &b);
Matrix operator-(Matrix a, const Matrix &b);
Matrix operator*(Matrix a, double s);
Matrix operator*(double s, Matrix a);
Matrix operator*(const Matrix &a, const Matrix &b);
Vector operator*(const Matrix &a, std::span<const double> x);

double max_abs_diff(const Matrix &a, const Matrix &b);

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);
double max_abs(std::span<const double> a);
double max_abs_diff(std::span<const double> a, std::span<const double> b);

inline constexpr double kDefaultRankTol = 1e-10;

struct EigDecomposition {
    /// Sorted descending.
    Vector values;
    /// Column k is the unit eigenvector for values[k].
    Matrix vectors;
};

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
///
/// Eigenvalues come out in descending order. Each eigenvector is sign-fixed
/// so that its largest-magnitude entry (lowest index on ties) is positive,
/// which makes the output reproducible across platforms.
///
/// Throws ContractError if `s` is not square or is asymmetric beyond
/// 1e-12 relative to its largest entry.
EigDecomposition sym_eig(const Matrix &s);

/// Thin singular value decomposition a = u * diag(sigma) * v^T.
struct Svd {
    Matrix u;      // rows x k
    Vector sigma;  // k values, descending
    Matrix v;      // cols x k
};

/// One-sided (Hestenes) Jacobi SVD with k = min(rows, cols). Columns of `u`
/// belonging to zero singular values are zero.
Svd svd(const Matrix &a);

/// Moore-Penrose pseudoinverse. Singular values at or below
/// `tol * sigma_max` are treated as zero.
Matrix pinv(const Matrix &a, double tol = kDefaultRankTol);

/// Number of singular values strictly above `tol * sigma_max`; 0 for a zero
/// matrix.
size_t rank(const Matrix &a, double tol = kDefaultRankTol);

/// Orthonormal basis (as columns) of the numerical column space of `a`.
/// Returns a rows x 0 matrix when `a` is numerically zero.
Matrix range_basis(const Matrix &a, double tol = kDefaultRankTol);

/// Inverse of a symmetric positive-definite matrix via Cholesky.
/// Throws ContractError if the factorization breaks down.
Matrix spd_inverse(const Matrix &a);

/// Flips `v` so that its largest-magnitude entry (lowest index on ties) is
/// non-negative. Returns true if a flip happened.
bool fix_sign(std::span<double> v);

}  // namespace ddi

#endif
