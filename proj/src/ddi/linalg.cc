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


#include "ddi/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "ddi/errors.h"

namespace ddi {

Matrix::Matrix(size_t rows, size_t cols, double fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        if (r.size() != cols_) {
            throw ContractError("Matrix rows have unequal lengths.");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m(k, k) = 1;
    }
    return m;
}

Matrix Matrix::diagonal(std::span<const double> diag) {
    Matrix m(diag.size(), diag.size());
    for (size_t k = 0; k < diag.size(); k++) {
        m(k, k) = diag[k];
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector> &rows) {
    if (rows.empty()) {
        return {};
    }
    Matrix m(rows.size(), rows[0].size());
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != m.cols_) {
            throw ContractError("Matrix rows have unequal lengths.");
        }
        std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * m.cols_);
    }
    return m;
}

Matrix Matrix::outer(std::span<const double> a, std::span<const double> b) {
    Matrix m(a.size(), b.size());
    for (size_t r = 0; r < a.size(); r++) {
        for (size_t c = 0; c < b.size(); c++) {
            m(r, c) = a[r] * b[c];
        }
    }
    return m;
}

Vector Matrix::row(size_t r) const {
    auto s = row_span(r);
    return {s.begin(), s.end()};
}

Vector Matrix::col(size_t c) const {
    Vector v(rows_);
    for (size_t r = 0; r < rows_; r++) {
        v[r] = (*this)(r, c);
    }
    return v;
}

void Matrix::set_col(size_t c, std::span<const double> values) {
    for (size_t r = 0; r < rows_; r++) {
        (*this)(r, c) = values[r];
    }
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

double Matrix::max_abs() const {
    return ddi::max_abs(data_);
}

bool Matrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](double x) {
        return std::isfinite(x);
    });
}

std::string Matrix::str() const {
    std::stringstream ss;
    ss.precision(6);
    for (size_t r = 0; r < rows_; r++) {
        ss << (r == 0 ? "[[" : " [");
        for (size_t c = 0; c < cols_; c++) {
            ss << (c ? ", " : "") << (*this)(r, c);
        }
        ss << (r + 1 == rows_ ? "]]" : "]\n");
    }
    if (rows_ == 0) {
        ss << "[]";
    }
    return ss.str();
}

Matrix &Matrix::operator+=(const Matrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw ContractError("Matrix shape mismatch in +=.");
    }
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] += other.data_[k];
    }
    return *this;
}

Matrix &Matrix::operator-=(const Matrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw ContractError("Matrix shape mismatch in -=.");
    }
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

Matrix &Matrix::operator*=(double s) {
    for (double &x : data_) {
        x *= s;
    }
    return *this;
}

Matrix operator+(Matrix a, const Matrix &b) {
    a += b;
    return a;
}

Matrix operator-(Matrix a, const Matrix &b) {
    a -= b;
    return a;
}

Matrix operator*(Matrix a, double s) {
    a *= s;
    return a;
}

Matrix operator*(double s, Matrix a) {
    a *= s;
    return a;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
    if (a.cols() != b.rows()) {
        throw ContractError("Matrix shape mismatch in product.");
    }
    Matrix out(a.rows(), b.cols());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t k = 0; k < a.cols(); k++) {
            double x = a(r, k);
            if (x == 0) {
                continue;
            }
            for (size_t c = 0; c < b.cols(); c++) {
                out(r, c) += x * b(k, c);
            }
        }
    }
    return out;
}

Vector operator*(const Matrix &a, std::span<const double> x) {
    if (a.cols() != x.size()) {
        throw ContractError("Matrix-vector shape mismatch.");
    }
    Vector out(a.rows());
    for (size_t r = 0; r < a.rows(); r++) {
        out[r] = dot(a.row_span(r), x);
    }
    return out;
}

double max_abs_diff(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ContractError("Matrix shape mismatch in max_abs_diff.");
    }
    return max_abs_diff(a.data(), b.data());
}

double dot(std::span<const double> a, std::span<const double> b) {
    double t = 0;
    for (size_t k = 0; k < a.size(); k++) {
        t += a[k] * b[k];
    }
    return t;
}

double norm2(std::span<const double> a) {
    return std::sqrt(dot(a, a));
}

double max_abs(std::span<const double> a) {
    double m = 0;
    for (double x : a) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw ContractError("Vector length mismatch in max_abs_diff.");
    }
    double m = 0;
    for (size_t k = 0; k < a.size(); k++) {
        m = std::max(m, std::abs(a[k] - b[k]));
    }
    return m;
}

bool fix_sign(std::span<double> v) {
    size_t best = 0;
    double best_abs = -1;
    for (size_t k = 0; k < v.size(); k++) {
        if (std::abs(v[k]) > best_abs) {
            best_abs = std::abs(v[k]);
            best = k;
        }
    }
    if (best_abs > 0 && v[best] < 0) {
        for (double &x : v) {
            x = -x;
        }
        return true;
    }
    return false;
}

namespace {

void sort_descending(Vector &values, Matrix &vectors, Matrix *partner = nullptr) {
    std::vector<size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return values[a] > values[b];
    });
    Vector sorted(values.size());
    Matrix sorted_vectors(vectors.rows(), vectors.cols());
    Matrix sorted_partner;
    if (partner != nullptr) {
        sorted_partner = Matrix(partner->rows(), partner->cols());
    }
    for (size_t k = 0; k < order.size(); k++) {
        sorted[k] = values[order[k]];
        sorted_vectors.set_col(k, vectors.col(order[k]));
        if (partner != nullptr) {
            sorted_partner.set_col(k, partner->col(order[k]));
        }
    }
    values = std::move(sorted);
    vectors = std::move(sorted_vectors);
    if (partner != nullptr) {
        *partner = std::move(sorted_partner);
    }
}

Svd svd_tall(const Matrix &a) {
    size_t m = a.rows();
    size_t n = a.cols();
    Matrix u = a;
    Matrix v = Matrix::identity(n);
    constexpr double kOrthoTol = 1e-15;
    for (int sweep = 0; sweep < 80; sweep++) {
        bool rotated = false;
        for (size_t p = 0; p + 1 < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                double alpha = 0, beta = 0, gamma = 0;
                for (size_t i = 0; i < m; i++) {
                    alpha += u(i, p) * u(i, p);
                    beta += u(i, q) * u(i, q);
                    gamma += u(i, p) * u(i, q);
                }
                if (alpha == 0 || beta == 0 || std::abs(gamma) <= kOrthoTol * std::sqrt(alpha * beta)) {
                    continue;
                }
                rotated = true;
                double zeta = (beta - alpha) / (2 * gamma);
                double t;
                if (std::abs(zeta) > 1e150) {
                    t = 0.5 / zeta;
                } else {
                    t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1 + zeta * zeta));
                }
                double c = 1 / std::sqrt(1 + t * t);
                double s = c * t;
                for (size_t i = 0; i < m; i++) {
                    double up = u(i, p);
                    double uq = u(i, q);
                    u(i, p) = c * up - s * uq;
                    u(i, q) = s * up + c * uq;
                }
                for (size_t i = 0; i < n; i++) {
                    double vp = v(i, p);
                    double vq = v(i, q);
                    v(i, p) = c * vp - s * vq;
                    v(i, q) = s * vp + c * vq;
                }
            }
        }
        if (!rotated) {
            break;
        }
    }

    Vector sigma(n);
    for (size_t k = 0; k < n; k++) {
        sigma[k] = norm2(u.col(k));
    }
    sort_descending(sigma, u, &v);
    for (size_t k = 0; k < n; k++) {
        Vector uk = u.col(k);
        Vector vk = v.col(k);
        if (sigma[k] > 0) {
            for (double &x : uk) {
                x /= sigma[k];
            }
            if (fix_sign(uk)) {
                for (double &x : vk) {
                    x = -x;
                }
            }
        } else {
            std::fill(uk.begin(), uk.end(), 0.0);
            fix_sign(vk);
        }
        u.set_col(k, uk);
        v.set_col(k, vk);
    }
    return {std::move(u), std::move(sigma), std::move(v)};
}

}  // namespace

EigDecomposition sym_eig(const Matrix &s) {
    if (s.rows() != s.cols()) {
        throw ContractError("sym_eig requires a square matrix, got " + std::to_string(s.rows()) + "x" +
                            std::to_string(s.cols()) + ".");
    }
    size_t n = s.rows();
    double scale = s.max_abs();
    if (max_abs_diff(s, s.transpose()) > 1e-12 * scale) {
        throw ContractError("sym_eig requires a symmetric matrix.");
    }

    Matrix a(n, n);
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            a(r, c) = 0.5 * (s(r, c) + s(c, r));
        }
    }
    Matrix v = Matrix::identity(n);

    for (int sweep = 0; sweep < 100; sweep++) {
        double off = 0;
        double total = 0;
        for (size_t r = 0; r < n; r++) {
            for (size_t c = 0; c < n; c++) {
                total += a(r, c) * a(r, c);
                if (r != c) {
                    off += a(r, c) * a(r, c);
                }
            }
        }
        if (off == 0 || std::sqrt(off) <= 1e-17 * std::sqrt(total)) {
            break;
        }
        for (size_t p = 0; p + 1 < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                double apq = a(p, q);
                if (apq == 0) {
                    continue;
                }
                double theta = (a(q, q) - a(p, p)) / (2 * apq);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                }
                double c = 1 / std::sqrt(t * t + 1);
                double sn = t * c;
                for (size_t k = 0; k < n; k++) {
                    double akp = a(k, p);
                    double akq = a(k, q);
                    a(k, p) = c * akp - sn * akq;
                    a(k, q) = sn * akp + c * akq;
                }
                for (size_t k = 0; k < n; k++) {
                    double apk = a(p, k);
                    double aqk = a(q, k);
                    a(p, k) = c * apk - sn * aqk;
                    a(q, k) = sn * apk + c * aqk;
                }
                for (size_t k = 0; k < n; k++) {
                    double vkp = v(k, p);
                    double vkq = v(k, q);
                    v(k, p) = c * vkp - sn * vkq;
                    v(k, q) = sn * vkp + c * vkq;
                }
            }
        }
    }

    EigDecomposition out;
    out.values.resize(n);
    for (size_t k = 0; k < n; k++) {
        out.values[k] = a(k, k);
    }
    out.vectors = std::move(v);
    sort_descending(out.values, out.vectors);
    for (size_t k = 0; k < n; k++) {
        Vector col = out.vectors.col(k);
        fix_sign(col);
        out.vectors.set_col(k, col);
    }
    return out;
}

Svd svd(const Matrix &a) {
    if (a.rows() >= a.cols()) {
        return svd_tall(a);
    }
    Svd t = svd_tall(a.transpose());
    // The sign convention is defined on u; re-apply it after swapping roles.
    for (size_t k = 0; k < t.sigma.size(); k++) {
        Vector uk = t.v.col(k);
        if (t.sigma[k] > 0 && fix_sign(uk)) {
            Vector vk = t.u.col(k);
            for (double &x : vk) {
                x = -x;
            }
            t.u.set_col(k, vk);
            t.v.set_col(k, uk);
        }
    }
    return {std::move(t.v), std::move(t.sigma), std::move(t.u)};
}

namespace {

size_t count_above(const Vector &sigma, double tol) {
    if (sigma.empty() || sigma[0] <= 0) {
        return 0;
    }
    double cut = tol * sigma[0];
    size_t r = 0;
    while (r < sigma.size() && sigma[r] > cut) {
        r++;
    }
    return r;
}

}  // namespace

Matrix pinv(const Matrix &a, double tol) {
    if (tol < 0) {
        throw ContractError("pinv tolerance must be non-negative.");
    }
    Svd d = svd(a);
    size_t r = count_above(d.sigma, tol);
    Matrix out(a.cols(), a.rows());
    for (size_t k = 0; k < r; k++) {
        double inv = 1 / d.sigma[k];
        for (size_t i = 0; i < a.cols(); i++) {
            double vi = d.v(i, k) * inv;
            for (size_t j = 0; j < a.rows(); j++) {
                out(i, j) += vi * d.u(j, k);
            }
        }
    }
    return out;
}

size_t rank(const Matrix &a, double tol) {
    if (tol < 0) {
        throw ContractError("rank tolerance must be non-negative.");
    }
    if (a.empty()) {
        return 0;
    }
    return count_above(svd(a).sigma, tol);
}

Matrix range_basis(const Matrix &a, double tol) {
    if (tol < 0) {
        throw ContractError("range_basis tolerance must be non-negative.");
    }
    if (a.empty()) {
        return Matrix(a.rows(), 0);
    }
    Svd d = svd(a);
    size_t r = count_above(d.sigma, tol);
    Matrix basis(a.rows(), r);
    for (size_t k = 0; k < r; k++) {
        basis.set_col(k, d.u.col(k));
    }
    return basis;
}

Matrix spd_inverse(const Matrix &a) {
    if (a.rows() != a.cols()) {
        throw ContractError("spd_inverse requires a square matrix.");
    }
    size_t n = a.rows();
    Matrix l(n, n);
    for (size_t j = 0; j < n; j++) {
        double d = a(j, j);
        for (size_t k = 0; k < j; k++) {
            d -= l(j, k) * l(j, k);
        }
        if (!(d > 0)) {
            throw ContractError("spd_inverse: matrix is not positive definite.");
        }
        l(j, j) = std::sqrt(d);
        for (size_t i = j + 1; i < n; i++) {
            double s = a(i, j);
            for (size_t k = 0; k < j; k++) {
                s -= l(i, k) * l(j, k);
            }
            l(i, j) = s / l(j, j);
        }
    }
    // Invert L by forward substitution, then inv(A) = inv(L)^T inv(L).
    Matrix linv(n, n);
    for (size_t c = 0; c < n; c++) {
        for (size_t r = c; r < n; r++) {
            double s = r == c ? 1.0 : 0.0;
            for (size_t k = c; k < r; k++) {
                s -= l(r, k) * linv(k, c);
            }
            linv(r, c) = s / l(r, r);
        }
    }
    Matrix out = linv.transpose() * linv;
    for (size_t r = 0; r < n; r++) {
        for (size_t c = r + 1; c < n; c++) {
            double m = 0.5 * (out(r, c) + out(c, r));
            out(r, c) = m;
            out(c, r) = m;
        }
    }
    return out;
}

}  // namespace ddi
