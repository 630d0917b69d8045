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


#include "ddi/mvee.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ddi/errors.h"

namespace ddi {

AffineReduction affine_reduce(const Matrix &points, double tol_aff) {
    if (points.rows() == 0) {
        throw ContractError("affine_reduce needs at least one point.");
    }
    if (!points.all_finite()) {
        throw ContractError("affine_reduce: non-finite coordinate.");
    }
    size_t m = points.rows();
    size_t n = points.cols();
    Vector origin = points.row(0);

    Matrix diffs(n, m - 1);
    for (size_t x = 1; x < m; x++) {
        for (size_t k = 0; k < n; k++) {
            diffs(k, x - 1) = points(x, k) - origin[k];
        }
    }

    Matrix basis(n, 0);
    if (m > 1) {
        Svd d = svd(diffs);
        size_t nonzero = 0;
        while (nonzero < d.sigma.size() && d.sigma[nonzero] > 0) {
            nonzero++;
        }
        // Smallest dimension whose frame explains every point to tol_aff.
        for (size_t dim = 0; dim <= nonzero; dim++) {
            double worst = 0;
            for (size_t x = 0; x + 1 < m && worst <= tol_aff; x++) {
                Vector r = diffs.col(x);
                for (size_t k = 0; k < dim; k++) {
                    Vector uk = d.u.col(k);
                    double proj = dot(uk, diffs.col(x));
                    for (size_t i = 0; i < n; i++) {
                        r[i] -= proj * uk[i];
                    }
                }
                worst = std::max(worst, max_abs(r));
            }
            if (worst <= tol_aff || dim == nonzero) {
                basis = Matrix(n, dim);
                for (size_t k = 0; k < dim; k++) {
                    basis.set_col(k, d.u.col(k));
                }
                break;
            }
        }
    }

    Matrix reduced(m, basis.cols());
    for (size_t x = 0; x < m; x++) {
        for (size_t k = 0; k < basis.cols(); k++) {
            double s = 0;
            for (size_t i = 0; i < n; i++) {
                s += basis(i, k) * (points(x, i) - origin[i]);
            }
            reduced(x, k) = s;
        }
    }
    return {{std::move(origin), std::move(basis)}, std::move(reduced)};
}

namespace {

FullDimEllipsoid segment_ellipsoid(const Matrix &points) {
    double lo = points(0, 0);
    double hi = points(0, 0);
    for (size_t x = 1; x < points.rows(); x++) {
        lo = std::min(lo, points(x, 0));
        hi = std::max(hi, points(x, 0));
    }
    double half = (hi - lo) / 2;
    return {{(lo + hi) / 2}, Matrix{{1 / (half * half)}}};
}

// Recovers the ellipsoid from barycentric weights over centered points.
FullDimEllipsoid ellipsoid_from_weights(const Matrix &centered, const Vector &u, const Vector &mean) {
    size_t m = centered.rows();
    size_t d = centered.cols();
    Vector c(d, 0.0);
    for (size_t x = 0; x < m; x++) {
        for (size_t k = 0; k < d; k++) {
            c[k] += u[x] * centered(x, k);
        }
    }
    Matrix scatter(d, d);
    for (size_t x = 0; x < m; x++) {
        if (u[x] == 0) {
            continue;
        }
        for (size_t r = 0; r < d; r++) {
            double dr = centered(x, r) - c[r];
            for (size_t s = 0; s < d; s++) {
                scatter(r, s) += u[x] * dr * (centered(x, s) - c[s]);
            }
        }
    }
    Matrix shape = spd_inverse(scatter) * (1.0 / static_cast<double>(d));

    double worst = 0;
    Vector diff(d);
    for (size_t x = 0; x < m; x++) {
        for (size_t k = 0; k < d; k++) {
            diff[k] = centered(x, k) - c[k];
        }
        worst = std::max(worst, dot(diff, shape * diff));
    }
    if (worst > 0) {
        shape *= 1 / worst;
    }
    for (size_t k = 0; k < d; k++) {
        c[k] += mean[k];
    }
    return {std::move(c), std::move(shape)};
}

}  // namespace

FullDimEllipsoid mvee_full(const Matrix &points, const MveeOptions &options) {
    size_t m = points.rows();
    size_t d = points.cols();
    if (d == 0 || m < d + 1) {
        throw ContractError("mvee_full needs d >= 1 and at least d + 1 points.");
    }
    if (!(options.eps > 0)) {
        throw ContractError("mvee_full needs eps > 0.");
    }
    if (!points.all_finite()) {
        throw ContractError("mvee_full: non-finite coordinate.");
    }
    Matrix diffs(m - 1, d);
    for (size_t x = 1; x < m; x++) {
        for (size_t k = 0; k < d; k++) {
            diffs(x - 1, k) = points(x, k) - points(0, k);
        }
    }
    if (rank(diffs) < d) {
        throw ContractError("mvee_full: points do not affinely span R^d; reduce to the affine hull first.");
    }
    if (d == 1) {
        return segment_ellipsoid(points);
    }

    Vector mean(d, 0.0);
    for (size_t x = 0; x < m; x++) {
        for (size_t k = 0; k < d; k++) {
            mean[k] += points(x, k) / static_cast<double>(m);
        }
    }
    Matrix centered(m, d);
    for (size_t x = 0; x < m; x++) {
        for (size_t k = 0; k < d; k++) {
            centered(x, k) = points(x, k) - mean[k];
        }
    }

    const double lifted_dim = static_cast<double>(d + 1);
    Vector u(m, 1.0 / static_cast<double>(m));
    Vector kappa(m);
    Vector q(d + 1);
    size_t iteration = 0;
    for (;; iteration++) {
        Matrix lifted(d + 1, d + 1);
        for (size_t x = 0; x < m; x++) {
            if (u[x] == 0) {
                continue;
            }
            for (size_t r = 0; r <= d; r++) {
                double qr = r < d ? centered(x, r) : 1.0;
                for (size_t s = 0; s <= d; s++) {
                    double qs = s < d ? centered(x, s) : 1.0;
                    lifted(r, s) += u[x] * qr * qs;
                }
            }
        }
        Matrix inv = spd_inverse(lifted);
        for (size_t x = 0; x < m; x++) {
            for (size_t k = 0; k < d; k++) {
                q[k] = centered(x, k);
            }
            q[d] = 1.0;
            kappa[x] = dot(q, inv * q);
        }

        // Ties go to the lowest index.
        size_t up = 0;
        size_t down = m;
        for (size_t x = 0; x < m; x++) {
            if (kappa[x] > kappa[up]) {
                up = x;
            }
            if (u[x] > 0 && (down == m || kappa[x] < kappa[down])) {
                down = x;
            }
        }
        double k_up = kappa[up];
        double k_down = kappa[down];
        if (k_up <= (1 + options.eps) * lifted_dim && k_down >= (1 - options.eps) * lifted_dim) {
            break;
        }
        if (iteration >= options.max_iterations) {
            throw SolverError(
                "mvee_full did not converge within " + std::to_string(options.max_iterations) + " iterations.",
                ellipsoid_from_weights(centered, u, mean),
                iteration);
        }

        if (k_up - lifted_dim >= lifted_dim - k_down) {
            double beta = (k_up - lifted_dim) / (lifted_dim * (k_up - 1));
            for (double &w : u) {
                w *= 1 - beta;
            }
            u[up] += beta;
        } else {
            double beta_max = u[down] < 1 ? u[down] / (1 - u[down]) : INFINITY;
            double beta = k_down > 1 ? (lifted_dim - k_down) / (lifted_dim * (k_down - 1)) : INFINITY;
            bool drop = beta >= beta_max;
            beta = std::min(beta, beta_max);
            for (double &w : u) {
                w *= 1 + beta;
            }
            u[down] = drop ? 0.0 : u[down] - beta;
        }
    }
    return ellipsoid_from_weights(centered, u, mean);
}

RangeEllipsoid make_range(Vector t, Matrix q) {
    if (q.rows() != t.size() || q.cols() != t.size()) {
        throw ContractError("make_range: Q must be n x n with n = len(t).");
    }
    if (!q.all_finite() || !std::all_of(t.begin(), t.end(), [](double x) {
            return std::isfinite(x);
        })) {
        throw ContractError("make_range: non-finite entry.");
    }
    RangeEllipsoid e{std::move(t), std::move(q), 0};
    if (e.n() == 0) {
        return e;
    }
    EigDecomposition eig = sym_eig(e.q);
    if (eig.values.back() < -1e-9) {
        throw ContractError("make_range: Q is not positive semidefinite.");
    }
    double cut = kDefaultRankTol * std::max(eig.values[0], 0.0);
    for (double v : eig.values) {
        if (v > cut && v > 0) {
            e.rank++;
        }
    }
    return e;
}

RangeEllipsoid ddi_spherical(const Matrix &points, const MveeOptions &options, double tol_aff) {
    AffineReduction red = affine_reduce(points, tol_aff);
    size_t n = points.cols();
    size_t d = red.frame.dim();
    if (d == 0) {
        return {red.frame.origin, Matrix(n, n), 0};
    }
    FullDimEllipsoid e = mvee_full(red.reduced, options);
    const Matrix &v = red.frame.basis;
    Matrix q = v * spd_inverse(e.shape) * v.transpose();
    for (size_t r = 0; r < n; r++) {
        for (size_t c = r + 1; c < n; c++) {
            double s = 0.5 * (q(r, c) + q(c, r));
            q(r, c) = s;
            q(c, r) = s;
        }
    }
    Vector t = v * e.center;
    for (size_t k = 0; k < n; k++) {
        t[k] += red.frame.origin[k];
    }
    return {std::move(t), std::move(q), d};
}

bool ellipsoid_contains(const RangeEllipsoid &e, std::span<const double> p, double tol) {
    if (p.size() != e.n()) {
        throw ContractError("ellipsoid_contains: dimension mismatch.");
    }
    size_t n = e.n();
    Vector diff(n);
    for (size_t k = 0; k < n; k++) {
        diff[k] = p[k] - e.t[k];
    }
    Matrix qinv = pinv(e.q);
    Matrix proj = e.q * qinv;
    Vector inside = proj * diff;
    for (size_t k = 0; k < n; k++) {
        if (std::abs(diff[k] - inside[k]) > tol) {
            return false;
        }
    }
    return dot(diff, qinv * diff) <= 1 + tol;
}

double unit_ball_volume(size_t d) {
    double half = static_cast<double>(d) / 2;
    return std::pow(std::numbers::pi, half) / std::tgamma(half + 1);
}

EllipsoidVolume ellipsoid_volume(const RangeEllipsoid &e) {
    if (e.n() == 0) {
        return {0, 0.0};
    }
    EigDecomposition eig = sym_eig(e.q);
    double cut = kDefaultRankTol * std::max(eig.values[0], 0.0);
    size_t r = 0;
    double prod = 1;
    for (double v : eig.values) {
        if (v > cut && v > 0) {
            r++;
            prod *= v;
        }
    }
    if (r == 0) {
        return {0, 0.0};
    }
    return {r, unit_ball_volume(r) * std::sqrt(prod)};
}

bool ellipsoid_equal(const RangeEllipsoid &a, const RangeEllipsoid &b, double tol) {
    if (a.n() != b.n()) {
        throw ContractError("ellipsoid_equal: ambient dimensions differ.");
    }
    return max_abs_diff(a.q, b.q) <= tol && max_abs_diff(a.t, b.t) <= tol;
}

}  // namespace ddi
