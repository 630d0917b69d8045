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


#include "ddi/qubit.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "ddi/errors.h"

namespace ddi {

namespace {

double bloch_norm(const Bloch &b) {
    return std::sqrt(b[0] * b[0] + b[1] * b[1] + b[2] * b[2]);
}

double bloch_dot(const Bloch &a, const Bloch &b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

}  // namespace

std::optional<std::string> povm_violation(const QubitPovm &povm, double tol) {
    if (povm.size() < 2) {
        return "a POVM needs at least 2 outcomes";
    }
    double sum_a = 0;
    Bloch sum_b{};
    for (size_t y = 0; y < povm.size(); y++) {
        const QubitEffect &e = povm.effects[y];
        if (!std::isfinite(e.a) || !std::isfinite(e.b[0]) || !std::isfinite(e.b[1]) || !std::isfinite(e.b[2])) {
            return "effect " + std::to_string(y) + " has a non-finite entry";
        }
        if (e.a < -tol || e.a > 1 + tol) {
            return "effect " + std::to_string(y) + " has half-trace outside [0, 1]";
        }
        if (bloch_norm(e.b) > std::min(e.a, 1 - e.a) + tol) {
            return "effect " + std::to_string(y) + " is not positive or exceeds the identity";
        }
        sum_a += e.a;
        for (size_t k = 0; k < 3; k++) {
            sum_b[k] += e.b[k];
        }
    }
    if (std::abs(sum_a - 1) > tol || bloch_norm(sum_b) > tol) {
        return "effects do not sum to the identity";
    }
    return std::nullopt;
}

void validate_povm(const QubitPovm &povm, double tol) {
    if (auto v = povm_violation(povm, tol)) {
        throw ContractError("Invalid POVM: " + *v + ".");
    }
}

void validate_states(const StateSet &states) {
    if (states.empty()) {
        throw ContractError("State set is empty.");
    }
    for (size_t x = 0; x < states.size(); x++) {
        const Bloch &r = states[x];
        if (!std::isfinite(r[0]) || !std::isfinite(r[1]) || !std::isfinite(r[2]) || bloch_norm(r) > 1 + 1e-12) {
            throw ContractError("State " + std::to_string(x) + " is not a Bloch vector (|r| must be <= 1).");
        }
    }
}

QubitPovm ideal_mub_povm() {
    return {{
        {0.25, {0, 0, 0.25}},
        {0.25, {0, 0, -0.25}},
        {0.25, {0.25, 0, 0}},
        {0.25, {-0.25, 0, 0}},
    }};
}

QubitPovm projective_povm(const Bloch &axis) {
    double n = bloch_norm(axis);
    if (!(n > 0)) {
        throw ContractError("projective_povm needs a nonzero axis.");
    }
    Bloch half{axis[0] / (2 * n), axis[1] / (2 * n), axis[2] / (2 * n)};
    return {{{0.5, half}, {0.5, {-half[0], -half[1], -half[2]}}}};
}

Vector born(const QubitPovm &povm, const Bloch &state) {
    Vector p(povm.size());
    for (size_t y = 0; y < povm.size(); y++) {
        p[y] = std::clamp(povm.effects[y].a + bloch_dot(povm.effects[y].b, state), 0.0, 1.0);
    }
    return p;
}

Matrix born_table(const QubitPovm &povm, const StateSet &states) {
    Matrix table(states.size(), povm.size());
    for (size_t x = 0; x < states.size(); x++) {
        Vector p = born(povm, states[x]);
        for (size_t y = 0; y < p.size(); y++) {
            table(x, y) = p[y];
        }
    }
    return table;
}

RangeEllipsoid povm_range(const QubitPovm &povm) {
    size_t n = povm.size();
    Vector t(n);
    Matrix q(n, n);
    for (size_t x = 0; x < n; x++) {
        t[x] = povm.effects[x].a;
        for (size_t y = 0; y < n; y++) {
            q(x, y) = bloch_dot(povm.effects[x].b, povm.effects[y].b);
        }
    }
    return make_range(std::move(t), std::move(q));
}

std::string_view failure_code(InversionFailure failure) {
    switch (failure) {
        case InversionFailure::kInconsistentCorrelation:
            return "inconsistent_correlation";
        case InversionFailure::kExceedsQubitDimension:
            return "exceeds_qubit_dimension";
        case InversionFailure::kNotNormalizable:
            return "not_normalizable";
        case InversionFailure::kPositivityViolated:
            return "positivity_violated";
    }
    return "unknown";
}

QubitPovm range_invert(const RangeEllipsoid &range, double tol) {
    size_t n = range.n();
    if (n < 2) {
        throw ContractError("range_invert needs at least 2 outcomes.");
    }
    if (range.q.rows() != n || range.q.cols() != n) {
        throw ContractError("range_invert: Q must be n x n.");
    }
    if (!(tol >= 0)) {
        throw ContractError("range_invert: tolerance must be non-negative.");
    }
    Matrix q(n, n);
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            q(r, c) = 0.5 * (range.q(r, c) + range.q(c, r));
        }
    }

    EigDecomposition eig = sym_eig(q);
    if (eig.values.back() < -tol) {
        throw InversionError(
            InversionFailure::kInconsistentCorrelation,
            "inconsistent correlation matrix: eigenvalue " + std::to_string(eig.values.back()) + " is negative");
    }
    size_t r = 0;
    while (r < n && eig.values[r] > tol) {
        r++;
    }
    if (r > 3) {
        throw InversionError(
            InversionFailure::kExceedsQubitDimension,
            "correlation matrix rank " + std::to_string(r) + " exceeds qubit linear dimension");
    }

    double sum_t = 0;
    for (double x : range.t) {
        sum_t += x;
    }
    Vector ones(n, 1.0);
    if (std::abs(sum_t - 1) > tol || max_abs(q * ones) > tol) {
        throw InversionError(InversionFailure::kNotNormalizable, "range is not normalizable as a POVM");
    }

    // Project onto the normalized affine family: t sums to 1, Q kills 1.
    Matrix center = Matrix::identity(n) - Matrix(n, n, 1.0 / static_cast<double>(n));
    Matrix qp = center * q * center;
    for (size_t a = 0; a < n; a++) {
        for (size_t b = a + 1; b < n; b++) {
            double s = 0.5 * (qp(a, b) + qp(b, a));
            qp(a, b) = s;
            qp(b, a) = s;
        }
    }
    EigDecomposition pe = sym_eig(qp);
    // Eigenvalues at or below tol only matter for the rank test; every
    // numerically nonzero direction (up to 3) is kept in the Bloch parts.
    size_t used = 0;
    double cut = kDefaultRankTol * std::max(pe.values[0], 0.0);
    while (used < std::min<size_t>(n, 3) && pe.values[used] > cut && pe.values[used] > 0) {
        used++;
    }

    QubitPovm povm;
    povm.effects.resize(n);
    for (size_t y = 0; y < n; y++) {
        QubitEffect &e = povm.effects[y];
        e.a = range.t[y] + (1 - sum_t) / static_cast<double>(n);
        for (size_t k = 0; k < used; k++) {
            e.b[k] = pe.vectors(y, k) * std::sqrt(pe.values[k]);
        }
    }
    for (size_t y = 0; y < n; y++) {
        const QubitEffect &e = povm.effects[y];
        double bound = std::min(e.a, 1 - e.a);
        if (bloch_norm(e.b) > bound + tol) {
            throw InversionError(
                InversionFailure::kPositivityViolated,
                "positivity violated: effect " + std::to_string(y) + " has |b| = " + std::to_string(bloch_norm(e.b)) +
                    " > " + std::to_string(bound));
        }
    }
    if (auto v = povm_violation(povm, tol)) {
        throw InversionError(InversionFailure::kPositivityViolated, "positivity violated: " + *v);
    }
    return povm;
}

QubitPovm gauge_apply(const QubitPovm &povm, const Matrix &o) {
    if (o.rows() != 3 || o.cols() != 3) {
        throw ContractError("gauge_apply needs a 3x3 matrix.");
    }
    if (max_abs_diff(o.transpose() * o, Matrix::identity(3)) > 1e-10) {
        throw ContractError("gauge_apply needs an orthogonal matrix.");
    }
    QubitPovm out = povm;
    for (QubitEffect &e : out.effects) {
        Vector b = o * std::span<const double>(e.b);
        e.b = {b[0], b[1], b[2]};
    }
    return out;
}

bool gauge_equivalent(const QubitPovm &a, const QubitPovm &b, double tol) {
    if (a.size() != b.size()) {
        throw ContractError("gauge_equivalent: outcome counts differ.");
    }
    return ellipsoid_equal(povm_range(a), povm_range(b), tol);
}

Matrix gauge_align(const QubitPovm &from, const QubitPovm &to) {
    if (from.size() != to.size()) {
        throw ContractError("gauge_align: outcome counts differ.");
    }
    Matrix m(3, 3);
    for (size_t y = 0; y < from.size(); y++) {
        m += Matrix::outer(to.effects[y].b, from.effects[y].b);
    }
    Svd d = svd(m);
    return d.u * d.v.transpose();
}

SimulatedCounts simulate_counts(const QubitPovm &povm, const StateSet &states, uint64_t shots, uint64_t seed) {
    validate_povm(povm);
    validate_states(states);
    if (shots == 0) {
        throw ContractError("simulate_counts needs shots >= 1.");
    }
    std::mt19937_64 rng(seed);
    size_t n = povm.size();
    SimulatedCounts out;
    out.counts.assign(states.size(), std::vector<uint64_t>(n, 0));
    out.frequencies = Matrix(states.size(), n);

    for (size_t x = 0; x < states.size(); x++) {
        Vector p = born(povm, states[x]);
        Vector cumulative(n);
        double acc = 0;
        size_t last_positive = 0;
        for (size_t y = 0; y < n; y++) {
            acc += p[y];
            cumulative[y] = acc;
            if (p[y] > 0) {
                last_positive = y;
            }
        }
        for (uint64_t s = 0; s < shots; s++) {
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
            size_t y = it == cumulative.end() ? last_positive : static_cast<size_t>(it - cumulative.begin());
            out.counts[x][y]++;
        }
        for (size_t y = 0; y < n; y++) {
            out.frequencies(x, y) = static_cast<double>(out.counts[x][y]) / static_cast<double>(shots);
        }
    }
    return out;
}

}  // namespace ddi
