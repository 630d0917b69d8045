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


#include "ddi/completeness.h"

#include <cmath>
#include <numbers>
#include <string>

#include "ddi/errors.h"

namespace ddi {

namespace {

Matrix bloch_rows(const StateSet &states) {
    Matrix m(states.size(), 3);
    for (size_t x = 0; x < states.size(); x++) {
        for (size_t k = 0; k < 3; k++) {
            m(x, k) = states[x][k];
        }
    }
    return m;
}

CompletenessVerdict compare_to_ball(RangeEllipsoid inferred, const Matrix &ball, double tol) {
    bool ok = max_abs_diff(inferred.q, ball) <= tol && max_abs(inferred.t) <= tol;
    CompletenessVerdict v;
    v.complete = ok;
    if (!ok) {
        v.mvee_witness = std::move(inferred);
    }
    return v;
}

}  // namespace

CompletenessVerdict is_informationally_complete(const StateSet &states, double tol) {
    validate_states(states);
    size_t d = affine_reduce(bloch_rows(states), tol).frame.dim();
    CompletenessVerdict v;
    v.complete = d == 3;
    if (!v.complete) {
        v.affine_dim_witness = d;
    }
    return v;
}

CompletenessVerdict is_observationally_complete(const StateSet &states, double tol) {
    validate_states(states);
    return compare_to_ball(ddi_spherical(bloch_rows(states)), Matrix::identity(3), tol);
}

void validate_projector(const Matrix &p) {
    if (p.rows() != 3 || p.cols() != 3) {
        throw ContractError("Projector must be 3x3.");
    }
    if (max_abs_diff(p, p.transpose()) > 1e-10 || max_abs_diff(p * p, p) > 1e-10) {
        throw ContractError("Projector must be symmetric and idempotent.");
    }
}

CompletenessVerdict is_oc_for_support(const StateSet &states, const Matrix &projector, double tol) {
    validate_states(states);
    validate_projector(projector);
    Matrix projected = bloch_rows(states) * projector.transpose();
    return compare_to_ball(ddi_spherical(projected), projector, tol);
}

Matrix axis_projector(std::initializer_list<size_t> axes) {
    Matrix p(3, 3);
    for (size_t a : axes) {
        if (a >= 3) {
            throw ContractError("Bloch axis index must be 0, 1 or 2.");
        }
        p(a, a) = 1;
    }
    return p;
}

StateSet gen_regular_simplex() {
    double s = 1 / std::sqrt(3.0);
    return {{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}};
}

StateSet gen_regular_polygon(size_t n, const Matrix &plane) {
    if (n < 3) {
        throw ContractError("A regular polygon needs n >= 3.");
    }
    validate_projector(plane);
    Matrix basis = range_basis(plane);
    if (basis.cols() != 2) {
        throw ContractError("Polygon plane projector must have rank 2.");
    }
    StateSet out;
    out.reserve(n);
    for (size_t k = 0; k < n; k++) {
        double angle = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        double c = std::cos(angle);
        double s = std::sin(angle);
        Bloch r{};
        for (size_t i = 0; i < 3; i++) {
            r[i] = c * basis(i, 0) + s * basis(i, 1);
        }
        out.push_back(r);
    }
    return out;
}

namespace {

// All sign choices of (x, y, z) with the given nonzero pattern, cyclically
// permuted, scaled by `scale`.
void push_cyclic(StateSet &out, double x, double y, double z, double scale) {
    for (int sx : {1, -1}) {
        for (int sy : {1, -1}) {
            for (int sz : {1, -1}) {
                if ((x == 0 && sx < 0) || (y == 0 && sy < 0) || (z == 0 && sz < 0)) {
                    continue;
                }
                Bloch v{sx * x * scale, sy * y * scale, sz * z * scale};
                out.push_back(v);
                out.push_back({v[2], v[0], v[1]});
                out.push_back({v[1], v[2], v[0]});
            }
        }
    }
}

}  // namespace

StateSet gen_platonic(std::string_view name) {
    const double phi = std::numbers::phi;
    if (name == "tetrahedron") {
        return gen_regular_simplex();
    }
    if (name == "octahedron") {
        return {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    }
    if (name == "cube") {
        StateSet out;
        double s = 1 / std::sqrt(3.0);
        for (int x : {1, -1}) {
            for (int y : {1, -1}) {
                for (int z : {1, -1}) {
                    out.push_back({x * s, y * s, z * s});
                }
            }
        }
        return out;
    }
    if (name == "icosahedron") {
        StateSet out;
        push_cyclic(out, 0, 1, phi, 1 / std::sqrt(1 + phi * phi));
        return out;
    }
    if (name == "dodecahedron") {
        StateSet out = gen_platonic("cube");
        push_cyclic(out, 0, 1 / phi, phi, 1 / std::sqrt(3.0));
        return out;
    }
    throw ContractError("Unknown Platonic solid '" + std::string(name) + "'.");
}

StateSet perturb_set(const StateSet &states, size_t index, double factor) {
    if (index >= states.size()) {
        throw ContractError("perturb_set: index out of range.");
    }
    if (!(factor > 0 && factor <= 1)) {
        throw ContractError("perturb_set: factor must be in (0, 1].");
    }
    StateSet out = states;
    for (double &c : out[index]) {
        c *= factor;
    }
    return out;
}

}  // namespace ddi
