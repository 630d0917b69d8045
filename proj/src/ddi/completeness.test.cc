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

#include <map>
#include <random>

#include "gtest/gtest.h"

#include "ddi/errors.h"
#include "support/random_models.h"

using namespace ddi;
using namespace ddi::testing;

namespace {

StateSet rotate(const StateSet &s, const Matrix &o) {
    StateSet out;
    for (const Bloch &r : s) {
        Vector v = o * Vector{r[0], r[1], r[2]};
        out.push_back({v[0], v[1], v[2]});
    }
    return out;
}

double bdot(const Bloch &a, const Bloch &b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// A unit-vector 4-set is a regular tetrahedron iff every pairwise dot is -1/3.
bool is_regular_tetrahedron(const StateSet &s, double tol) {
    for (size_t i = 0; i < s.size(); i++) {
        for (size_t j = i + 1; j < s.size(); j++) {
            if (std::abs(bdot(s[i], s[j]) + 1.0 / 3) > tol) {
                return false;
            }
        }
    }
    return s.size() == 4;
}

}  // namespace

TEST(completeness, generators) {
    StateSet tetra = gen_regular_simplex();
    ASSERT_EQ(tetra.size(), 4u);
    Bloch centroid{};
    for (size_t i = 0; i < 4; i++) {
        for (size_t k = 0; k < 3; k++) {
            centroid[k] += tetra[i][k];
        }
        for (size_t j = i + 1; j < 4; j++) {
            ASSERT_NEAR(bdot(tetra[i], tetra[j]), -1.0 / 3, 1e-12);
        }
    }
    for (double c : centroid) {
        ASSERT_NEAR(c, 0, 1e-12);
    }

    std::map<std::string, size_t> sizes{
        {"tetrahedron", 4}, {"octahedron", 6}, {"cube", 8}, {"icosahedron", 12}, {"dodecahedron", 20}};
    for (const auto &[name, count] : sizes) {
        StateSet s = gen_platonic(name);
        ASSERT_EQ(s.size(), count) << name;
        Bloch sum{};
        for (const Bloch &r : s) {
            ASSERT_NEAR(std::sqrt(bdot(r, r)), 1, 1e-12) << name;
            for (size_t k = 0; k < 3; k++) {
                sum[k] += r[k];
            }
        }
        for (double c : sum) {
            ASSERT_NEAR(c, 0, 1e-12) << name;
        }
    }
    ASSERT_THROW(gen_platonic("torus"), ContractError);
}

TEST(completeness, regular_polygons) {
    Matrix xz = axis_projector({0, 2});
    StateSet trine = gen_regular_polygon(3, xz);
    ASSERT_EQ(trine.size(), 3u);
    ASSERT_NEAR(trine[0][0], 1, 1e-15);
    for (const Bloch &r : trine) {
        ASSERT_EQ(r[1], 0);
        ASSERT_NEAR(bdot(r, r), 1, 1e-12);
    }
    ASSERT_NEAR(bdot(trine[0], trine[1]), -0.5, 1e-12);

    StateSet square = gen_regular_polygon(4, axis_projector({0, 1}));
    ASSERT_NEAR(bdot(square[0], square[1]), 0, 1e-12);
    ASSERT_NEAR(bdot(square[0], square[2]), -1, 1e-12);

    ASSERT_EQ(gen_regular_polygon(6, xz).size(), 6u);
    ASSERT_THROW(gen_regular_polygon(2, xz), ContractError);
    ASSERT_THROW(gen_regular_polygon(4, axis_projector({2})), ContractError);
}

TEST(completeness, informational_examples) {
    ASSERT_TRUE(is_informationally_complete(gen_regular_simplex()).complete);
    ASSERT_TRUE(is_informationally_complete(perturb_set(gen_regular_simplex(), 0, 0.9)).complete);
    CompletenessVerdict trine = is_informationally_complete(gen_regular_polygon(3, axis_projector({0, 2})));
    ASSERT_FALSE(trine.complete);
    ASSERT_EQ(trine.affine_dim_witness, 2u);
    ASSERT_FALSE(trine.mvee_witness.has_value());
}

TEST(completeness, observational_examples) {
    CompletenessVerdict tetra = is_observationally_complete(gen_regular_simplex());
    ASSERT_TRUE(tetra.complete);
    ASSERT_FALSE(tetra.mvee_witness.has_value());
    for (const char *name : {"tetrahedron", "octahedron", "cube", "icosahedron", "dodecahedron"}) {
        ASSERT_TRUE(is_observationally_complete(gen_platonic(name)).complete) << name;
    }
    CompletenessVerdict irregular = is_observationally_complete(perturb_set(gen_regular_simplex(), 0, 0.9));
    ASSERT_FALSE(irregular.complete);
    ASSERT_TRUE(irregular.mvee_witness.has_value());
    ASSERT_GT(max_abs_diff(irregular.mvee_witness->q, Matrix::identity(3)), 1e-6);
}

TEST(completeness, support_examples) {
    StateSet trine = gen_regular_polygon(3, axis_projector({0, 2}));
    ASSERT_TRUE(is_oc_for_support(trine, axis_projector({0, 2})).complete);
    ASSERT_TRUE(is_oc_for_support({{0, 0, 1}, {0, 0, -1}}, axis_projector({2})).complete);
    ASSERT_FALSE(is_oc_for_support(trine, Matrix::identity(3)).complete);
    for (size_t n = 3; n <= 8; n++) {
        ASSERT_TRUE(is_oc_for_support(gen_regular_polygon(n, axis_projector({0, 1})), axis_projector({0, 1})).complete);
    }
    ASSERT_THROW(is_oc_for_support(trine, Matrix::identity(3) * 2), ContractError);
}

TEST(completeness, perturb_set) {
    StateSet tetra = gen_regular_simplex();
    ASSERT_EQ(perturb_set(tetra, 2, 1), tetra);
    StateSet p = perturb_set(tetra, 1, 0.5);
    ASSERT_EQ(p[1][0], tetra[1][0] * 0.5);
    ASSERT_EQ(p[0], tetra[0]);
    ASSERT_THROW(perturb_set(tetra, 4, 0.9), ContractError);
    ASSERT_THROW(perturb_set(tetra, 0, 0), ContractError);
    ASSERT_THROW(perturb_set(tetra, 0, 1.5), ContractError);
}

TEST(completeness, oc_implies_ic_and_is_strict) {
    std::mt19937_64 rng(31);
    std::vector<StateSet> sets;
    for (const char *name : {"tetrahedron", "octahedron", "cube", "icosahedron", "dodecahedron"}) {
        sets.push_back(gen_platonic(name));
    }
    for (int trial = 0; trial < 100; trial++) {
        StateSet s;
        for (size_t k = 0; k < 4 + trial % 5; k++) {
            Bloch r = random_unit_bloch(rng);
            double len = trial % 2 ? 1.0 : uniform(rng, 0.5, 1.0);
            s.push_back({r[0] * len, r[1] * len, r[2] * len});
        }
        sets.push_back(s);
    }
    bool strict_seen = false;
    for (const StateSet &s : sets) {
        bool oc = is_observationally_complete(s).complete;
        bool ic = is_informationally_complete(s).complete;
        if (oc) {
            ASSERT_TRUE(ic);
        }
        strict_seen |= ic && !oc;
    }
    ASSERT_TRUE(strict_seen);
}

TEST(completeness, only_regular_simplices_are_minimal_oc) {
    std::mt19937_64 rng(32);
    size_t regular_count = 0;
    for (int trial = 0; trial < 500; trial++) {
        StateSet s;
        if (trial % 10 == 0) {
            s = rotate(gen_regular_simplex(), random_orthogonal(rng, 3));
        } else {
            for (int k = 0; k < 4; k++) {
                s.push_back(random_unit_bloch(rng));
            }
        }
        bool regular = is_regular_tetrahedron(s, 1e-6);
        regular_count += regular;
        ASSERT_EQ(is_observationally_complete(s, 1e-6).complete, regular) << "trial " << trial;
    }
    ASSERT_EQ(regular_count, 50u);
}

TEST(completeness, irregular_inscribed_simplex_shrinks_or_shifts) {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 200; trial++) {
        StateSet s;
        for (int k = 0; k < 4; k++) {
            s.push_back(random_unit_bloch(rng));
        }
        if (!is_informationally_complete(s).complete) {
            continue;
        }
        CompletenessVerdict v = is_observationally_complete(s);
        ASSERT_FALSE(v.complete);
        const RangeEllipsoid &e = *v.mvee_witness;
        double largest_axis = std::sqrt(sym_eig(e.q).values[0]);
        ASSERT_TRUE(largest_axis < 1 - 1e-9 || max_abs(e.t) > 1e-9) << "trial " << trial;
    }
}

TEST(completeness, verdicts_are_rotation_invariant) {
    std::mt19937_64 rng(34);
    std::vector<StateSet> sets{gen_platonic("cube"), gen_platonic("icosahedron"),
                               perturb_set(gen_regular_simplex(), 3, 0.8),
                               gen_regular_polygon(5, axis_projector({0, 1}))};
    for (int trial = 0; trial < 40; trial++) {
        const StateSet &s = sets[trial % sets.size()];
        StateSet r = rotate(s, random_orthogonal(rng, 3));
        ASSERT_EQ(is_observationally_complete(s).complete, is_observationally_complete(r).complete);
        ASSERT_EQ(is_informationally_complete(s).complete, is_informationally_complete(r).complete);
    }
}
