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


#include "ddi/simplex2d.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "ddi/errors.h"
#include "ddi/mvee.h"
#include "support/oracles.h"

using namespace ddi;
using namespace ddi::testing;

namespace {

std::vector<Point2> hexagon() {
    std::vector<Point2> out;
    for (int k = 0; k < 6; k++) {
        out.push_back({std::cos(k * M_PI / 3), std::sin(k * M_PI / 3)});
    }
    return out;
}

double dist_to_line(const Point2 &p, const Point2 &a, const Point2 &b) {
    double ex = b[0] - a[0];
    double ey = b[1] - a[1];
    return std::abs(ex * (p[1] - a[1]) - ey * (p[0] - a[0])) / std::hypot(ex, ey);
}

// Distance from p to the convex polygon `hull` (0 inside).
double dist_to_hull(const Point2 &p, const std::vector<Point2> &hull) {
    bool inside = true;
    double best = INFINITY;
    for (size_t k = 0; k < hull.size(); k++) {
        const Point2 &a = hull[k];
        const Point2 &b = hull[(k + 1) % hull.size()];
        double ex = b[0] - a[0];
        double ey = b[1] - a[1];
        if (ex * (p[1] - a[1]) - ey * (p[0] - a[0]) < 0) {
            inside = false;
        }
        double s = std::clamp(((p[0] - a[0]) * ex + (p[1] - a[1]) * ey) / (ex * ex + ey * ey), 0.0, 1.0);
        best = std::min(best, std::hypot(p[0] - a[0] - s * ex, p[1] - a[1] - s * ey));
    }
    return inside ? 0 : best;
}

std::vector<Point2> random_points(std::mt19937_64 &rng, size_t count) {
    std::normal_distribution<double> g;
    std::vector<Point2> out;
    for (size_t k = 0; k < count; k++) {
        out.push_back({g(rng), g(rng)});
    }
    return out;
}

void expect_side_conditions(const std::vector<Point2> &pts, const TriangleSolution &sol) {
    std::vector<Point2> hull = convex_hull(pts);
    const Point2 &a = hull[sol.flush_edge];
    const Point2 &b = hull[(sol.flush_edge + 1) % hull.size()];
    bool flush = false;
    for (int s = 0; s < 3; s++) {
        const Point2 &u = sol.triangle.v[s];
        const Point2 &w = sol.triangle.v[(s + 1) % 3];
        flush |= dist_to_line(a, u, w) < 1e-9 && dist_to_line(b, u, w) < 1e-9;
        Point2 mid{(u[0] + w[0]) / 2, (u[1] + w[1]) / 2};
        EXPECT_LT(dist_to_hull(mid, hull), 1e-9) << "side midpoint off the hull";
    }
    EXPECT_TRUE(flush) << "no side contains the reported flush edge";
    for (const Point2 &p : pts) {
        EXPECT_TRUE(triangle_contains(sol.triangle, p, 1e-9));
    }
    EXPECT_NEAR(sol.area, sol.triangle.area(), 1e-12 * std::max(1.0, sol.area));
}

}  // namespace

TEST(simplex2d, convex_hull) {
    std::vector<Point2> pts{{0, 0}, {2, 0}, {1, 0}, {2, 2}, {0, 2}, {1, 1}, {0, 0}};
    std::vector<Point2> hull = convex_hull(pts);
    ASSERT_EQ(hull, (std::vector<Point2>{{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
    ASSERT_EQ(convex_hull(std::vector<Point2>{{1, 1}, {1, 1}}).size(), 1u);
}

TEST(simplex2d, triangle_input_is_its_own_optimum) {
    std::vector<Point2> tri{{0, 0}, {1, 0}, {0, 1}};
    TriangleSolution sol = min_area_enclosing_triangle(tri);
    ASSERT_NEAR(sol.area, 0.5, 1e-15);
    for (const Point2 &p : tri) {
        double closest = INFINITY;
        for (const Point2 &v : sol.triangle.v) {
            closest = std::min(closest, std::hypot(p[0] - v[0], p[1] - v[1]));
        }
        ASSERT_LT(closest, 1e-12);
    }
    ASSERT_FALSE(nonuniqueness_witness(tri).has_value());
}

TEST(simplex2d, unit_square) {
    std::vector<Point2> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    TriangleSolution sol = min_area_enclosing_triangle(sq);
    ASSERT_NEAR(sol.area, 2, 1e-12);
    expect_side_conditions(sq, sol);
    auto w = nonuniqueness_witness(sq);
    ASSERT_TRUE(w.has_value());
    ASSERT_NEAR(w->first.area(), 2, 1e-9);
    ASSERT_NEAR(w->second.area(), 2, 1e-9);
    ASSERT_GT(matched_hausdorff(w->first, w->second), 1e-6);
}

TEST(simplex2d, regular_hexagon) {
    std::vector<Point2> hex = hexagon();
    TriangleSolution sol = min_area_enclosing_triangle(hex);
    ASSERT_NEAR(sol.area, 9 * std::sqrt(3.0) / 4, 1e-12);
    ASSERT_NEAR(sol.area, exhaustive_min_triangle_area(hex), 1e-9);
    expect_side_conditions(hex, sol);

    auto w = nonuniqueness_witness(hex);
    ASSERT_TRUE(w.has_value());
    ASSERT_NEAR(w->first.area(), w->second.area(), 1e-9);
    ASSERT_NEAR(w->first.area(), sol.area, 1e-9);
    ASSERT_GT(matched_hausdorff(w->first, w->second), 1e-6);
    for (const Triangle *t : {&w->first, &w->second}) {
        for (const Point2 &p : hex) {
            ASSERT_TRUE(triangle_contains(*t, p, 1e-9));
        }
        // Equilateral with flush sides at the apothem.
        for (int s = 0; s < 3; s++) {
            const Point2 &u = t->v[s];
            const Point2 &v = t->v[(s + 1) % 3];
            ASSERT_NEAR(std::hypot(u[0] - v[0], u[1] - v[1]), 3, 1e-9);
            ASSERT_NEAR(dist_to_line({0, 0}, u, v), std::sqrt(3.0) / 2, 1e-9);
        }
    }
}

TEST(simplex2d, hexagon_contrast_with_mvee) {
    std::vector<Point2> hex = hexagon();
    Matrix m(6, 2);
    for (size_t k = 0; k < 6; k++) {
        m(k, 0) = hex[k][0];
        m(k, 1) = hex[k][1];
    }
    FullDimEllipsoid e = mvee_full(m);
    ASSERT_LE(max_abs(e.center), 1e-7);
    ASSERT_LE(max_abs_diff(e.shape, Matrix::identity(2)), 1e-7);
    ASSERT_TRUE(nonuniqueness_witness(hex).has_value());
}

TEST(simplex2d, matches_exhaustive_oracle) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 500; trial++) {
        std::vector<Point2> pts = random_points(rng, 3 + trial % 6);
        TriangleSolution sol = min_area_enclosing_triangle(pts);
        double oracle = exhaustive_min_triangle_area(pts);
        ASSERT_NEAR(sol.area, oracle, 1e-9 * std::max(1.0, oracle)) << "trial " << trial;
        expect_side_conditions(pts, sol);
    }
}

TEST(simplex2d, no_tangent_triangle_beats_solver) {
    // Any enclosing triangle shrinks to one whose sides are supporting lines;
    // sample those by their outward normal angles.
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> angle(0, 2 * M_PI);
    for (int trial = 0; trial < 100; trial++) {
        std::vector<Point2> pts = random_points(rng, 3 + trial % 6);
        double best = min_area_enclosing_triangle(pts).area;
        for (int sample = 0; sample < 5000; sample++) {
            std::array<double, 3> th{angle(rng), angle(rng), angle(rng)};
            std::sort(th.begin(), th.end());
            if (th[1] - th[0] >= M_PI || th[2] - th[1] >= M_PI || th[0] + 2 * M_PI - th[2] >= M_PI) {
                continue;
            }
            std::array<std::array<double, 3>, 3> lines;
            for (int k = 0; k < 3; k++) {
                double nx = std::cos(th[k]);
                double ny = std::sin(th[k]);
                double h = -INFINITY;
                for (const Point2 &p : pts) {
                    h = std::max(h, nx * p[0] + ny * p[1]);
                }
                lines[k] = {nx, ny, h};
            }
            std::array<Point2, 3> v;
            for (int k = 0; k < 3; k++) {
                const auto &a = lines[k];
                const auto &b = lines[(k + 1) % 3];
                double det = a[0] * b[1] - a[1] * b[0];
                v[k] = {(a[2] * b[1] - b[2] * a[1]) / det, (a[0] * b[2] - b[0] * a[2]) / det};
            }
            double area = Triangle{v}.area();
            ASSERT_GE(area, best * (1 - 1e-9)) << "trial " << trial;
        }
    }
}

TEST(simplex2d, every_flush_candidate_encloses) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 100; trial++) {
        std::vector<Point2> pts = random_points(rng, 4 + trial % 5);
        for (const TriangleSolution &t : flush_edge_triangles(pts)) {
            for (const Point2 &p : pts) {
                ASSERT_TRUE(triangle_contains(t.triangle, p, 1e-9));
            }
        }
    }
}

TEST(simplex2d, degenerate_input) {
    ASSERT_THROW(min_area_enclosing_triangle(std::vector<Point2>{{0, 0}, {1, 1}, {2, 2}}), DegenerateInputError);
    ASSERT_THROW(min_area_enclosing_triangle(std::vector<Point2>{{0, 0}, {1, 1}}), DegenerateInputError);
    ASSERT_THROW(nonuniqueness_witness(std::vector<Point2>{{0, 0}, {0, 0}, {0, 0}}), DegenerateInputError);
}

TEST(simplex2d, triangle_contains) {
    Triangle t{{{{0, 0}, {1, 0}, {0, 1}}}};
    ASSERT_TRUE(triangle_contains(t, {1.0 / 3, 1.0 / 3}, 0));
    ASSERT_TRUE(triangle_contains(t, {1, 0}, 0));
    ASSERT_FALSE(triangle_contains(t, {10, 10}, 1e-9));
    ASSERT_THROW(triangle_contains(Triangle{{{{0, 0}, {1, 1}, {2, 2}}}}, {0, 0}, 0), ContractError);
}

TEST(simplex2d, matched_hausdorff) {
    Triangle a{{{{0, 0}, {1, 0}, {0, 1}}}};
    Triangle b{{{{0, 1}, {0, 0}, {1, 0}}}};
    ASSERT_EQ(matched_hausdorff(a, b), 0);
    Triangle c{{{{0, 0}, {1, 0}, {0, 2}}}};
    ASSERT_EQ(matched_hausdorff(a, c), 1);
}
