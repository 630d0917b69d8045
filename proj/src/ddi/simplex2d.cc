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
#include <limits>

#include "ddi/errors.h"

namespace ddi {

namespace {

double cross(const Point2 &o, const Point2 &a, const Point2 &b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

double dot2(const Point2 &a, const Point2 &b) {
    return a[0] * b[0] + a[1] * b[1];
}

Point2 sub(const Point2 &a, const Point2 &b) {
    return {a[0] - b[0], a[1] - b[1]};
}

// Supporting line {x : n . x = h}; the hull lies on the side n . x <= h.
struct Line {
    Point2 n;
    double h;
};

std::optional<Point2> intersect(const Line &a, const Line &b) {
    double det = a.n[0] * b.n[1] - a.n[1] * b.n[0];
    if (std::abs(det) < 1e-14) {
        return std::nullopt;
    }
    return Point2{(a.h * b.n[1] - b.h * a.n[1]) / det, (a.n[0] * b.h - b.n[0] * a.h) / det};
}

// Direction along `along` pointing into the half-plane of `other`.
Point2 inward_ray(const Line &along, const Line &other) {
    Point2 r{-along.n[1], along.n[0]};
    if (dot2(r, other.n) > 0) {
        r = {-r[0], -r[1]};
    }
    return r;
}

struct Sweep {
    std::vector<Point2> hull;
    std::vector<Line> edges;
    double scale = 1;
};

Sweep prepare(std::span<const Point2> points) {
    Sweep s;
    s.hull = convex_hull(points);
    if (s.hull.size() < 3) {
        throw DegenerateInputError("Enclosing triangle needs at least 3 non-collinear points.");
    }
    double extent = 0;
    for (const Point2 &p : s.hull) {
        extent = std::max({extent, std::abs(p[0]), std::abs(p[1])});
    }
    s.scale = std::max(extent, 1e-300);
    double twice_area = 0;
    for (size_t k = 0; k < s.hull.size(); k++) {
        const Point2 &a = s.hull[k];
        const Point2 &b = s.hull[(k + 1) % s.hull.size()];
        twice_area += a[0] * b[1] - a[1] * b[0];
    }
    if (twice_area <= 2e-12 * s.scale * s.scale) {
        throw DegenerateInputError("Enclosing triangle needs non-collinear points.");
    }
    for (size_t k = 0; k < s.hull.size(); k++) {
        const Point2 &a = s.hull[k];
        const Point2 &b = s.hull[(k + 1) % s.hull.size()];
        Point2 e = sub(b, a);
        double len = std::hypot(e[0], e[1]);
        Point2 n{e[1] / len, -e[0] / len};
        s.edges.push_back({n, dot2(n, a)});
    }
    return s;
}

// Best triangle having hull edges i and j as two of its sides, or nullopt
// when the pair does not bound a wedge around the hull.
std::optional<TriangleSolution> best_for_pair(const Sweep &s, size_t i, size_t j) {
    const Line &li = s.edges[i];
    const Line &lj = s.edges[j];
    if (li.n[0] * lj.n[1] - li.n[1] * lj.n[0] <= 1e-12) {
        return std::nullopt;
    }
    auto apex = intersect(li, lj);
    if (!apex) {
        return std::nullopt;
    }
    Point2 x = *apex;
    Point2 ri = inward_ray(li, lj);
    Point2 rj = inward_ray(lj, li);
    double slack = 1e-12 * s.scale;
    size_t h = s.hull.size();

    std::optional<TriangleSolution> best;
    auto offer = [&](const Point2 &a, const Point2 &b) {
        Triangle t{{x, a, b}};
        double area = t.area();
        if (area <= 1e-12 * s.scale * s.scale) {
            return;
        }
        if (!best || area < best->area) {
            best = TriangleSolution{t, area, i};
        }
    };

    // Third side flush with edge k.
    for (size_t k = 0; k < h; k++) {
        if (k == i || k == j) {
            continue;
        }
        const Line &lk = s.edges[k];
        // The apex is a vertex of the triangle, so it lies inside edge k's half-plane.
        if (dot2(lk.n, x) >= lk.h - slack) {
            continue;
        }
        auto a = intersect(li, lk);
        auto b = intersect(lj, lk);
        if (!a || !b || dot2(sub(*a, x), ri) <= slack || dot2(sub(*b, x), rj) <= slack) {
            continue;
        }
        offer(*a, *b);
    }

    // Third side pivoting on vertex k, stationary where k bisects the side.
    double det = ri[0] * rj[1] - ri[1] * rj[0];
    for (size_t k = 0; k < h; k++) {
        const Point2 &v = s.hull[k];
        Point2 w = sub(v, x);
        double si = 2 * (w[0] * rj[1] - w[1] * rj[0]) / det;
        double sj = 2 * (ri[0] * w[1] - ri[1] * w[0]) / det;
        // Vertices on either flush line do not pin a third side.
        if (si <= 1e-9 * s.scale || sj <= 1e-9 * s.scale) {
            continue;
        }
        Point2 a{x[0] + si * ri[0], x[1] + si * ri[1]};
        Point2 b{x[0] + sj * rj[0], x[1] + sj * rj[1]};
        Point2 side = sub(b, a);
        Point2 n{side[1], -side[0]};
        if (dot2(n, sub(x, v)) > 0) {
            n = {-n[0], -n[1]};
        }
        double len = std::hypot(n[0], n[1]);
        n = {n[0] / len, n[1] / len};
        const Point2 &prev = s.hull[(k + h - 1) % h];
        const Point2 &next = s.hull[(k + 1) % h];
        double hv = dot2(n, v);
        if (dot2(n, prev) > hv + slack || dot2(n, next) > hv + slack) {
            continue;
        }
        offer(a, b);
    }
    return best;
}

}  // namespace

double Triangle::area() const {
    return std::abs(cross(v[0], v[1], v[2])) / 2;
}

std::vector<Point2> convex_hull(std::span<const Point2> points) {
    std::vector<Point2> p(points.begin(), points.end());
    for (const Point2 &q : p) {
        if (!std::isfinite(q[0]) || !std::isfinite(q[1])) {
            throw DegenerateInputError("Non-finite point coordinate.");
        }
    }
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    if (p.size() < 3) {
        return p;
    }
    std::vector<Point2> hull(2 * p.size());
    size_t k = 0;
    for (size_t i = 0; i < p.size(); i++) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p[i]) <= 0) {
            k--;
        }
        hull[k++] = p[i];
    }
    for (size_t i = p.size() - 1, lower = k + 1; i > 0; i--) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], p[i - 1]) <= 0) {
            k--;
        }
        hull[k++] = p[i - 1];
    }
    hull.resize(k - 1);
    return hull;
}

std::vector<TriangleSolution> flush_edge_triangles(std::span<const Point2> points) {
    Sweep s = prepare(points);
    std::vector<TriangleSolution> out;
    for (size_t i = 0; i < s.edges.size(); i++) {
        for (size_t j = 0; j < s.edges.size(); j++) {
            if (i == j) {
                continue;
            }
            if (auto t = best_for_pair(s, i, j)) {
                out.push_back(*t);
            }
        }
    }
    return out;
}

TriangleSolution min_area_enclosing_triangle(std::span<const Point2> points) {
    std::vector<TriangleSolution> all = flush_edge_triangles(points);
    if (all.empty()) {
        throw DegenerateInputError("No enclosing triangle found.");
    }
    const TriangleSolution *best = &all[0];
    for (const TriangleSolution &t : all) {
        if (t.area < best->area) {
            best = &t;
        }
    }
    return *best;
}

double matched_hausdorff(const Triangle &a, const Triangle &b) {
    std::array<size_t, 3> perm{0, 1, 2};
    double best = std::numeric_limits<double>::infinity();
    do {
        double worst = 0;
        for (size_t k = 0; k < 3; k++) {
            Point2 d = sub(a.v[k], b.v[perm[k]]);
            worst = std::max(worst, std::hypot(d[0], d[1]));
        }
        best = std::min(best, worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::optional<std::pair<Triangle, Triangle>> nonuniqueness_witness(std::span<const Point2> points, double tol) {
    std::vector<TriangleSolution> all = flush_edge_triangles(points);
    double best = std::numeric_limits<double>::infinity();
    for (const TriangleSolution &t : all) {
        best = std::min(best, t.area);
    }
    std::vector<Triangle> optimal;
    for (const TriangleSolution &t : all) {
        if (t.area <= best + tol) {
            optimal.push_back(t.triangle);
        }
    }
    for (size_t a = 0; a < optimal.size(); a++) {
        for (size_t b = a + 1; b < optimal.size(); b++) {
            if (matched_hausdorff(optimal[a], optimal[b]) > std::max(tol, kDistinctTriangleDistance)) {
                return std::make_pair(optimal[a], optimal[b]);
            }
        }
    }
    return std::nullopt;
}

bool triangle_contains(const Triangle &t, const Point2 &p, double tol) {
    double total = cross(t.v[0], t.v[1], t.v[2]);
    if (std::abs(total) <= 2e-12) {
        throw ContractError("triangle_contains: degenerate triangle.");
    }
    double l0 = cross(p, t.v[1], t.v[2]) / total;
    double l1 = cross(t.v[0], p, t.v[2]) / total;
    double l2 = cross(t.v[0], t.v[1], p) / total;
    return l0 >= -tol && l1 >= -tol && l2 >= -tol;
}

}  // namespace ddi
