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


#ifndef DDI_SIMPLEX2D_H
#define DDI_SIMPLEX2D_H

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ddi {

using Point2 = std::array<double, 2>;

struct Triangle {
    std::array<Point2, 3> v;

    /// Unsigned area.
    double area() const;
};

struct TriangleSolution {
    Triangle triangle;
    double area = 0;
    /// Hull edge (hull[k] -> hull[k+1]) that one side of the triangle contains.
    size_t flush_edge = 0;
};

/// Convex hull in counter-clockwise order without collinear vertices.
std::vector<Point2> convex_hull(std::span<const Point2> points);

/// All locally optimal enclosing triangles with at least two sides flush
/// with hull edges, found by sweeping the third side through the angular
/// window left open by each flush pair. Every minimum-area enclosing triangle
/// is congruent to one of these (a minimal triangle has a flush side and the
/// midpoint of every side on the hull). Throws DegenerateInputError if the
/// points are collinear or fewer than 3.
std::vector<TriangleSolution> flush_edge_triangles(std::span<const Point2> points);

/// A minimum-area triangle enclosing `points`.
TriangleSolution min_area_enclosing_triangle(std::span<const Point2> points);

/// Two enclosing triangles whose areas are within `tol` of the optimum and
/// whose vertex sets are more than kDistinctTriangleDistance apart in
/// matched Hausdorff distance, if such a pair exists among the flush-edge
/// optima.
std::optional<std::pair<Triangle, Triangle>> nonuniqueness_witness(
    std::span<const Point2> points, double tol = 1e-9);

inline constexpr double kDistinctTriangleDistance = 1e-6;

/// Max vertex distance under the best of the 6 vertex matchings.
double matched_hausdorff(const Triangle &a, const Triangle &b);

/// True iff every barycentric coordinate of p is >= -tol.
bool triangle_contains(const Triangle &t, const Point2 &p, double tol);

}  // namespace ddi

#endif
