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


#ifndef DDI_MVEE_H
#define DDI_MVEE_H

#include <cstddef>
#include <span>
#include <stdexcept>

#include "ddi/linalg.h"

namespace ddi {

inline constexpr double kDefaultAffineTol = 1e-7;
inline constexpr double kDefaultMveeEps = 1e-9;

/// Affine hull of a point set: origin + span(basis columns).
struct AffineFrame {
    Vector origin;
    Matrix basis;  // n x d, orthonormal columns

    size_t dim() const {
        return basis.cols();
    }
};

struct AffineReduction {
    AffineFrame frame;
    /// One row per input point: basis^T (p - origin). Affinely spans R^d.
    Matrix reduced;
};

/// Finds the affine hull of `points` (one point per row) and expresses the
/// points in an orthonormal frame of it.
///
/// The origin is the first point. The dimension is the smallest d for which
/// every point lies within `tol_aff` (max-norm) of origin + span(basis).
AffineReduction affine_reduce(const Matrix &points, double tol_aff = kDefaultAffineTol);

/// Ellipsoid {x : (x - center)^T shape (x - center) <= 1} with positive
/// definite `shape`.
struct FullDimEllipsoid {
    Vector center;
    Matrix shape;
};

struct MveeOptions {
    double eps = kDefaultMveeEps;
    size_t max_iterations = 1'000'000;
};

/// Thrown when the ascent does not reach the requested accuracy. Carries the
/// last iterate.
class SolverError : public std::runtime_error {
   public:
    SolverError(const std::string &what, FullDimEllipsoid last, size_t iterations)
        : std::runtime_error(what), last_(std::move(last)), iterations_(iterations) {
    }
    const FullDimEllipsoid &last_iterate() const {
        return last_;
    }
    size_t iterations() const {
        return iterations_;
    }

   private:
    FullDimEllipsoid last_;
    size_t iterations_;
};

/// Minimum-volume enclosing ellipsoid of points that affinely span R^d
/// (rows of `points`, d = cols).
///
/// Uses Khachiyan's barycentric ascent on the lifted points (x; 1) with
/// Todd-Yildirim away steps, stopping once the weights are eps-optimal and
/// satisfy the eps core condition. The returned shape is rescaled so every
/// input point lies inside. d = 1 is solved in closed form.
///
/// Throws ContractError if the points do not span R^d, SolverError if
/// max_iterations is exhausted.
FullDimEllipsoid mvee_full(const Matrix &points, const MveeOptions &options = {});

/// Ellipsoid in outcome space, possibly supported on a proper affine subspace:
/// {p : (I - Q Q^+)(p - t) = 0, (p - t)^T Q^+ (p - t) <= 1}.
struct RangeEllipsoid {
    Vector t;
    Matrix q;
    size_t rank = 0;

    size_t n() const {
        return t.size();
    }
};

/// Builds a RangeEllipsoid, computing the support rank from Q's eigenvalues.
/// Throws ContractError on shape mismatch or if Q is not PSD within 1e-9.
RangeEllipsoid make_range(Vector t, Matrix q);

/// Minimum-volume range of a spherical state space containing the given
/// distributions: reduce to the affine hull, solve the MVEE there and lift
/// back as Q = V A^-1 V^T, t = V c + p0.
RangeEllipsoid ddi_spherical(
    const Matrix &points, const MveeOptions &options = {}, double tol_aff = kDefaultAffineTol);

bool ellipsoid_contains(const RangeEllipsoid &e, std::span<const double> p, double tol);

struct EllipsoidVolume {
    size_t rank;
    double volume;
};

/// Volume measured inside the ellipsoid's own support.
EllipsoidVolume ellipsoid_volume(const RangeEllipsoid &e);

/// max|Q1 - Q2| <= tol and max|t1 - t2| <= tol.
bool ellipsoid_equal(const RangeEllipsoid &a, const RangeEllipsoid &b, double tol);

/// Volume of the unit ball in R^d.
double unit_ball_volume(size_t d);

}  // namespace ddi

#endif
