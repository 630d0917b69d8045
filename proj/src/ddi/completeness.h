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


#ifndef DDI_COMPLETENESS_H
#define DDI_COMPLETENESS_H

#include <optional>
#include <string_view>

#include "ddi/linalg.h"
#include "ddi/mvee.h"
#include "ddi/qubit.h"

namespace ddi {

inline constexpr double kDefaultCompletenessTol = 1e-6;

/// Outcome of a completeness check. A negative verdict carries a witness:
/// the inferred ellipsoid for observational checks, the affine dimension of
/// the set for the informational check.
struct CompletenessVerdict {
    bool complete = false;
    std::optional<RangeEllipsoid> mvee_witness;
    std::optional<size_t> affine_dim_witness;
};

/// True iff the Bloch vectors affinely span R^3. `tol` is the affine-hull
/// tolerance.
CompletenessVerdict is_informationally_complete(const StateSet &states, double tol = kDefaultAffineTol);

/// True iff the minimum-volume ellipsoid of the Bloch vectors is the Bloch
/// ball: |Q - I|_max <= tol and |t|_inf <= tol.
CompletenessVerdict is_observationally_complete(const StateSet &states, double tol = kDefaultCompletenessTol);

/// Same test restricted to a subspace: the ellipsoid of {P r} must be the
/// unit ball of range(P), i.e. Q = P and t = 0 within tol. `projector` must
/// be a 3x3 symmetric idempotent matrix.
CompletenessVerdict is_oc_for_support(
    const StateSet &states, const Matrix &projector, double tol = kDefaultCompletenessTol);

/// Throws ContractError unless `p` is 3x3, symmetric and idempotent within
/// 1e-10.
void validate_projector(const Matrix &p);

/// Orthogonal projector onto the span of the given Bloch axes (0=x, 1=y, 2=z).
Matrix axis_projector(std::initializer_list<size_t> axes);

/// The SIC tetrahedron: (1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1), over sqrt(3).
StateSet gen_regular_simplex();

/// n unit vectors equally spaced in the plane range(plane), the first on the
/// plane's first basis axis.
StateSet gen_regular_polygon(size_t n, const Matrix &plane);

/// Unit-radius vertices of a Platonic solid: tetrahedron, octahedron, cube,
/// icosahedron or dodecahedron.
StateSet gen_platonic(std::string_view name);

/// Copy of `states` with states[index] scaled by `factor` (0 < factor <= 1).
StateSet perturb_set(const StateSet &states, size_t index, double factor);

}  // namespace ddi

#endif
