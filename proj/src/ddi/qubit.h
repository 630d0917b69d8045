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


#ifndef DDI_QUBIT_H
#define DDI_QUBIT_H

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ddi/linalg.h"
#include "ddi/mvee.h"

namespace ddi {

/// Real 3-vector in Bloch coordinates.
using Bloch = std::array<double, 3>;

/// Qubit states as Bloch vectors, |r| <= 1.
using StateSet = std::vector<Bloch>;

/// Effect a * I + b . sigma. Outcome probability on state r is a + b . r.
struct QubitEffect {
    double a = 0;
    Bloch b{};

    bool operator==(const QubitEffect &) const = default;
};

struct QubitPovm {
    std::vector<QubitEffect> effects;

    size_t size() const {
        return effects.size();
    }
    bool operator==(const QubitPovm &) const = default;
};

/// Describes the first broken POVM invariant (normalization, positivity,
/// outcome count), or nullopt when `povm` is valid within `tol`.
std::optional<std::string> povm_violation(const QubitPovm &povm, double tol = 1e-9);

/// Throws ContractError if `povm` breaks an invariant.
void validate_povm(const QubitPovm &povm, double tol = 1e-9);

/// Throws ContractError if a state has |r| > 1 + 1e-12 or the set is empty.
void validate_states(const StateSet &states);

/// Equal-weight mixture of the z and x projective measurements.
QubitPovm ideal_mub_povm();

/// Two-outcome projective measurement along the unit vector `axis`.
QubitPovm projective_povm(const Bloch &axis);

/// Born rule p_y = a_y + b_y . r, clamped to [0, 1].
Vector born(const QubitPovm &povm, const Bloch &state);

/// One row of Born probabilities per state.
Matrix born_table(const QubitPovm &povm, const StateSet &states);

/// Range invariants: t_y = a_y and Q_xy = b_x . b_y.
RangeEllipsoid povm_range(const QubitPovm &povm);

enum class InversionFailure {
    kInconsistentCorrelation,
    kExceedsQubitDimension,
    kNotNormalizable,
    kPositivityViolated,
};

/// Machine-readable tag, e.g. "exceeds_qubit_dimension".
std::string_view failure_code(InversionFailure failure);

/// Raised when a range cannot be produced by any qubit POVM.
class InversionError : public std::runtime_error {
   public:
    InversionError(InversionFailure kind, const std::string &what) : std::runtime_error(what), kind_(kind) {
    }
    InversionFailure kind() const {
        return kind_;
    }

   private:
    InversionFailure kind_;
};

inline constexpr double kExactInversionTol = 1e-9;

/// Recovers a POVM with the given range, in the canonical gauge.
///
/// a_y = t_y. Q is eigendecomposed (descending, sign-fixed) and row y of
/// U_r sqrt(Lambda_r) becomes b_y with eigen-axis k placed on Bloch axis k,
/// where r <= 3 counts the numerically nonzero eigenvalues. Eigenvalues at
/// or below `tol` are treated as zero only for the rank test. Inside a degenerate eigenspace
/// the axis choice is whatever the eigensolver returns; any choice is
/// gauge-equivalent.
///
/// Small violations of normalization (within `tol`) are projected away so
/// the result satisfies sum a = 1 and sum b = 0 to rounding.
///
/// Throws InversionError with:
///  - kInconsistentCorrelation if Q has an eigenvalue below -tol,
///  - kExceedsQubitDimension if more than 3 eigenvalues exceed tol,
///  - kNotNormalizable if |sum t - 1| > tol or max|Q 1| > tol,
///  - kPositivityViolated if some |b_y| > min(t_y, 1 - t_y) + tol.
QubitPovm range_invert(const RangeEllipsoid &range, double tol = kExactInversionTol);

/// Applies the orthogonal map `o` (3x3, det +-1) to every Bloch part.
/// Throws ContractError if o is not orthogonal within 1e-10.
QubitPovm gauge_apply(const QubitPovm &povm, const Matrix &o);

/// Whether two POVMs have the same range, i.e. differ by a gauge
/// transformation. Throws ContractError on differing outcome counts.
bool gauge_equivalent(const QubitPovm &a, const QubitPovm &b, double tol);

/// Orthogonal O minimizing sum_y |O b_y(from) - b_y(to)|^2 (orthogonal
/// Procrustes). When the two POVMs are gauge-equivalent this maps one onto
/// the other.
Matrix gauge_align(const QubitPovm &from, const QubitPovm &to);

struct SimulatedCounts {
    std::vector<std::vector<uint64_t>> counts;
    Matrix frequencies;
};

/// Draws `shots` outcomes per state from the Born distribution.
///
/// Sampling is by inverse CDF over cumulative probabilities using
/// std::mt19937_64 seeded with `seed`; uniforms are formed from the top 53
/// bits of each draw. Both pieces are fully specified by the C++ standard,
/// so identical seeds give identical counts on every platform.
SimulatedCounts simulate_counts(const QubitPovm &povm, const StateSet &states, uint64_t shots, uint64_t seed);

}  // namespace ddi

#endif
