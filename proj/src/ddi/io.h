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


#ifndef DDI_IO_H
#define DDI_IO_H

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "ddi/completeness.h"
#include "ddi/linalg.h"
#include "ddi/mvee.h"
#include "ddi/qubit.h"
#include "ddi/simplex2d.h"

namespace ddi {

/// Malformed input text or a JSON document that does not match its schema.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses a frequency table: one row per input, comma-separated decimal
/// floats, blank lines and lines starting with '#' ignored. All rows must
/// have the same length.
Matrix parse_prob_table(std::string_view text);

/// CSV with 17 significant digits per entry.
std::string format_table(const Matrix &table, std::string_view header = {});
std::string format_counts(const std::vector<std::vector<uint64_t>> &counts, std::string_view header = {});

/// {"n": n, "t": [...], "Q": [[...]]}
nlohmann::json range_to_json(const RangeEllipsoid &e);
RangeEllipsoid range_from_json(const nlohmann::json &j);

/// {"effects": [{"a": .., "b": [.., .., ..]}, ...]}
nlohmann::json povm_to_json(const QubitPovm &p);
QubitPovm povm_from_json(const nlohmann::json &j);

/// {"bloch": [[x, y, z], ...]}
nlohmann::json states_to_json(const StateSet &s);
StateSet states_from_json(const nlohmann::json &j);

/// {"projector": [[...]]} or a bare 3x3 array.
Matrix projector_from_json(const nlohmann::json &j);

/// {"points": [[x, y], ...]}
std::vector<Point2> points_from_json(const nlohmann::json &j);

nlohmann::json matrix_to_json(const Matrix &m);
Matrix matrix_from_json(const nlohmann::json &j);

/// Machine-readable result of `infer` / `reconstruct`.
struct InferenceReport {
    size_t rows = 0;
    size_t cols = 0;
    Vector row_sum_residuals;
    bool renormalized = false;
    size_t affine_dim = 0;
    RangeEllipsoid range;
    double volume = 0;
    std::optional<QubitPovm> povm;
    /// "ok" or an InversionFailure code.
    std::string status = "ok";
    std::string message;

    bool operator==(const InferenceReport &other) const;
};

nlohmann::json report_to_json(const InferenceReport &r);
InferenceReport report_from_json(const nlohmann::json &j);

/// Parses JSON text, mapping syntax errors to ParseError.
nlohmann::json parse_json(std::string_view text);

}  // namespace ddi

#endif
