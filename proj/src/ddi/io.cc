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


#include "ddi/io.h"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "ddi/errors.h"

namespace ddi {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
    const char *ws = " \t\r\n";
    size_t a = s.find_first_not_of(ws);
    if (a == std::string_view::npos) {
        return {};
    }
    size_t b = s.find_last_not_of(ws);
    return s.substr(a, b - a + 1);
}

double parse_double(std::string_view field, size_t line) {
    field = trim(field);
    if (!field.empty() && field[0] == '+') {
        field.remove_prefix(1);
    }
    double v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(v)) {
        throw ParseError("line " + std::to_string(line) + ": '" + std::string(field) + "' is not a finite number");
    }
    return v;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double number(const json &j, const char *what) {
    if (!j.is_number()) {
        throw ParseError(std::string(what) + " must be a number");
    }
    double v = j.get<double>();
    if (!std::isfinite(v)) {
        throw ParseError(std::string(what) + " must be finite");
    }
    return v;
}

const json &field(const json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

Vector vector_from_json(const json &j, const char *what) {
    if (!j.is_array()) {
        throw ParseError(std::string(what) + " must be an array");
    }
    Vector v;
    for (const json &x : j) {
        v.push_back(number(x, what));
    }
    return v;
}

}  // namespace

Matrix parse_prob_table(std::string_view text) {
    std::vector<Vector> rows;
    size_t line_no = 0;
    while (!text.empty()) {
        size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        line_no++;
        line = trim(line);
        if (line.empty() || line[0] == '#') {
            continue;
        }
        Vector row;
        while (true) {
            size_t comma = line.find(',');
            row.push_back(parse_double(line.substr(0, comma), line_no));
            if (comma == std::string_view::npos) {
                break;
            }
            line = line.substr(comma + 1);
        }
        if (!rows.empty() && row.size() != rows[0].size()) {
            throw ParseError(
                "line " + std::to_string(line_no) + ": expected " + std::to_string(rows[0].size()) + " columns, got " +
                std::to_string(row.size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw ParseError("table has no data rows");
    }
    return Matrix::from_rows(rows);
}

std::string format_table(const Matrix &table, std::string_view header) {
    std::string out;
    if (!header.empty()) {
        out += "# ";
        out += header;
        out += '\n';
    }
    for (size_t r = 0; r < table.rows(); r++) {
        for (size_t c = 0; c < table.cols(); c++) {
            if (c) {
                out += ',';
            }
            out += fmt17(table(r, c));
        }
        out += '\n';
    }
    return out;
}

std::string format_counts(const std::vector<std::vector<uint64_t>> &counts, std::string_view header) {
    std::string out;
    if (!header.empty()) {
        out += "# ";
        out += header;
        out += '\n';
    }
    for (const auto &row : counts) {
        for (size_t c = 0; c < row.size(); c++) {
            if (c) {
                out += ',';
            }
            out += std::to_string(row[c]);
        }
        out += '\n';
    }
    return out;
}

json matrix_to_json(const Matrix &m) {
    json out = json::array();
    for (size_t r = 0; r < m.rows(); r++) {
        out.push_back(m.row(r));
    }
    return out;
}

Matrix matrix_from_json(const json &j) {
    if (!j.is_array()) {
        throw ParseError("matrix must be an array of rows");
    }
    std::vector<Vector> rows;
    for (const json &r : j) {
        rows.push_back(vector_from_json(r, "matrix row"));
        if (rows.back().size() != rows.front().size()) {
            throw ParseError("matrix rows have unequal lengths");
        }
    }
    return Matrix::from_rows(rows);
}

json range_to_json(const RangeEllipsoid &e) {
    return {{"n", e.n()}, {"t", e.t}, {"Q", matrix_to_json(e.q)}};
}

RangeEllipsoid range_from_json(const json &j) {
    Vector t = vector_from_json(field(j, "t"), "t");
    Matrix q = matrix_from_json(field(j, "Q"));
    if (j.contains("n") && (!j.at("n").is_number_unsigned() || j.at("n").get<size_t>() != t.size())) {
        throw ParseError("'n' does not match the length of 't'");
    }
    if (t.empty() && q.empty()) {
        return {};
    }
    if (q.rows() != t.size() || q.cols() != t.size()) {
        throw ParseError("'Q' must be n x n with n = len(t)");
    }
    // External ranges (e.g. rounded published values) may be slightly
    // indefinite; consistency is judged by range_invert, not the parser.
    EigDecomposition eig;
    try {
        eig = sym_eig(q);
    } catch (const ContractError &e) {
        throw ParseError(e.what());
    }
    RangeEllipsoid e{std::move(t), std::move(q), 0};
    double cut = kDefaultRankTol * std::max(eig.values[0], 0.0);
    for (double v : eig.values) {
        e.rank += v > cut && v > 0;
    }
    return e;
}

json povm_to_json(const QubitPovm &p) {
    json effects = json::array();
    for (const QubitEffect &e : p.effects) {
        effects.push_back({{"a", e.a}, {"b", e.b}});
    }
    return {{"effects", effects}};
}

QubitPovm povm_from_json(const json &j) {
    const json &effects = field(j, "effects");
    if (!effects.is_array()) {
        throw ParseError("'effects' must be an array");
    }
    QubitPovm p;
    for (const json &e : effects) {
        Vector b = vector_from_json(field(e, "b"), "b");
        if (b.size() != 3) {
            throw ParseError("effect 'b' must have 3 entries");
        }
        p.effects.push_back({number(field(e, "a"), "a"), {b[0], b[1], b[2]}});
    }
    return p;
}

json states_to_json(const StateSet &s) {
    return {{"bloch", s}};
}

StateSet states_from_json(const json &j) {
    const json &bloch = field(j, "bloch");
    if (!bloch.is_array()) {
        throw ParseError("'bloch' must be an array");
    }
    StateSet s;
    for (const json &r : bloch) {
        Vector v = vector_from_json(r, "Bloch vector");
        if (v.size() != 3) {
            throw ParseError("Bloch vectors must have 3 entries");
        }
        s.push_back({v[0], v[1], v[2]});
    }
    return s;
}

Matrix projector_from_json(const json &j) {
    Matrix p = matrix_from_json(j.is_object() ? field(j, "projector") : j);
    try {
        validate_projector(p);
    } catch (const ContractError &e) {
        throw ParseError(e.what());
    }
    return p;
}

std::vector<Point2> points_from_json(const json &j) {
    const json &pts = field(j, "points");
    if (!pts.is_array()) {
        throw ParseError("'points' must be an array");
    }
    std::vector<Point2> out;
    for (const json &p : pts) {
        Vector v = vector_from_json(p, "point");
        if (v.size() != 2) {
            throw ParseError("points must have 2 coordinates");
        }
        out.push_back({v[0], v[1]});
    }
    return out;
}

bool InferenceReport::operator==(const InferenceReport &o) const {
    return rows == o.rows && cols == o.cols && row_sum_residuals == o.row_sum_residuals &&
           renormalized == o.renormalized && affine_dim == o.affine_dim && range.t == o.range.t &&
           range.q == o.range.q && range.rank == o.range.rank && volume == o.volume && povm == o.povm &&
           status == o.status && message == o.message;
}

json report_to_json(const InferenceReport &r) {
    json range = range_to_json(r.range);
    range["rank"] = r.range.rank;
    range["volume"] = r.volume;
    return {
        {"input",
         {{"rows", r.rows},
          {"cols", r.cols},
          {"row_sum_residuals", r.row_sum_residuals},
          {"renormalized", r.renormalized}}},
        {"frame", {{"affine_dim", r.affine_dim}}},
        {"range", range},
        {"povm", r.povm ? povm_to_json(*r.povm) : json(nullptr)},
        {"diagnostics", {{"status", r.status}, {"message", r.message}}},
    };
}

InferenceReport report_from_json(const json &j) {
    InferenceReport r;
    try {
        const json &input = field(j, "input");
        r.rows = field(input, "rows").get<size_t>();
        r.cols = field(input, "cols").get<size_t>();
        r.row_sum_residuals = vector_from_json(field(input, "row_sum_residuals"), "row_sum_residuals");
        r.renormalized = field(input, "renormalized").get<bool>();
        r.affine_dim = field(field(j, "frame"), "affine_dim").get<size_t>();
        const json &range = field(j, "range");
        r.range.t = vector_from_json(field(range, "t"), "t");
        r.range.q = matrix_from_json(field(range, "Q"));
        r.range.rank = field(range, "rank").get<size_t>();
        r.volume = number(field(range, "volume"), "volume");
        if (!field(j, "povm").is_null()) {
            r.povm = povm_from_json(j.at("povm"));
        }
        const json &diag = field(j, "diagnostics");
        r.status = field(diag, "status").get<std::string>();
        r.message = field(diag, "message").get<std::string>();
    } catch (const json::exception &e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    }
    return r;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace ddi
