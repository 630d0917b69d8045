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


#include "ddi/cli.h"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"

#include "ddi/completeness.h"
#include "ddi/errors.h"
#include "ddi/io.h"
#include "ddi/mvee.h"
#include "ddi/qubit.h"
#include "ddi/simplex2d.h"

namespace ddi::cli {

using nlohmann::json;

namespace {

// Carries an exit code out of a subcommand.
struct Exit {
    int code;
    std::string message;
};

struct Io {
    std::istream &in;
    std::ostream &out;
    std::ostream &err;
};

std::string read_source(const std::string &path, std::istream &in) {
    std::stringstream ss;
    if (path == "-") {
        ss << in.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) {
        throw Exit{kMalformedInput, "cannot read '" + path + "'"};
    }
    ss << f.rdbuf();
    return ss.str();
}

void write_sink(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) {
        throw Exit{kMalformedInput, "cannot write '" + path + "'"};
    }
    f << text;
}

std::string dump(const json &j) {
    return j.dump(2) + "\n";
}

struct InferOptions {
    std::string table = "-";
    std::string output;
    double row_tol = 1e-6;
    bool renormalize = false;
    double eps = kDefaultMveeEps;
    double tol_aff = kDefaultAffineTol;
    std::string plot;
    std::string plot_out = "ddi-plot.svg";
};

struct ReconstructOptions {
    InferOptions infer;
    double povm_tol = 0.02;
    std::string from_range;
};

void add_infer_flags(CLI::App *cmd, InferOptions &o, bool table_required) {
    auto *table = cmd->add_option("table", o.table, "CSV frequency table (rows = inputs, columns = outcomes); '-' for stdin");
    if (table_required) {
        table->required();
    }
    cmd->add_option("-o,--output", o.output, "Write the JSON report here instead of stdout");
    cmd->add_option("--row-tol", o.row_tol, "Allowed |row sum - 1|")->capture_default_str();
    cmd->add_flag("--renormalize", o.renormalize, "Divide each row by its sum instead of rejecting it");
    cmd->add_option("--eps", o.eps, "MVEE solver accuracy")->capture_default_str();
    cmd->add_option("--tol-aff", o.tol_aff, "Affine-hull membership tolerance")->capture_default_str();
    cmd->add_option("--plot", o.plot, "Emit a static plot of the reduced data and ellipse")->check(CLI::IsMember({"svg"}));
    cmd->add_option("--plot-out", o.plot_out, "Path for --plot output")->capture_default_str();
}

std::string render_svg(const AffineReduction &red, const RangeEllipsoid &range) {
    // Draw in the frame coordinates; the ellipse is the shadow of the range on
    // the first two frame axes.
    size_t d = red.frame.dim();
    std::vector<Point2> pts;
    for (size_t x = 0; x < red.reduced.rows(); x++) {
        pts.push_back({d > 0 ? red.reduced(x, 0) : 0.0, d > 1 ? red.reduced(x, 1) : 0.0});
    }
    Matrix vt = red.frame.basis.transpose();
    Matrix shadow = vt * range.q * vt.transpose();
    Vector c(d, 0.0);
    for (size_t k = 0; k < d; k++) {
        for (size_t i = 0; i < range.n(); i++) {
            c[k] += red.frame.basis(i, k) * (range.t[i] - red.frame.origin[i]);
        }
    }
    std::vector<Point2> curve;
    if (d >= 1) {
        double s00 = shadow(0, 0);
        double s01 = d > 1 ? shadow(0, 1) : 0.0;
        double s11 = d > 1 ? shadow(1, 1) : 0.0;
        // 2x2 Cholesky of the shadow covariance.
        double l00 = std::sqrt(std::max(s00, 0.0));
        double l10 = l00 > 0 ? s01 / l00 : 0.0;
        double l11 = std::sqrt(std::max(s11 - l10 * l10, 0.0));
        for (int k = 0; k <= 128; k++) {
            double a = 2 * std::numbers::pi * k / 128;
            double u = std::cos(a);
            double v = std::sin(a);
            curve.push_back({c[0] + l00 * u, (d > 1 ? c[1] : 0.0) + l10 * u + l11 * v});
        }
    }
    double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
    bool first = true;
    for (const auto *set : {&pts, &curve}) {
        for (const Point2 &p : *set) {
            if (first) {
                lo_x = hi_x = p[0];
                lo_y = hi_y = p[1];
                first = false;
            }
            lo_x = std::min(lo_x, p[0]);
            hi_x = std::max(hi_x, p[0]);
            lo_y = std::min(lo_y, p[1]);
            hi_y = std::max(hi_y, p[1]);
        }
    }
    double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
    auto px = [&](const Point2 &p) {
        double sx = 20 + 360 * (p[0] - lo_x) / span;
        double sy = 380 - 360 * (p[1] - lo_y) / span;
        return std::to_string(sx) + "," + std::to_string(sy);
    };
    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n";
    svg += "<rect width=\"400\" height=\"400\" fill=\"white\"/>\n";
    if (!curve.empty()) {
        svg += "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
        for (const Point2 &p : curve) {
            svg += px(p) + " ";
        }
        svg += "\"/>\n";
    }
    for (const Point2 &p : pts) {
        auto xy = px(p);
        auto comma = xy.find(',');
        svg += "<circle cx=\"" + xy.substr(0, comma) + "\" cy=\"" + xy.substr(comma + 1) +
               "\" r=\"4\" fill=\"none\" stroke=\"black\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

// Loads and checks a frequency table; fills the input digest of `report`.
Matrix load_table(const InferOptions &o, Io io, InferenceReport &report) {
    Matrix table;
    try {
        table = parse_prob_table(read_source(o.table, io.in));
    } catch (const ParseError &e) {
        throw Exit{kMalformedInput, e.what()};
    }
    report.rows = table.rows();
    report.cols = table.cols();
    report.renormalized = o.renormalize;
    report.row_sum_residuals.assign(table.rows(), 0.0);
    for (size_t x = 0; x < table.rows(); x++) {
        double sum = 0;
        for (size_t y = 0; y < table.cols(); y++) {
            if (table(x, y) < 0) {
                throw Exit{kMalformedInput, "row " + std::to_string(x) + " has a negative frequency"};
            }
            sum += table(x, y);
        }
        report.row_sum_residuals[x] = sum - 1;
        if (o.renormalize) {
            if (!(sum > 0)) {
                throw Exit{kRowSumViolation, "row " + std::to_string(x) + " sums to zero; cannot renormalize"};
            }
            for (size_t y = 0; y < table.cols(); y++) {
                table(x, y) /= sum;
            }
        } else if (std::abs(sum - 1) > o.row_tol) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "row " << x << " sums to " << sum << ", not 1 (use --renormalize or raise --row-tol)";
            throw Exit{kRowSumViolation, msg.str()};
        }
    }
    return table;
}

InferenceReport infer(const InferOptions &o, Io io) {
    InferenceReport report;
    Matrix table = load_table(o, io, report);
    if (!(o.eps > 0) || !(o.tol_aff >= 0)) {
        throw Exit{kMalformedInput, "--eps must be > 0 and --tol-aff >= 0"};
    }
    AffineReduction red = affine_reduce(table, o.tol_aff);
    try {
        report.range = ddi_spherical(table, {.eps = o.eps}, o.tol_aff);
    } catch (const SolverError &e) {
        throw Exit{kSolverFailure, e.what()};
    } catch (const ContractError &e) {
        throw Exit{kSolverFailure, e.what()};
    }
    report.affine_dim = red.frame.dim();
    report.volume = ellipsoid_volume(report.range).volume;
    if (o.plot == "svg") {
        write_sink(o.plot_out, render_svg(red, report.range), io.out);
    }
    return report;
}

int cmd_infer(const InferOptions &o, Io io) {
    InferenceReport report = infer(o, io);
    write_sink(o.output, dump(report_to_json(report)), io.out);
    return kOk;
}

int cmd_reconstruct(const ReconstructOptions &o, Io io) {
    InferenceReport report;
    if (!o.from_range.empty()) {
        json j;
        try {
            j = parse_json(read_source(o.from_range, io.in));
            if (j.is_object() && j.contains("range") && j.contains("input")) {
                report = report_from_json(j);
                report.povm.reset();
                report.status = "ok";
                report.message.clear();
            } else {
                report.range = range_from_json(j);
                report.affine_dim = report.range.rank;
                report.volume = ellipsoid_volume(report.range).volume;
            }
        } catch (const ParseError &e) {
            throw Exit{kMalformedInput, e.what()};
        }
    } else {
        report = infer(o.infer, io);
    }
    int code = kOk;
    try {
        report.povm = range_invert(report.range, o.povm_tol);
    } catch (const InversionError &e) {
        report.status = std::string(failure_code(e.kind()));
        report.message = std::string("the inference fails: ") + e.what();
        io.err << "ddi reconstruct: " << report.message << "\n";
        code = kInversionFailure;
    } catch (const ContractError &e) {
        throw Exit{kMalformedInput, e.what()};
    }
    write_sink(o.infer.output, dump(report_to_json(report)), io.out);
    return code;
}

struct SimulateOptions {
    std::string povm;
    std::string states;
    uint64_t shots = 0;
    std::optional<uint64_t> seed;
    bool counts = false;
    std::string output;
};

uint64_t resolve_seed(const std::optional<uint64_t> &flag) {
    if (flag) {
        return *flag;
    }
    if (const char *env = std::getenv("DDI_SEED")) {
        std::string s(env);
        uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
            throw Exit{kMalformedInput, "DDI_SEED is not an unsigned integer"};
        }
        return v;
    }
    throw Exit{kMalformedInput, "simulate needs --seed (or DDI_SEED) when --shots > 0"};
}

int cmd_simulate(const SimulateOptions &o, Io io) {
    if (o.povm == "-" && o.states == "-") {
        throw Exit{kMalformedInput, "only one of --povm and --states can read stdin"};
    }
    QubitPovm povm;
    StateSet states;
    try {
        povm = povm_from_json(parse_json(read_source(o.povm, io.in)));
        states = states_from_json(parse_json(read_source(o.states, io.in)));
        validate_povm(povm);
        validate_states(states);
    } catch (const ParseError &e) {
        throw Exit{kMalformedInput, e.what()};
    } catch (const ContractError &e) {
        throw Exit{kMalformedInput, e.what()};
    }
    std::string text;
    if (o.shots == 0) {
        text = format_table(born_table(povm, states), "exact Born probabilities");
    } else {
        uint64_t seed = resolve_seed(o.seed);
        SimulatedCounts sim = simulate_counts(povm, states, o.shots, seed);
        std::string header = "shots=" + std::to_string(o.shots) + " seed=" + std::to_string(seed);
        text = o.counts ? format_counts(sim.counts, header) : format_table(sim.frequencies, header);
    }
    write_sink(o.output, text, io.out);
    return kOk;
}

struct CheckOptions {
    std::string states;
    std::string mode = "oc";
    std::string projector;
    std::optional<double> tol;
    std::string output;
};

int cmd_check(const CheckOptions &o, Io io) {
    StateSet states;
    Matrix projector;
    try {
        states = states_from_json(parse_json(read_source(o.states, io.in)));
        validate_states(states);
        if (o.mode == "oc-support") {
            if (o.projector.empty()) {
                throw Exit{kMalformedInput, "--mode oc-support needs --projector"};
            }
            projector = projector_from_json(parse_json(read_source(o.projector, io.in)));
        }
    } catch (const ParseError &e) {
        throw Exit{kMalformedInput, e.what()};
    } catch (const ContractError &e) {
        throw Exit{kMalformedInput, e.what()};
    }
    CompletenessVerdict v;
    if (o.mode == "ic") {
        v = is_informationally_complete(states, o.tol.value_or(kDefaultAffineTol));
    } else if (o.mode == "oc") {
        v = is_observationally_complete(states, o.tol.value_or(kDefaultCompletenessTol));
    } else {
        v = is_oc_for_support(states, projector, o.tol.value_or(kDefaultCompletenessTol));
    }
    json witness = nullptr;
    if (v.mvee_witness) {
        witness = {{"mvee", range_to_json(*v.mvee_witness)}};
    } else if (v.affine_dim_witness) {
        witness = {{"affine_dim", *v.affine_dim_witness}};
    }
    json out = {{"mode", o.mode}, {"states", states.size()}, {"complete", v.complete}, {"witness", witness}};
    write_sink(o.output, dump(out), io.out);
    return kOk;
}

struct EquivOptions {
    std::string a;
    std::string b;
    double tol = 1e-6;
    std::string output;
};

double det3(const Matrix &m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

int cmd_equiv(const EquivOptions &o, Io io) {
    if (o.a == "-" && o.b == "-") {
        throw Exit{kMalformedInput, "only one POVM can be read from stdin"};
    }
    QubitPovm a;
    QubitPovm b;
    try {
        a = povm_from_json(parse_json(read_source(o.a, io.in)));
        b = povm_from_json(parse_json(read_source(o.b, io.in)));
        validate_povm(a);
        validate_povm(b);
    } catch (const ParseError &e) {
        throw Exit{kMalformedInput, e.what()};
    } catch (const ContractError &e) {
        throw Exit{kMalformedInput, e.what()};
    }
    if (a.size() != b.size()) {
        throw Exit{kMalformedInput, "POVMs have different outcome counts (" + std::to_string(a.size()) + " vs " +
                                        std::to_string(b.size()) + ")"};
    }
    RangeEllipsoid ra = povm_range(a);
    RangeEllipsoid rb = povm_range(b);
    Matrix o3 = gauge_align(a, b);
    json out = {
        {"equivalent", gauge_equivalent(a, b, o.tol)},
        {"tol", o.tol},
        {"max_abs_dQ", max_abs_diff(ra.q, rb.q)},
        {"max_abs_dt", max_abs_diff(ra.t, rb.t)},
        {"gauge", matrix_to_json(o3)},
        {"gauge_det", det3(o3)},
    };
    write_sink(o.output, dump(out), io.out);
    return kOk;
}

struct DemoOptions {
    std::string points;
    bool hexagon = false;
    double tol = 1e-9;
    std::string output;
};

json triangle_to_json(const Triangle &t) {
    return json::array({t.v[0], t.v[1], t.v[2]});
}

int cmd_demo_nonunique(const DemoOptions &o, Io io) {
    std::vector<Point2> pts;
    if (o.hexagon) {
        for (int k = 0; k < 6; k++) {
            double a = std::numbers::pi * k / 3;
            pts.push_back({std::cos(a), std::sin(a)});
        }
    } else if (!o.points.empty()) {
        try {
            pts = points_from_json(parse_json(read_source(o.points, io.in)));
        } catch (const ParseError &e) {
            throw Exit{kMalformedInput, e.what()};
        }
    } else {
        throw Exit{kMalformedInput, "demo-nonunique needs a points file or --hexagon"};
    }
    try {
        TriangleSolution best = min_area_enclosing_triangle(pts);
        auto witness = nonuniqueness_witness(pts, o.tol);
        FullDimEllipsoid e = mvee_full(Matrix::from_rows([&] {
            std::vector<Vector> rows;
            for (const Point2 &p : pts) {
                rows.push_back({p[0], p[1]});
            }
            return rows;
        }()));
        json out = {
            {"points", pts.size()},
            {"hull_size", convex_hull(pts).size()},
            {"optimal_area", best.area},
            {"triangle", triangle_to_json(best.triangle)},
            {"flush_edge", best.flush_edge},
            {"unique", !witness.has_value()},
            {"witness", nullptr},
            {"mvee", {{"center", e.center}, {"shape", matrix_to_json(e.shape)}}},
        };
        if (witness) {
            out["witness"] = json::array({triangle_to_json(witness->first), triangle_to_json(witness->second)});
            out["witness_areas"] = json::array({witness->first.area(), witness->second.area()});
        }
        write_sink(o.output, dump(out), io.out);
    } catch (const DegenerateInputError &e) {
        throw Exit{kMalformedInput, e.what()};
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    CLI::App app{"Data-driven inference of qubit measurements from outcome statistics."};
    app.require_subcommand(1);

    InferOptions infer_opts;
    auto *infer_cmd = app.add_subcommand("infer", "Infer the minimum-volume range of a frequency table");
    add_infer_flags(infer_cmd, infer_opts, true);

    ReconstructOptions rec_opts;
    auto *rec_cmd = app.add_subcommand("reconstruct", "Infer a range and invert it into a qubit POVM");
    add_infer_flags(rec_cmd, rec_opts.infer, false);
    rec_cmd->add_option("--povm-tol", rec_opts.povm_tol, "Tolerance of the POVM validity checks")->capture_default_str();
    rec_cmd->add_option("--from-range", rec_opts.from_range, "Invert a range from an infer report or ellipsoid JSON");

    SimulateOptions sim_opts;
    auto *sim_cmd = app.add_subcommand("simulate", "Sample outcome frequencies for a POVM and a state set");
    sim_cmd->add_option("--povm", sim_opts.povm, "POVM JSON")->required();
    sim_cmd->add_option("--states", sim_opts.states, "States JSON")->required();
    sim_cmd->add_option("--shots", sim_opts.shots, "Shots per state; 0 emits exact Born probabilities")->required();
    sim_cmd->add_option("--seed", sim_opts.seed, "PRNG seed (falls back to DDI_SEED)");
    sim_cmd->add_flag("--counts", sim_opts.counts, "Emit integer counts instead of frequencies");
    sim_cmd->add_option("-o,--output", sim_opts.output, "Output CSV path");

    CheckOptions check_opts;
    auto *check_cmd = app.add_subcommand("check", "Certify informational or observational completeness of states");
    check_cmd->add_option("states", check_opts.states, "States JSON")->required();
    check_cmd->add_option("--mode", check_opts.mode, "oc, ic or oc-support")
        ->check(CLI::IsMember({"oc", "ic", "oc-support"}))
        ->capture_default_str();
    check_cmd->add_option("--projector", check_opts.projector, "3x3 projector JSON for --mode oc-support");
    check_cmd->add_option("--tol", check_opts.tol, "Verdict tolerance (default 1e-6 for oc modes, 1e-7 for ic)");
    check_cmd->add_option("-o,--output", check_opts.output, "Output path");

    EquivOptions eq_opts;
    auto *eq_cmd = app.add_subcommand("equiv", "Test two POVMs for gauge equivalence");
    eq_cmd->add_option("a", eq_opts.a, "First POVM JSON")->required();
    eq_cmd->add_option("b", eq_opts.b, "Second POVM JSON")->required();
    eq_cmd->add_option("--tol", eq_opts.tol, "Tolerance on Q and t")->capture_default_str();
    eq_cmd->add_option("-o,--output", eq_opts.output, "Output path");

    DemoOptions demo_opts;
    auto *demo_cmd =
        app.add_subcommand("demo-nonunique", "Show co-optimal minimum-area enclosing triangles of a planar set");
    demo_cmd->add_option("points", demo_opts.points, "Points JSON");
    demo_cmd->add_flag("--hexagon", demo_opts.hexagon, "Use the regular hexagon of circumradius 1");
    demo_cmd->add_option("--tol", demo_opts.tol, "Area tolerance for co-optimality")->capture_default_str();
    demo_cmd->add_option("-o,--output", demo_opts.output, "Output path");

    std::vector<const char *> argv;
    for (const std::string &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "ddi: " << e.what() << "\n";
        for (const CLI::App *sub : app.get_subcommands()) {
            err << sub->help();
        }
        return kMalformedInput;
    }

    Io io{in, out, err};
    std::string name = app.get_subcommands().front()->get_name();
    try {
        if (name == "infer") {
            return cmd_infer(infer_opts, io);
        }
        if (name == "reconstruct") {
            if (rec_opts.from_range.empty() && rec_cmd->count("table") == 0) {
                throw Exit{kMalformedInput, "reconstruct needs a table or --from-range"};
            }
            return cmd_reconstruct(rec_opts, io);
        }
        if (name == "simulate") {
            return cmd_simulate(sim_opts, io);
        }
        if (name == "check") {
            return cmd_check(check_opts, io);
        }
        if (name == "equiv") {
            return cmd_equiv(eq_opts, io);
        }
        return cmd_demo_nonunique(demo_opts, io);
    } catch (const Exit &e) {
        err << "ddi " << name << ": " << e.message << "\n";
        return e.code;
    }
}

}  // namespace ddi::cli
