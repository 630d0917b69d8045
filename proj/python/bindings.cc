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


#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ddi/cli.h"
#include "ddi/completeness.h"
#include "ddi/errors.h"
#include "ddi/mvee.h"
#include "ddi/qubit.h"
#include "ddi/simplex2d.h"

namespace py = pybind11;
using namespace ddi;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

Matrix to_matrix(const Array &a) {
    if (a.ndim() == 1) {
        Matrix m(1, a.shape(0));
        for (py::ssize_t c = 0; c < a.shape(0); c++) {
            m(0, c) = a.at(c);
        }
        return m;
    }
    if (a.ndim() != 2) {
        throw ContractError("expected a 2-d array");
    }
    Matrix m(a.shape(0), a.shape(1));
    auto r = a.unchecked<2>();
    for (py::ssize_t i = 0; i < a.shape(0); i++) {
        for (py::ssize_t j = 0; j < a.shape(1); j++) {
            m(i, j) = r(i, j);
        }
    }
    return m;
}

Vector to_vector(const Array &a) {
    if (a.ndim() != 1) {
        throw ContractError("expected a 1-d array");
    }
    return Vector(a.data(), a.data() + a.shape(0));
}

py::array_t<double> from_matrix(const Matrix &m) {
    py::array_t<double> out({m.rows(), m.cols()});
    auto w = out.mutable_unchecked<2>();
    for (size_t i = 0; i < m.rows(); i++) {
        for (size_t j = 0; j < m.cols(); j++) {
            w(i, j) = m(i, j);
        }
    }
    return out;
}

py::array_t<double> from_vector(const Vector &v) {
    py::array_t<double> out(v.size());
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

// POVMs cross the boundary as n x 4 arrays with rows (a, bx, by, bz).
QubitPovm to_povm(const Array &a) {
    Matrix m = to_matrix(a);
    if (m.cols() != 4) {
        throw ContractError("POVM array must have 4 columns (a, bx, by, bz)");
    }
    QubitPovm p;
    for (size_t y = 0; y < m.rows(); y++) {
        p.effects.push_back({m(y, 0), {m(y, 1), m(y, 2), m(y, 3)}});
    }
    return p;
}

py::array_t<double> from_povm(const QubitPovm &p) {
    Matrix m(p.size(), 4);
    for (size_t y = 0; y < p.size(); y++) {
        m(y, 0) = p.effects[y].a;
        for (size_t k = 0; k < 3; k++) {
            m(y, k + 1) = p.effects[y].b[k];
        }
    }
    return from_matrix(m);
}

StateSet to_states(const Array &a) {
    Matrix m = to_matrix(a);
    if (m.cols() != 3) {
        throw ContractError("states must be an m x 3 array of Bloch vectors");
    }
    StateSet s;
    for (size_t k = 0; k < m.rows(); k++) {
        s.push_back({m(k, 0), m(k, 1), m(k, 2)});
    }
    return s;
}

py::array_t<double> from_states(const StateSet &s) {
    Matrix m(s.size(), 3);
    for (size_t k = 0; k < s.size(); k++) {
        for (size_t c = 0; c < 3; c++) {
            m(k, c) = s[k][c];
        }
    }
    return from_matrix(m);
}

std::vector<Point2> to_points(const Array &a) {
    Matrix m = to_matrix(a);
    if (m.cols() != 2) {
        throw ContractError("points must be an m x 2 array");
    }
    std::vector<Point2> pts;
    for (size_t k = 0; k < m.rows(); k++) {
        pts.push_back({m(k, 0), m(k, 1)});
    }
    return pts;
}

py::array_t<double> from_triangle(const Triangle &t) {
    Matrix m(3, 2);
    for (size_t k = 0; k < 3; k++) {
        m(k, 0) = t.v[k][0];
        m(k, 1) = t.v[k][1];
    }
    return from_matrix(m);
}

py::dict range_dict(const RangeEllipsoid &e) {
    py::dict d;
    d["t"] = from_vector(e.t);
    d["Q"] = from_matrix(e.q);
    d["rank"] = e.rank;
    return d;
}

MveeOptions options(double eps) {
    MveeOptions o;
    o.eps = eps;
    return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Data-driven inference of qubit measurements from spherical state spaces.";

    static py::exception<InversionError> inversion_error(m, "InversionError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const InversionError &e) {
            py::object cls = py::reinterpret_borrow<py::object>(inversion_error);
            py::object err = cls(e.what());
            err.attr("code") = std::string(failure_code(e.kind()));
            PyErr_SetObject(inversion_error.ptr(), err.ptr());
        }
    });
    py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);

    m.def(
        "ddi_spherical",
        [](const Array &points, double eps, double tol_aff) {
            return range_dict(ddi_spherical(to_matrix(points), options(eps), tol_aff));
        },
        py::arg("points"), py::arg("eps") = kDefaultMveeEps, py::arg("tol_aff") = kDefaultAffineTol,
        "Minimum-volume range {t, Q, rank} of the rows of `points`.");

    m.def(
        "mvee",
        [](const Array &points, double eps) {
            FullDimEllipsoid e = mvee_full(to_matrix(points), options(eps));
            return py::make_tuple(from_vector(e.center), from_matrix(e.shape));
        },
        py::arg("points"), py::arg("eps") = kDefaultMveeEps,
        "(center, A) of the minimum-volume ellipsoid (x - c)^T A (x - c) <= 1 of full-dimensional points.");

    m.def(
        "ellipsoid_volume",
        [](const Array &t, const Array &q) {
            EllipsoidVolume v = ellipsoid_volume(make_range(to_vector(t), to_matrix(q)));
            return py::make_tuple(v.rank, v.volume);
        },
        py::arg("t"), py::arg("Q"));

    m.def("ideal_mub_povm", [] { return from_povm(ideal_mub_povm()); });
    m.def(
        "projective_povm", [](const Bloch &axis) { return from_povm(projective_povm(axis)); }, py::arg("axis"));

    m.def(
        "born_table",
        [](const Array &povm, const Array &states) {
            QubitPovm p = to_povm(povm);
            validate_povm(p);
            return from_matrix(born_table(p, to_states(states)));
        },
        py::arg("povm"), py::arg("states"));

    m.def(
        "povm_range",
        [](const Array &povm) {
            QubitPovm p = to_povm(povm);
            validate_povm(p);
            return range_dict(povm_range(p));
        },
        py::arg("povm"));

    m.def(
        "range_invert",
        [](const Array &t, const Array &q, double tol) {
            return from_povm(range_invert(RangeEllipsoid{to_vector(t), to_matrix(q), 0}, tol));
        },
        py::arg("t"), py::arg("Q"), py::arg("tol") = kExactInversionTol,
        "Canonical-gauge POVM (rows a, bx, by, bz) with the given range; raises InversionError.");

    m.def(
        "gauge_equivalent",
        [](const Array &a, const Array &b, double tol) { return gauge_equivalent(to_povm(a), to_povm(b), tol); },
        py::arg("a"), py::arg("b"), py::arg("tol") = 1e-6);

    m.def(
        "gauge_align",
        [](const Array &from, const Array &to) { return from_matrix(gauge_align(to_povm(from), to_povm(to))); },
        py::arg("source"), py::arg("target"));

    m.def(
        "simulate_counts",
        [](const Array &povm, const Array &states, uint64_t shots, uint64_t seed) {
            SimulatedCounts s = simulate_counts(to_povm(povm), to_states(states), shots, seed);
            py::array_t<int64_t> counts({s.counts.size(), s.counts.empty() ? size_t{0} : s.counts[0].size()});
            auto w = counts.mutable_unchecked<2>();
            for (size_t i = 0; i < s.counts.size(); i++) {
                for (size_t j = 0; j < s.counts[i].size(); j++) {
                    w(i, j) = static_cast<int64_t>(s.counts[i][j]);
                }
            }
            return py::make_tuple(counts, from_matrix(s.frequencies));
        },
        py::arg("povm"), py::arg("states"), py::arg("shots"), py::arg("seed"));

    m.def("gen_regular_simplex", [] { return from_states(gen_regular_simplex()); });
    m.def(
        "gen_platonic", [](const std::string &name) { return from_states(gen_platonic(name)); }, py::arg("name"));
    m.def(
        "is_observationally_complete",
        [](const Array &states, double tol) { return is_observationally_complete(to_states(states), tol).complete; },
        py::arg("states"), py::arg("tol") = kDefaultCompletenessTol);
    m.def(
        "is_informationally_complete",
        [](const Array &states, double tol) { return is_informationally_complete(to_states(states), tol).complete; },
        py::arg("states"), py::arg("tol") = kDefaultAffineTol);

    m.def(
        "min_area_enclosing_triangle",
        [](const Array &points) {
            TriangleSolution s = min_area_enclosing_triangle(to_points(points));
            return py::make_tuple(from_triangle(s.triangle), s.area);
        },
        py::arg("points"));
    m.def(
        "nonuniqueness_witness",
        [](const Array &points, double tol) -> py::object {
            auto w = nonuniqueness_witness(to_points(points), tol);
            if (!w) {
                return py::none();
            }
            return py::make_tuple(from_triangle(w->first), from_triangle(w->second));
        },
        py::arg("points"), py::arg("tol") = 1e-9);

    m.def(
        "run_cli",
        [](std::vector<std::string> args, const std::string &stdin_text) {
            args.insert(args.begin(), "ddi");
            std::istringstream in(stdin_text);
            std::ostringstream out;
            std::ostringstream err;
            int code = cli::run(args, in, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), py::arg("stdin") = "", "Runs the command line in-process; returns (exit_code, stdout, stderr).");
}
