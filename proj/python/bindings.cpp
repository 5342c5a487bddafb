#include "homarea/errors.hpp"
#include "homarea/homotopy.hpp"
#include "homarea/io.hpp"
#include "homarea/oracle.hpp"
#include "homarea/sphere.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace homarea;

namespace {

using Coords = std::vector<std::pair<std::string, std::string>>;

Rational rational(const std::string &s) {
    auto r = parse_rational(s);
    if (!r) throw InputError("not a rational number: '" + s + "'");
    return *r;
}

Polyline polyline(const Coords &pts, bool closed) {
    std::vector<Point> v;
    for (const auto &[x, y] : pts) v.push_back({rational(x), rational(y)});
    return Polyline(std::move(v), closed);
}

py::tuple point(const Point &p) { return py::make_tuple(to_string(p.x), to_string(p.y)); }

py::list points(const Polyline &poly) {
    py::list l;
    for (const Point &p : poly.vertices()) l.append(point(p));
    return l;
}

py::dict position(const CurvePosition &pos) {
    py::dict d;
    d["segment"] = pos.segment;
    d["t"] = to_string(pos.t);
    return d;
}

py::dict decomposition(const HomotopyDecomposition &dec) {
    py::list anchors, costs;
    for (const Anchor &a : dec.anchors) {
        py::dict d;
        d["point"] = point(a.point);
        d["pos_p"] = position(a.pos_p);
        d["pos_q"] = position(a.pos_q);
        anchors.append(d);
    }
    for (const Rational &c : dec.segment_costs) costs.append(to_string(c));
    py::dict d;
    d["anchors"] = anchors;
    d["segment_costs"] = costs;
    return d;
}

py::dict stats(const SolveStats &s) {
    py::dict d;
    d["events"] = s.events;
    d["genuine_events"] = s.genuine_events;
    d["extension_events"] = s.extension_events;
    d["representatives"] = s.representatives;
    d["sweeps"] = s.sweep.sweeps;
    d["tree_updates"] = s.sweep.tree_updates;
    d["node_visits"] = s.sweep.node_visits;
    return d;
}

py::dict result(const HomotopyResult &r) {
    py::dict d = decomposition(r.decomposition);
    d["sigma"] = to_string(r.sigma);
    d["stats"] = stats(r.stats);
    return d;
}

const char *case_name(CycleCase c) {
    switch (c) {
    case CycleCase::nested: return "nested";
    case CycleCase::disjoint: return "disjoint";
    default: return "crossing";
    }
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact minimum homotopy area between polygonal curves";

    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

    m.def(
        "min_homotopy_area",
        [](const Coords &p, const Coords &q, std::optional<std::uint64_t> seed) {
            return result(min_homotopy_area(polyline(p, false), polyline(q, false), SolveOptions{seed}));
        },
        py::arg("p"), py::arg("q"), py::arg("seed") = py::none());

    m.def(
        "min_homotopy_area_sphere",
        [](const Coords &p, const Coords &q, const std::string &area) {
            return result(min_homotopy_area_sphere(polyline(p, false), polyline(q, false), rational(area)));
        },
        py::arg("p"), py::arg("q"), py::arg("area"));

    m.def(
        "min_homotopy_area_cycles",
        [](const Coords &p, const Coords &q) {
            CycleResult r = min_homotopy_area_cycles(polyline(p, true), polyline(q, true));
            py::dict d = decomposition(r.decomposition);
            d["sigma"] = to_string(r.sigma);
            d["kind"] = case_name(r.kind);
            d["infimum"] = r.infimum;
            d["cut"] = r.cut ? py::object(point(*r.cut)) : py::object(py::none());
            d["stats"] = stats(r.stats);
            return d;
        },
        py::arg("p"), py::arg("q"));

    m.def(
        "oracle_dp",
        [](const Coords &p, const Coords &q) { return to_string(oracle_dp(polyline(p, false), polyline(q, false))); },
        py::arg("p"), py::arg("q"));

    m.def(
        "oracle_sphere",
        [](const Coords &p, const Coords &q, const std::string &area) {
            return to_string(oracle_sphere(polyline(p, false), polyline(q, false), rational(area)));
        },
        py::arg("p"), py::arg("q"), py::arg("area"));

    m.def(
        "oracle_cycles",
        [](const Coords &p, const Coords &q) {
            OracleCycleResult r = oracle_cycles(polyline(p, true), polyline(q, true));
            return py::make_tuple(to_string(r.sigma), r.infimum);
        },
        py::arg("p"), py::arg("q"));

    m.def(
        "parse_curve_file",
        [](const std::string &text) {
            CurveFile f = parse_curve_file(text);
            py::dict d;
            d["kind"] = f.kind == CurveKind::cycles ? "cycles" : "paths";
            d["p"] = points(f.p);
            d["q"] = points(f.q);
            d["sphere_area"] = f.sphere_area ? py::object(py::str(to_string(*f.sphere_area))) : py::object(py::none());
            return d;
        },
        py::arg("text"));

    m.def(
        "run_command",
        [](const std::vector<std::string> &args) {
            std::ostringstream out, err;
            int code = run_command(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
