#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "atfbox/boxrep.hpp"
#include "atfbox/cubebound.hpp"
#include "atfbox/errors.hpp"
#include "atfbox/graph.hpp"
#include "atfbox/invariants.hpp"
#include "atfbox/model.hpp"
#include "atfbox/triangulate.hpp"

namespace py = pybind11;
using namespace atfbox;

namespace {

GraphFamilySpec make_spec(const std::string& family, const std::vector<int>& params,
                          std::uint64_t seed) {
    auto fam = family_from_name(family);
    if (!fam) throw std::invalid_argument("unknown family: " + family);
    return GraphFamilySpec{*fam, params, seed};
}

Coloring coloring_for(const Graph& g, const std::string& mode, int limit) {
    if (mode == "heuristic") return color(g, ColorMode::heuristic, limit);
    if (mode == "exact") return color(g, ColorMode::exact, limit);
    throw std::invalid_argument("mode must be 'heuristic' or 'exact'");
}

std::optional<BoxMethod> parse_method(const std::string& method) {
    if (method == "auto") return std::nullopt;
    if (method == "girth5") return BoxMethod::girth5;
    if (method == "coloring") return BoxMethod::coloring;
    throw std::invalid_argument("method must be auto|girth5|coloring");
}

py::object optional_int(const std::optional<int>& v) {
    if (v) return py::int_(*v);
    return py::none();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "box representations and cubicity bounds for AT-free graphs";

    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<cap_error>(m, "CapError", PyExc_RuntimeError);
    py::register_exception<internal_error>(m, "InternalError", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("n"),
             py::arg("edges"))
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("m", &Graph::m)
        .def("adj", &Graph::adj)
        .def("neighbors", &Graph::neighbors, py::return_value_policy::copy)
        .def("edges", &Graph::edges, py::return_value_policy::copy)
        .def("degree", &Graph::degree)
        .def("complement", &Graph::complement)
        .def("is_complete", &Graph::is_complete)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            std::ostringstream s;
            s << "Graph(n=" << g.n() << ", m=" << g.m() << ")";
            return s.str();
        });

    // graph-core
    m.def("parse_edge_list", static_cast<Graph (*)(const std::string&)>(&parse_edge_list),
          py::arg("text"));
    m.def("write_edge_list", &write_edge_list);
    m.def("graph6_encode", &graph6_encode);
    m.def("graph6_decode", [](const std::string& s) { return graph6_decode(s); });
    m.def("bfs_layers", &bfs_layers, py::arg("g"), py::arg("source"),
          "unweighted distances, -1 for unreachable");
    m.def("girth", [](const Graph& g) -> py::object {
        auto v = girth(g);
        return v ? py::object(py::int_(*v)) : py::object(py::none());
    });
    m.def("connected_components", &connected_components);
    m.def(
        "generate",
        [](const std::string& family, const std::vector<int>& params, std::uint64_t seed) {
            return generate(make_spec(family, params, seed));
        },
        py::arg("family"), py::arg("params"), py::arg("seed") = 0);

    // invariants
    m.def(
        "is_chordal",
        [](const Graph& g) {
            auto r = is_chordal(g);
            return py::make_tuple(r.chordal, r.chordal ? r.peo.order : r.hole);
        },
        "returns (chordal, perfect elimination order | chordless cycle)");
    m.def("find_asteroidal_triple", [](const Graph& g) -> py::object {
        auto at = find_asteroidal_triple(g);
        if (!at) return py::none();
        return py::make_tuple((*at)[0], (*at)[1], (*at)[2]);
    });
    m.def("is_at_free", &is_at_free);
    m.def("is_dominating_pair", &is_dominating_pair);
    m.def("diametral_dominating_pair", [](const Graph& g) {
        auto r = diametral_dominating_pair(g);
        return py::make_tuple(r.x, r.y, r.path);
    });
    m.def(
        "claw_number",
        [](const Graph& g) {
            auto r = claw_number(g);
            if (!r.witness) return py::make_tuple(r.psi, py::object(py::none()));
            return py::make_tuple(
                r.psi, py::object(py::make_tuple(r.witness->center, r.witness->leaves)));
        },
        "returns (psi, (center, leaves) | None)");
    m.def(
        "color",
        [](const Graph& g, const std::string& mode, int limit) {
            Coloring c = coloring_for(g, mode, limit);
            return py::make_tuple(c.colors, c.k);
        },
        py::arg("g"), py::arg("mode") = "heuristic", py::arg("limit") = 16);
    m.def("is_interval", &is_interval);
    m.def("is_unit_interval", &is_unit_interval);

    // triangulate
    m.def(
        "split_supergraph",
        [](const Graph& g, const std::vector<int>& colors, int k, int i) {
            return split_supergraph(g, Coloring{colors, k}, i);
        },
        py::arg("g"), py::arg("colors"), py::arg("k"), py::arg("class_index"));
    m.def(
        "minimize_triangulation",
        [](const Graph& g, const Graph& h) {
            FillSet fs = minimize_triangulation(g, h);
            return py::make_tuple(fs.fill, fs.result);
        },
        "returns (fill edges, H')");
    m.def("is_minimal_triangulation", &is_minimal_triangulation);
    m.def("maximal_cliques_chordal", &maximal_cliques_chordal);

    // boxrep / verification; the JSON schema crosses the boundary as strings
    m.def(
        "boxrep_json",
        [](const Graph& g, const std::string& method) {
            auto res = box_upper(g, parse_method(method));
            return representation_to_json(g, res.rep).dump();
        },
        py::arg("g"), py::arg("method") = "auto");
    m.def("chromatic_boxrep_json", [](const Graph& g, const std::vector<int>& colors, int k) {
        auto rep = chromatic_boxrep(g, Coloring{colors, k});
        return representation_to_json(g, rep).dump();
    });
    m.def(
        "verify_json",
        [](const Graph& g, const std::string& rep_json) {
            auto loaded = representation_from_json(nlohmann::json::parse(rep_json));
            auto res = verify(g, loaded.rep);
            std::vector<std::string> out;
            for (const auto& v : res.violations) out.push_back(v.str());
            return out;
        },
        "empty list means the representation is exact");
    m.def("decompose", [](const Graph& g) {
        auto d = decompose(g);
        py::dict out;
        out["path"] = d.path;
        out["classes"] = d.classes;
        out["class_of"] = d.class_of;
        out["nonpendant"] = std::vector<bool>(d.nonpendant.begin(), d.nonpendant.end());
        out["has_left"] = std::vector<bool>(d.has_left.begin(), d.has_left.end());
        out["has_right"] = std::vector<bool>(d.has_right.begin(), d.has_right.end());
        return out;
    });

    // cubicity bounds and exact oracles
    m.def(
        "exact_boxicity",
        [](const Graph& g, int kmax) { return optional_int(exact_boxicity(g, kmax).value); },
        py::arg("g"), py::arg("kmax") = 3);
    m.def(
        "exact_cubicity",
        [](const Graph& g, int kmax) { return optional_int(exact_cubicity(g, kmax).value); },
        py::arg("g"), py::arg("kmax") = 3);
    m.def(
        "exact_chordality",
        [](const Graph& g, int kmax) { return optional_int(exact_chordality(g, kmax).value); },
        py::arg("g"), py::arg("kmax") = 3);
    m.def(
        "bounds_json",
        [](const Graph& g, bool with_exact) {
            auto rep = cub_upper(g, with_exact);
            nlohmann::json out;
            out["graph6"] = rep.graph6;
            out["psi"] = rep.psi;
            out["box_upper"] = {{"k", rep.box_upper_k},
                                {"method", box_method_name(rep.box_method)}};
            nlohmann::json formulas = nlohmann::json::array();
            for (const auto& f : rep.applicable)
                formulas.push_back({{"tag", f.tag}, {"value", f.value}});
            out["applicable"] = formulas;
            out["cub_upper"] = {{"value", rep.cub_upper}, {"tag", rep.cub_tag}};
            if (with_exact) {
                auto opt = [](const std::optional<int>& v) {
                    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
                };
                out["exact"] = {{"box", opt(rep.exact_box)},
                                {"cub", opt(rep.exact_cub)},
                                {"chord", opt(rep.exact_chord)}};
            }
            return out.dump();
        },
        py::arg("g"), py::arg("with_exact") = false);
    m.def(
        "triangulation_claw_probe",
        [](const Graph& g) {
            auto r = triangulation_claw_probe(g);
            return py::make_tuple(r.psi_g, r.psi_h, r.fill.result);
        },
        "returns (psi_g, psi_h, H')");
}
