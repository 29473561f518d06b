#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "raagmcg/chains.hpp"
#include "raagmcg/cli.hpp"
#include "raagmcg/decisions.hpp"
#include "raagmcg/graph.hpp"
#include "raagmcg/raag.hpp"
#include "raagmcg/surface.hpp"
#include "raagmcg/witness.hpp"

namespace py = pybind11;
using namespace raagmcg;

PYBIND11_MODULE(_raagmcg, mod) {
    mod.doc() = "Chain invariants and embeddability decisions for surface mapping class groups";
    mod.attr("__version__") = "1.0.0";

    py::class_<Surface>(mod, "Surface")
        .def(py::init<int, int>(), py::arg("genus"), py::arg("punctures"))
        .def_readonly("genus", &Surface::genus)
        .def_readonly("punctures", &Surface::punctures)
        .def("__repr__", [](const Surface& s) { return to_string(s); })
        .def("__eq__", [](const Surface& a, const Surface& b) { return a == b; })
        .def("__hash__", [](const Surface& s) { return s.genus * 1024 + s.punctures; });

    mod.def("euler_characteristic", &euler_characteristic, py::arg("surface"));
    mod.def("xi", &xi, py::arg("surface"));
    mod.def("ell_closed_form", &ell_closed_form, py::arg("surface"));
    mod.def("f_closed_form", &f_closed_form, py::arg("surface"));
    mod.def(
        "ell_recursive",
        [](Surface s) { return ChainCalculator{}.ell_recursive(s); },
        py::arg("surface"));
    mod.def(
        "chained_recursive",
        [](Surface s) { return ChainCalculator{}.chained_recursive(s); },
        py::arg("surface"));
    mod.def(
        "verify_grid",
        [](int max_genus, int max_punctures) {
            const GridReport r = ChainCalculator{}.verify_grid(max_genus, max_punctures);
            py::list violations;
            for (const GridViolation& v : r.violations)
                violations.append(py::make_tuple(v.surface.genus, v.surface.punctures, v.check,
                                                 v.lhs, v.rhs));
            py::dict d;
            d["cells"] = r.cells;
            d["ok"] = r.ok();
            d["violations"] = violations;
            return d;
        },
        py::arg("max_genus"), py::arg("max_punctures"));

    py::class_<Reason>(mod, "Reason")
        .def_readonly("name", &Reason::name)
        .def_readonly("lhs", &Reason::lhs)
        .def_readonly("rhs", &Reason::rhs)
        .def_readonly("ok", &Reason::ok);
    py::class_<Verdict>(mod, "Verdict")
        .def_property_readonly("answer", [](const Verdict& v) { return to_string(v.answer); })
        .def_readonly("reasons", &Verdict::reasons)
        .def_readonly("scope_note", &Verdict::scope_note)
        .def_property_readonly("max",
                               [](const Verdict& v) {
                                   return v.max ? py::cast(*v.max) : py::object(py::none());
                               })
        .def("to_json", &verdict_to_json)
        .def("__repr__", [](const Verdict& v) { return to_string(v.answer); });

    mod.def("max_path_in_mcg", &max_path_in_mcg, py::arg("surface"));
    mod.def("max_cycle_in_mcg", &max_cycle_in_mcg, py::arg("surface"));
    mod.def(
        "max_path_in_braid",
        [](int strands, bool pure) { return max_path_in_braid(BraidTarget(strands, pure)); },
        py::arg("strands"), py::arg("pure") = false);
    mod.def(
        "max_cycle_in_braid",
        [](int strands, bool pure) { return max_cycle_in_braid(BraidTarget(strands, pure)); },
        py::arg("strands"), py::arg("pure") = false);
    mod.def(
        "decide_path_in_mcg", [](int m, Surface s) { return decide_path_in_mcg(m, s); },
        py::arg("m"), py::arg("surface"));
    mod.def(
        "decide_cycle_in_mcg", [](int m, Surface s) { return decide_cycle_in_mcg(m, s); },
        py::arg("m"), py::arg("surface"));
    mod.def(
        "decide_path_in_braid",
        [](int m, int strands, bool pure) { return decide_path_in_braid(m, BraidTarget(strands, pure)); },
        py::arg("m"), py::arg("strands"), py::arg("pure") = false);
    mod.def(
        "decide_cycle_in_braid",
        [](int m, int strands, bool pure) { return decide_cycle_in_braid(m, BraidTarget(strands, pure)); },
        py::arg("m"), py::arg("strands"), py::arg("pure") = false);
    mod.def("virtual_mcg_obstruction", &virtual_mcg_obstruction, py::arg("source"), py::arg("target"));
    mod.def("sphere_into_closed_virtual", &sphere_into_closed_virtual, py::arg("punctures"),
            py::arg("genus"));
    mod.def("braid_virtual_obstruction", &braid_virtual_obstruction, py::arg("strands"),
            py::arg("target"), py::arg("boundary") = 0);
    mod.def("rigidity_check", &rigidity_check, py::arg("a"), py::arg("b"));

    py::class_<Graph>(mod, "Graph")
        .def(py::init<std::vector<std::string>>(), py::arg("labels"))
        .def_static("path", &Graph::path, py::arg("m"))
        .def_static("cycle", &Graph::cycle, py::arg("m"))
        .def("size", &Graph::size)
        .def("labels", &Graph::labels)
        .def("add_edge",
             [](Graph& g, const std::string& u, const std::string& v) { g.add_edge(u, v); })
        .def("adjacent", [](const Graph& g, int i, int j) { return g.adjacent(i, j); })
        .def("edges", &Graph::edges)
        .def("complement", &Graph::complement);
    mod.def("graph_from_json", &graph_from_json, py::arg("text"));
    mod.def("graph_to_json", &graph_to_json, py::arg("graph"));
    mod.def("find_full_embeddings", &find_full_embeddings, py::arg("pattern"), py::arg("host"));

    py::class_<Raag>(mod, "Raag")
        .def(py::init<Graph>(), py::arg("defining_graph"))
        .def("normal_form",
             [](const Raag& r, const std::string& w) {
                 return r.format_word(r.normal_form(r.parse_word(w)));
             })
        .def("is_trivial",
             [](const Raag& r, const std::string& w) { return r.is_trivial(r.parse_word(w)); })
        .def("equal",
             [](const Raag& r, const std::string& a, const std::string& b) {
                 return r.equal(r.parse_word(a), r.parse_word(b));
             })
        .def("is_centerless", &Raag::is_centerless);

    mod.def(
        "build_path_witness",
        [](Surface s) { return witness_to_json(build_path_witness(s)); },
        py::arg("surface"));
    mod.def(
        "build_cycle_witness",
        [](Surface s) { return witness_to_json(build_cycle_witness(s)); },
        py::arg("surface"));
    mod.def(
        "verify_path_witness",
        [](Surface s) { return verify_witness(build_path_witness(s)).ok(); },
        py::arg("surface"));
    mod.def(
        "verify_cycle_witness",
        [](Surface s) { return verify_witness(build_cycle_witness(s)).ok(); },
        py::arg("surface"));

    mod.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command line interface; returns (exit_code, stdout, stderr).");
}
