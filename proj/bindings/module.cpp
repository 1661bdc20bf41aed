#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gat/bounds.hpp"
#include "gat/enumerate.hpp"
#include "gat/errors.hpp"
#include "gat/formats.hpp"
#include "gat/graph.hpp"
#include "gat/indices.hpp"
#include "gat/random_graph.hpp"
#include "gat/sweep.hpp"

namespace py = pybind11;
using namespace gat;

namespace {

std::optional<double> opt_alpha(const py::object& alpha) {
    if (alpha.is_none()) return std::nullopt;
    return alpha.cast<double>();
}

Side side_from_name(const std::string& name) {
    if (name == "lower") return Side::Lower;
    if (name == "upper") return Side::Upper;
    throw std::invalid_argument("side must be 'lower' or 'upper'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Vertex-degree-based topological indices of simple graphs and the "
              "bound checks, sweeps and searches built on them.";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<SamplingError>(m, "SamplingError", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, std::vector<Edge>>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("degrees", &Graph::degrees)
        .def("degree", &Graph::degree, py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<DegreeStats>(m, "DegreeStats")
        .def_readonly("n", &DegreeStats::n)
        .def_readonly("m", &DegreeStats::m)
        .def_readonly("degrees", &DegreeStats::degrees)
        .def_readonly("delta", &DegreeStats::delta)
        .def_readonly("Delta", &DegreeStats::Delta)
        .def_readonly("is_regular", &DegreeStats::is_regular)
        .def_readonly("edge_product_constant", &DegreeStats::edge_product_constant);

    m.def("degree_stats", &degree_stats, py::arg("g"));
    m.def("is_connected", &is_connected, py::arg("g"));
    m.def("parse_edge_list", &parse_edge_list, py::arg("text"));
    m.def("parse_graph6", &parse_graph6, py::arg("line"));
    m.def("encode_graph6", &encode_graph6, py::arg("g"));
    m.def("enumerate_connected",
          static_cast<std::vector<Graph> (*)(int)>(&enumerate_connected), py::arg("n"));
    m.def("random_connected", &random_connected, py::arg("n"), py::arg("p"), py::arg("seed"));

    m.def("ga1", &ga1, py::arg("g"));
    m.def("m1", &m1, py::arg("g"));
    m.def("m2", &m2, py::arg("g"));
    m.def("randic", &randic, py::arg("g"));
    m.def("general_randic", &general_randic, py::arg("g"), py::arg("alpha"));
    m.def("log_nk_star", &log_nk_star, py::arg("g"));
    m.def("g_edge", &g_edge, py::arg("x"), py::arg("y"));
    m.def("h_edge", &h_edge, py::arg("x"), py::arg("y"));

    py::class_<BoundCheck>(m, "BoundCheck")
        .def_property_readonly("theorem",
                               [](const BoundCheck& c) { return theorem_name(c.theorem); })
        .def_readonly("alpha", &BoundCheck::alpha)
        .def_readonly("lower", &BoundCheck::lower)
        .def_readonly("upper", &BoundCheck::upper)
        .def_readonly("value", &BoundCheck::value)
        .def_readonly("slack_lower", &BoundCheck::slack_lower)
        .def_readonly("slack_upper", &BoundCheck::slack_upper)
        .def_readonly("holds", &BoundCheck::holds)
        .def_readonly("tight_lower", &BoundCheck::tight_lower)
        .def_readonly("tight_upper", &BoundCheck::tight_upper)
        .def_property_readonly("expected_equality", [](const BoundCheck& c) {
            return equality_class_name(c.expected_equality);
        })
        .def_readonly("observed_equality_matches", &BoundCheck::observed_equality_matches)
        .def_readonly("overflow_skip", &BoundCheck::overflow_skip)
        .def("__repr__", [](const BoundCheck& c) {
            return "BoundCheck(" + theorem_name(c.theorem) +
                   (c.alpha ? ", alpha=" + std::to_string(*c.alpha) : "") +
                   ", holds=" + (c.holds ? "True" : "False") + ")";
        });

    m.def("check_eq1", &check_eq1, py::arg("g"), py::arg("tol") = kDefaultTol);
    m.def("check_t_end2", &check_t_end2, py::arg("g"), py::arg("tol") = kDefaultTol);
    m.def("check_t_p4bis", &check_t_p4bis, py::arg("g"), py::arg("tol") = kDefaultTol);
    m.def("check_t_r", &check_t_r, py::arg("g"), py::arg("tol") = kDefaultTol);
    m.def("check_t_z1", &check_t_z1, py::arg("g"), py::arg("alpha"), py::arg("tol") = kDefaultTol);
    m.def("check_cor_randic", &check_cor_randic, py::arg("g"), py::arg("tol") = kDefaultTol);
    m.def("check_t_lb55", &check_t_lb55, py::arg("g"), py::arg("alpha"),
          py::arg("tol") = kDefaultTol);
    m.def("check_t_mz", &check_t_mz, py::arg("g"), py::arg("tol") = kDefaultTol);
    m.def("check_t_mz2", &check_t_mz2, py::arg("g"), py::arg("tol") = kDefaultTol);
    m.def("check_t_mzz", &check_t_mzz, py::arg("g"), py::arg("alpha"),
          py::arg("tol") = kDefaultTol);
    m.def("check_cor_mis29", &check_cor_mis29, py::arg("g"), py::arg("tol") = kDefaultTol);
    m.def("check_t_nk3", &check_t_nk3, py::arg("g"), py::arg("alpha"),
          py::arg("tol") = kDefaultTol);
    m.def("check_cor_nk3", &check_cor_nk3, py::arg("g"), py::arg("alpha"),
          py::arg("tol") = kDefaultTol);
    m.def("s_thm4_reference_lower", &s_thm4_reference_lower, py::arg("g"));
    m.def("check_all", &check_all, py::arg("g"), py::arg("alphas"),
          py::arg("tol") = kDefaultTol);
    m.def(
        "check_one",
        [](const Graph& g, const std::string& theorem, const py::object& alpha, double tol) {
            return check_one(g, theorem_from_name(theorem), opt_alpha(alpha), tol);
        },
        py::arg("g"), py::arg("theorem"), py::arg("alpha") = py::none(),
        py::arg("tol") = kDefaultTol);

    py::class_<SweepReport>(m, "SweepReport")
        .def_readonly("mode", &SweepReport::mode)
        .def_readonly("graph_count", &SweepReport::graph_count)
        .def_readonly("alpha_grid", &SweepReport::alpha_grid)
        .def_readonly("tolerance", &SweepReport::tolerance)
        .def_property_readonly("violation_count",
                               [](const SweepReport& r) { return r.violations.size(); })
        .def("passed", &SweepReport::passed)
        .def("to_json", &sweep_report_to_json)
        .def("to_csv", &sweep_report_to_csv);

    m.def("exhaustive_sweep", &exhaustive_sweep, py::arg("n_max"), py::arg("alphas"),
          py::arg("tol") = kDefaultTol, py::call_guard<py::gil_scoped_release>());
    m.def("random_sweep", &random_sweep, py::arg("n"), py::arg("p"), py::arg("count"),
          py::arg("seed"), py::arg("alphas"), py::arg("tol") = kDefaultTol,
          py::call_guard<py::gil_scoped_release>());

    py::class_<SearchResult>(m, "SearchResult")
        .def_readonly("graph", &SearchResult::graph)
        .def_readonly("slack", &SearchResult::slack)
        .def_readonly("tight", &SearchResult::tight);

    m.def(
        "extremal_search",
        [](const std::string& theorem, const py::object& alpha, const std::string& side, int n,
           long iterations, uint64_t seed, double tol) {
            return extremal_search(theorem_from_name(theorem), opt_alpha(alpha),
                                   side_from_name(side), n, iterations, seed, tol);
        },
        py::arg("theorem"), py::arg("alpha"), py::arg("side"), py::arg("n"),
        py::arg("iterations"), py::arg("seed"), py::arg("tol") = kDefaultTol);
}
