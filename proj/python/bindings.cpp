#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "spanlab/dp.hpp"
#include "spanlab/exact.hpp"
#include "spanlab/io.hpp"
#include "spanlab/l11.hpp"
#include "spanlab/mso.hpp"
#include "spanlab/tc.hpp"
#include "spanlab/twincover.hpp"

namespace py = pybind11;
using namespace spanlab;

PYBIND11_MODULE(_spanlab, m) {
    m.doc() = "exact L(p,q)-labeling: brute force, tree decomposition DP, twin cover";

    py::register_exception<Refusal>(m, "Refusal");
    py::register_exception<ContractError>(m, "ContractError");

    py::class_<Graph>(m, "Graph")
        .def_readonly("n", &Graph::n)
        .def_readonly("edges", &Graph::edges)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.n) + ", m=" + std::to_string(g.edge_count()) +
                   ")";
        });

    m.def("new_graph", &new_graph, py::arg("n"), py::arg("edges"),
          "build a simple undirected graph on vertices 0..n-1");
    m.def("parse_gr", [](const std::string& text) {
        std::istringstream in(text);
        return parse_gr(in);
    });
    m.def("emit_gr", &emit_gr);

    m.def(
        "verify",
        [](const Graph& g, const Labeling& f, int p, int q) {
            return verify(g, f, {p, q}).valid;
        },
        py::arg("g"), py::arg("labels"), py::arg("p"), py::arg("q"));

    m.def(
        "lambda_exact",
        [](const Graph& g, int p, int q) {
            auto [l, f] = lambda_exact(g, {p, q});
            return py::make_tuple(l, f);
        },
        py::arg("g"), py::arg("p"), py::arg("q"));
    m.def(
        "lambda_dp",
        [](const Graph& g, int p, int q) {
            auto [l, f] = lambda_dp(g, {p, q});
            return py::make_tuple(l, f);
        },
        py::arg("g"), py::arg("p"), py::arg("q"));
    m.def(
        "lambda_tc",
        [](const Graph& g, int p) {
            auto [l, f] = lambda_tc(g, p);
            return py::make_tuple(l, f);
        },
        py::arg("g"), py::arg("p"));
    m.def("lambda_l11", [](const Graph& g) {
        auto [l, f] = lambda_l11(g);
        return py::make_tuple(l, f);
    });
    m.def(
        "approx_lp1",
        [](const Graph& g, int p) {
            auto [l, f] = approx_lp1(g, p);
            return py::make_tuple(l, f);
        },
        py::arg("g"), py::arg("p"));

    m.def(
        "decide_exact",
        [](const Graph& g, int p, int q, int k) { return decide_exact(g, {p, q}, k); },
        py::arg("g"), py::arg("p"), py::arg("q"), py::arg("k"));
    m.def(
        "decide_dp",
        [](const Graph& g, int p, int q, int k) { return decide_dp(g, {p, q}, k); },
        py::arg("g"), py::arg("p"), py::arg("q"), py::arg("k"));
    m.def(
        "decide_tc",
        [](const Graph& g, int p, int k) { return decide_tc(g, p, k); },
        py::arg("g"), py::arg("p"), py::arg("k"));

    m.def("min_twin_cover", [](const Graph& g) { return min_twin_cover(g); });
    m.def("emit_dist2", &emit_dist2);
    m.def(
        "emit_phi", [](int k, int p, int q) { return emit_phi(k, {p, q}); }, py::arg("k"),
        py::arg("p"), py::arg("q"));
    m.def("naive_model_check", &naive_model_check, py::arg("g"), py::arg("formula"));
}
