#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "w6/canonical.hpp"
#include "w6/chains.hpp"
#include "w6/connectivity.hpp"
#include "w6/constructors.hpp"
#include "w6/graph.hpp"
#include "w6/hamilton.hpp"
#include "w6/minor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace w6;

namespace {

std::vector<std::pair<int, int>> edge_list(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
    return out;
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (auto [u, v] : edges) es.emplace_back(u, v);
    return Graph(n, es);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "4-connected W6-minor-free graphs: recognition, catalog, and certification";

    py::register_exception<Graph6Error>(m, "Graph6Error", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init(&graph_from_edges), py::arg("n"), py::arg("edges"))
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("degree", &Graph::degree, py::arg("v"))
        .def("neighbors",
             [](const Graph& g, int v) {
                 const auto& nb = g.neighbors(v);
                 return std::vector<int>(nb.begin(), nb.end());
             },
             py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("edges", &edge_list)
        .def("__repr__", [](const Graph& g) { return "Graph('" + emit_graph6(g) + "')"; })
        .def("__eq__", [](const Graph& a, const Graph& b) { return is_isomorphic(a, b); });

    m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); }, py::arg("text"));
    m.def("emit_graph6", &emit_graph6, py::arg("g"));
    m.def("emit_dot", &emit_dot, py::arg("g"), py::arg("name") = "G");
    m.def("canonical_form", &canonical_form, py::arg("g"));
    m.def("is_isomorphic", &is_isomorphic, py::arg("a"), py::arg("b"));

    m.def("vertex_connectivity",
          [](const Graph& g) { return vertex_connectivity(g); }, py::arg("g"));
    m.def("is_k_connected", &is_k_connected, py::arg("g"), py::arg("k"));
    m.def("is_planar", &is_planar, py::arg("g"));
    m.def("is_cyclically_4_connected_cubic", &is_cyclically_4_connected_cubic, py::arg("g"));

    m.def("has_minor", &has_minor, py::arg("g"), py::arg("h"));
    m.def("find_minor_model",
          [](const Graph& g, const Graph& h) -> std::optional<std::vector<std::vector<int>>> {
              auto model = find_minor_model(g, h);
              if (!model) return std::nullopt;
              return model->branch_sets;
          },
          py::arg("g"), py::arg("h"));
    m.def("is_w6_minor_free", &is_w6_minor_free, py::arg("g"));
    m.def("wheel_w6", &wheel_w6);

    m.def("find_hamiltonian_cycle", &find_hamiltonian_cycle, py::arg("g"));
    m.def("chvatal_holds", &chvatal_holds, py::arg("degrees"));

    m.def("cycle", [](int k) { return construct(Family::cycle, k); }, py::arg("k"));
    m.def("wheel", [](int k) { return construct(Family::wheel, k); }, py::arg("k"));
    m.def("squared_cycle", [](int k) { return construct(Family::squared_cycle, k); }, py::arg("k"));
    m.def("double_wheel", [](int k) { return construct(Family::double_wheel, k); }, py::arg("k"));
    m.def("double_wheel_plus",
          [](int k) { return construct(Family::double_wheel_plus, k); }, py::arg("k"));
    m.def("complete", [](int k) { return construct(Family::complete, k); }, py::arg("k"));
    m.def("complete_bipartite",
          [](int a, int b) { return construct(Family::complete_bipartite, a, b); },
          py::arg("a"), py::arg("b"));
    m.def("special", [](const std::string& name) { return special(name); }, py::arg("name"));

    m.def("catalog", [] {
        std::vector<std::pair<std::string, Graph>> out;
        for (const CatalogEntry& e : catalog()) out.emplace_back(e.name, e.graph);
        return out;
    });
    m.def("catalog_lookup", &catalog_lookup, py::arg("g"));

    m.def("enumerate_splits", &enumerate_splits, py::arg("g"), py::arg("require_4conn") = false);
    m.def("line_graph", &line_graph, py::arg("g"));
    m.def("root_graph_cubic", &root_graph_cubic, py::arg("g"));
    m.def("generate_cyclically_4conn_cubic", &generate_cyclically_4conn_cubic, py::arg("max_n"));
    m.def("chain_decompose",
          [](const Graph& g) { return chain_decompose(g).graphs; }, py::arg("g"));
    m.def("enumerate_graphs", &enumerate_graphs, py::arg("n"), py::arg("min_degree") = 0);

    m.def("verify_theorem",
          [](int max_n) {
              TheoremReport report = verify_theorem(max_n);
              py::dict d;
              d["ok"] = report.ok;
              d["report"] = report.render();
              return d;
          },
          py::arg("max_n") = 7);
}
