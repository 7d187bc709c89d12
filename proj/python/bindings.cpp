#include "stc/errors.hpp"
#include "stc/graph.hpp"
#include "stc/incompat.hpp"
#include "stc/io.hpp"
#include "stc/ordering.hpp"
#include "stc/reductions.hpp"
#include "stc/solvers.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace stc;

namespace {

std::vector<LabelPair> pairs(const Graph &g, const std::vector<Edge> &edges) {
  std::vector<LabelPair> out;
  for (const Edge &e : edges)
    out.push_back(g.edge_labels(e));
  return out;
}

std::vector<Edge> edges_from_pairs(const Graph &g, const std::vector<LabelPair> &ps) {
  std::vector<Edge> out;
  for (const auto &[a, b] : ps)
    out.emplace_back(g.index_of(a), g.index_of(b));
  return out;
}

py::dict result_dict(const Graph &g, const SolveResult &r) {
  py::dict d;
  d["value"] = r.value;
  d["solver"] = std::string(to_string(r.solver));
  d["strong"] = pairs(g, r.labeling.strong);
  d["weak"] = pairs(g, r.labeling.weak);
  d["stats"] = r.stats;
  return d;
}

SolveResult dispatch(const Graph &g, const std::string &solver, std::size_t cap) {
  SolveOptions opts{cap, false};
  if (solver == "auto")
    return solve_auto(g, opts);
  if (solver == "pig")
    return solve_pig_dp(g);
  if (solver == "tp")
    return solve_trivially_perfect(g);
  if (solver == "bip")
    return solve_bipartite(g);
  if (solver == "oracle")
    return solve_oracle(g, opts);
  throw input_error("unknown solver '" + solver + "'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact maximum strong triadic closure solvers";

  py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
  py::register_exception<wrong_class_error>(m, "WrongClassError", PyExc_RuntimeError);
  py::register_exception<unsupported_error>(m, "UnsupportedError", PyExc_RuntimeError);
  py::register_exception<contract_violation>(m, "ContractViolation", PyExc_AssertionError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::vector<std::string>, const std::vector<LabelPair> &,
                    std::vector<std::int64_t>>(),
           py::arg("vertices"), py::arg("edges"), py::arg("weights") = std::vector<std::int64_t>{})
      .def_static(
          "from_edge_list",
          [](const std::string &text) {
            std::istringstream in(text);
            return parse_edge_list(in, "<string>");
          },
          py::arg("text"))
      .def_property_readonly("vertices", &Graph::labels)
      .def_property_readonly("edges", [](const Graph &g) { return pairs(g, g.edges()); })
      .def_property_readonly("weights", &Graph::weights)
      .def("neighbors", [](const Graph &g, const std::string &v) { return neighbors(g, v); })
      .def("to_edge_list", [](const Graph &g) { return format_edge_list(g); })
      .def("__len__", &Graph::num_vertices)
      .def("__eq__", &Graph::operator==)
      .def("__repr__", [](const Graph &g) {
        return "<Graph n=" + std::to_string(g.num_vertices()) +
               " m=" + std::to_string(g.num_edges()) + ">";
      });

  m.def(
      "solve",
      [](const Graph &g, const std::string &solver, std::size_t oracle_cap) {
        return result_dict(g, dispatch(g, solver, oracle_cap));
      },
      py::arg("graph"), py::arg("solver") = "auto", py::arg("oracle_cap") = 34,
      "Optimal labeling as a dict with value, solver, strong, weak and stats.");

  m.def(
      "validate",
      [](const Graph &g, const std::vector<LabelPair> &strong) -> py::object {
        auto bad = validate_stc(g, make_labeling(g, edges_from_pairs(g, strong)));
        if (!bad)
          return py::none();
        return py::make_tuple(g.label(bad->u), g.label(bad->v), g.label(bad->w));
      },
      py::arg("graph"), py::arg("strong"),
      "None if the strong edges satisfy strong triadic closure, else an open wedge (u, center, w).");

  m.def(
      "recognize_proper_interval",
      [](const Graph &g) -> py::object {
        auto o = recognize(g);
        if (!o)
          return py::none();
        std::vector<std::string> order;
        for (Vertex v : o->order)
          order.push_back(g.label(v));
        return py::cast(order);
      },
      py::arg("graph"));

  m.def(
      "incompat_graph", [](const Graph &g) { return incompat_as_graph(g); }, py::arg("graph"));

  m.def(
      "twin_classes", [](const Graph &g) { return twin_classes(g).classes; }, py::arg("graph"));

  m.def("random_proper_interval", &gen_random_proper_interval, py::arg("n"), py::arg("seed"),
        py::arg("spread") = 0.5);
  m.def("random_trivially_perfect", &gen_random_trivially_perfect, py::arg("n"), py::arg("seed"));
  m.def("random_bipartite", &gen_random_bipartite, py::arg("n"), py::arg("seed"),
        py::arg("edge_probability") = 0.4);

  m.def(
      "stc_reduction",
      [](int universe, const std::vector<std::array<int, 3>> &triplets) {
        auto red = gen_maxstc_from_disjointnn(
            gen_disjointnn_from_3sp(SetPackingInstance{universe, triplets, 0}));
        return py::make_tuple(red.instance.graph, red.threshold_table());
      },
      py::arg("universe"), py::arg("triplets"),
      "Reduced graph and its (k, threshold) table.");

  m.def(
      "certify_reduction",
      [](int universe, const std::vector<std::array<int, 3>> &triplets) {
        auto rep = certify_reduction(SetPackingInstance{universe, triplets, 0});
        py::dict d;
        d["set_packing"] = rep.set_packing;
        d["disjointnn"] = rep.disjointnn;
        d["optimum"] = rep.optimum;
        d["threshold_equivalent"] = rep.threshold_equivalent;
        py::list rows;
        for (const auto &r : rep.rows)
          rows.append(py::make_tuple(r.k, r.threshold, r.stc_reaches, r.packing_reaches));
        d["rows"] = rows;
        return d;
      },
      py::arg("universe"), py::arg("triplets"));
}
