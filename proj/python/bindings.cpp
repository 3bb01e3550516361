#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "gstp/pipeline.hpp"
#include "gstp/verification.hpp"

namespace py = pybind11;
using namespace gstp;

namespace {

using EdgeTuple = std::tuple<VertexId, VertexId, Cost::value_type>;

Graph make_graph(std::size_t n, const std::vector<EdgeTuple>& edges) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& [a, b, c] : edges) out.push_back({a, b, Cost(c)});
  return Graph(n, std::move(out));
}

std::vector<EdgeTuple> edge_tuples(const Graph& g) {
  std::vector<EdgeTuple> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.a, e.b, e.cost.value());
  return out;
}

template <typename T>
std::vector<T> to_vector(std::span<const T> s) {
  return {s.begin(), s.end()};
}

IntRange to_range(const std::pair<std::uint64_t, std::uint64_t>& p) { return {p.first, p.second}; }
std::pair<std::uint64_t, std::uint64_t> from_range(const IntRange& r) { return {r.min, r.max}; }

SolveMethod method_from_name(const std::string& name) {
  if (name == "exact") return SolveMethod::exact_dp;
  if (name == "heuristic") return SolveMethod::heuristic_sph;
  throw Error(ErrorKind::invalid_argument, "method must be 'exact' or 'heuristic'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Group Steiner tree to Steiner tree reduction with exact, heuristic and brute-force solvers";

  static py::exception<Error> gstp_error(m, "GstpError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object args = py::make_tuple(to_string(e.kind()), e.what());
      PyErr_SetObject(gstp_error.ptr(), args.ptr());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("vertex_count"), py::arg("edges"),
           "Edges are (a, b, cost) tuples with 0-based endpoints.")
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("edges", &edge_tuples)
      .def("find_edge", &Graph::find_edge)
      .def("total_cost", [](const Graph& g) { return total_cost(g).value(); })
      .def("is_connected", [](const Graph& g) { return is_connected(g); })
      .def(py::self == py::self);

  py::class_<SteinerTree>(m, "SteinerTree")
      .def_static("from_edges", &SteinerTree::from_edges, py::arg("graph"), py::arg("edges"))
      .def_static("single_vertex", &SteinerTree::single_vertex, py::arg("graph"), py::arg("vertex"))
      .def_property_readonly("vertices", [](const SteinerTree& t) { return to_vector(t.vertices()); })
      .def_property_readonly("edges", [](const SteinerTree& t) { return to_vector(t.edges()); })
      .def_property_readonly("total_cost", [](const SteinerTree& t) { return t.total_cost().value(); })
      .def("degree", &SteinerTree::degree)
      .def(py::self == py::self);

  py::class_<StpgInstance>(m, "StpgInstance")
      .def(py::init<Graph, std::vector<VertexId>>(), py::arg("graph"), py::arg("terminals"))
      .def_property_readonly("graph", &StpgInstance::graph)
      .def_property_readonly("terminals", [](const StpgInstance& s) { return to_vector(s.terminals()); })
      .def(py::self == py::self);

  py::class_<GstpInstance>(m, "GstpInstance")
      .def(py::init<Graph, std::vector<GstpInstance::Group>>(), py::arg("graph"), py::arg("groups"))
      .def_property_readonly("graph", &GstpInstance::graph)
      .def_property_readonly("groups", [](const GstpInstance& g) { return to_vector(g.groups()); })
      .def(py::self == py::self);

  m.def("stpg_is_feasible", &stpg_is_feasible);
  m.def("gstp_is_feasible", &gstp_is_feasible);
  m.def("parse_stpg", &parse_stpg, py::arg("text"));
  m.def("parse_gstp", &parse_gstp, py::arg("text"));
  m.def("render_stpg", &render_stpg);
  m.def("render_gstp", &render_gstp);

  py::class_<ReducedInstance>(m, "ReducedInstance")
      .def_readonly("stpg", &ReducedInstance::stpg)
      .def_property_readonly("m_value", [](const ReducedInstance& r) { return r.m_value.value(); })
      .def_readonly("dummy_of_group", &ReducedInstance::dummy_of_group)
      .def_readonly("dummy_edge_indices", &ReducedInstance::dummy_edge_indices)
      .def_readonly("original_vertex_count", &ReducedInstance::original_vertex_count)
      .def_readonly("original_edge_count", &ReducedInstance::original_edge_count);

  m.def("transform", &transform, py::arg("instance"));
  m.def("extract", &extract, py::arg("reduced"), py::arg("tree"));
  m.def("attach_dummy_leaves", &attach_dummy_leaves, py::arg("reduced"), py::arg("original"),
        py::arg("group_tree"));
  m.def("as_group_instance", &as_group_instance);

  py::class_<SolveResult>(m, "SolveResult")
      .def_readonly("tree", &SolveResult::tree)
      .def_readonly("optimal", &SolveResult::optimal)
      .def_property_readonly("method", [](const SolveResult& r) { return std::string(to_string(r.method)); });

  m.def("solve_exact_stpg", &solve_exact_stpg, py::arg("instance"),
        py::arg("max_terminals") = default_max_terminals);
  m.def("solve_heuristic_stpg", &solve_heuristic_stpg, py::arg("instance"));
  m.def("brute_force_smt", &brute_force_smt, py::arg("instance"));
  m.def("brute_force_gsmt", &brute_force_gsmt, py::arg("instance"));

  py::class_<GroupSolveResult>(m, "GroupSolveResult")
      .def_readonly("tree", &GroupSolveResult::tree)
      .def_readonly("short_circuit", &GroupSolveResult::short_circuit)
      .def_property_readonly("smt_cost", [](const GroupSolveResult& r) { return r.smt_cost.value(); })
      .def_property_readonly("m_value", [](const GroupSolveResult& r) { return r.m_value.value(); });

  m.def(
      "solve_gstp",
      [](const GstpInstance& instance, const std::string& method, std::size_t max_terminals) {
        return solve_gstp_via_reduction(instance, method_from_name(method), max_terminals);
      },
      py::arg("instance"), py::arg("method") = "exact", py::arg("max_terminals") = default_max_terminals);

  py::class_<GenParams>(m, "GenParams")
      .def(py::init<>())
      .def_property(
          "vertices", [](const GenParams& p) { return from_range(p.vertices); },
          [](GenParams& p, std::pair<std::uint64_t, std::uint64_t> r) { p.vertices = to_range(r); })
      .def_readwrite("edge_density", &GenParams::edge_density)
      .def_property(
          "costs", [](const GenParams& p) { return from_range(p.costs); },
          [](GenParams& p, std::pair<std::uint64_t, std::uint64_t> r) { p.costs = to_range(r); })
      .def_property(
          "group_count", [](const GenParams& p) { return from_range(p.group_count); },
          [](GenParams& p, std::pair<std::uint64_t, std::uint64_t> r) { p.group_count = to_range(r); })
      .def_property(
          "group_size", [](const GenParams& p) { return from_range(p.group_size); },
          [](GenParams& p, std::pair<std::uint64_t, std::uint64_t> r) { p.group_size = to_range(r); })
      .def_readwrite("seed", &GenParams::seed)
      .def("validate", &GenParams::validate);

  m.def("generate_instance", &generate_instance, py::arg("params"), py::arg("index"));
  m.def(
      "generate_stpg_instance",
      [](const GenParams& p, std::pair<std::uint64_t, std::uint64_t> terminals, std::uint64_t index) {
        return generate_stpg_instance(p, to_range(terminals), index);
      },
      py::arg("params"), py::arg("terminal_count"), py::arg("index"));

  py::class_<TheoremRecord>(m, "TheoremRecord")
      .def_readonly("index", &TheoremRecord::index)
      .def_property_readonly("gsmt_cost", [](const TheoremRecord& r) { return r.gsmt_cost.value(); })
      .def_property_readonly("smt_cost", [](const TheoremRecord& r) { return r.smt_cost.value(); })
      .def_property_readonly("m_value", [](const TheoremRecord& r) { return r.m_value.value(); })
      .def_readonly("group_count", &TheoremRecord::group_count)
      .def_readonly("identity_holds", &TheoremRecord::identity_holds)
      .def_readonly("all_dummies_leaves", &TheoremRecord::all_dummies_leaves)
      .def_readonly("extraction_feasible", &TheoremRecord::extraction_feasible)
      .def_property_readonly("heuristic_gap", [](const TheoremRecord& r) { return r.heuristic_gap.value(); })
      .def_readonly("sandwich_holds", &TheoremRecord::sandwich_holds)
      .def_readonly("heuristic_sound", &TheoremRecord::heuristic_sound);

  py::class_<TheoremReport>(m, "TheoremReport")
      .def_readonly("params", &TheoremReport::params)
      .def_readonly("records", &TheoremReport::records)
      .def("passed", &TheoremReport::passed)
      .def("render", &render_report)
      .def("summary", &summarize);

  m.def("verify_theorem", &verify_theorem, py::arg("instance"));
  m.def("run_campaign", &run_campaign, py::arg("params"), py::arg("count"), py::arg("workers") = 0,
        py::call_guard<py::gil_scoped_release>());
}
