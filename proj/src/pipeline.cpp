#include "gstp/pipeline.hpp"

namespace gstp {

GroupSolveResult solve_gstp_via_reduction(const GstpInstance& instance, SolveMethod method,
                                          std::size_t max_terminals) {
  const Graph& graph = instance.graph();
  if (instance.group_count() == 1 || graph.edge_count() == 0) {
    return {SteinerTree::single_vertex(graph, instance.groups()[0][0]), method, true, Cost{}, Cost{}};
  }
  const ReducedInstance reduced = transform(instance);
  SolveResult solved = [&] {
    switch (method) {
      case SolveMethod::exact_dp: return solve_exact_stpg(reduced.stpg, max_terminals);
      case SolveMethod::heuristic_sph: return solve_heuristic_stpg(reduced.stpg);
      default: break;
    }
    throw Error(ErrorKind::invalid_argument, "pipeline needs the exact or the heuristic solver");
  }();
  return {extract(reduced, solved.tree), method, false, solved.tree.total_cost(), reduced.m_value};
}

}  // namespace gstp
