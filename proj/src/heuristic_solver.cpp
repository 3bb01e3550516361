#include <algorithm>

#include "gstp/solvers.hpp"

namespace gstp {

SolveResult solve_heuristic_stpg(const StpgInstance& instance) {
  const Graph& graph = instance.graph();
  const auto terminals = instance.terminals();

  std::vector<bool> in_tree(graph.vertex_count(), false);
  std::vector<VertexId> tree_vertices{terminals.front()};
  in_tree[terminals.front()] = true;
  std::vector<EdgeId> edges;

  for (;;) {
    const ShortestPaths paths = shortest_paths(graph, tree_vertices);
    VertexId nearest = no_vertex;
    for (VertexId t : terminals) {  // sorted, so ties go to the lowest id
      if (in_tree[t]) continue;
      if (nearest == no_vertex || paths.distance[t] < paths.distance[nearest]) nearest = t;
    }
    if (nearest == no_vertex) break;
    for (VertexId v = nearest; !in_tree[v]; v = paths.predecessor[v]) {
      in_tree[v] = true;
      tree_vertices.push_back(v);
      edges.push_back(paths.predecessor_edge[v]);
    }
  }

  if (edges.empty()) {
    return {SteinerTree::single_vertex(graph, terminals.front()), false, SolveMethod::heuristic_sph};
  }
  return {SteinerTree::from_edges(graph, std::move(edges)), false, SolveMethod::heuristic_sph};
}

}  // namespace gstp
