#include "gstp/reduction.hpp"

#include <algorithm>
#include <string>

namespace gstp {

ReducedInstance transform(const GstpInstance& instance) {
  const Graph& g = instance.graph();
  if (g.edge_count() == 0) {
    throw Error(ErrorKind::invalid_argument,
                "graph has no edges, so the dummy edge cost would be 0");
  }
  const Cost m = total_cost(g);
  const std::size_t k = instance.group_count();
  // Invariant checks later multiply M by |groups| + 1; make sure that fits.
  (void)(m * (static_cast<Cost::value_type>(k) + 1));

  const std::size_t n = g.vertex_count();
  if (n + k >= no_vertex) throw Error(ErrorKind::capacity, "too many vertices after reduction");

  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::vector<VertexId> dummies;
  std::vector<EdgeId> dummy_edges;
  std::vector<VertexId> terminals;
  for (std::size_t i = 0; i < k; ++i) {
    const auto dummy = static_cast<VertexId>(n + i);
    dummies.push_back(dummy);
    terminals.push_back(dummy);
    for (VertexId member : instance.groups()[i]) {
      dummy_edges.push_back(static_cast<EdgeId>(edges.size()));
      edges.push_back({dummy, member, m});
    }
  }
  Graph reduced_graph(n + k, std::move(edges));
  return ReducedInstance{StpgInstance(std::move(reduced_graph), std::move(terminals)),
                         m,
                         std::move(dummies),
                         std::move(dummy_edges),
                         n,
                         g.edge_count()};
}

SteinerTree extract(const ReducedInstance& reduced, const SteinerTree& tree) {
  const Graph& g = reduced.stpg.graph();
  validate_tree(g, tree);
  if (!stpg_is_feasible(reduced.stpg, tree)) {
    throw Error(ErrorKind::invalid_argument, "tree does not contain every dummy terminal");
  }
  for (VertexId dummy : reduced.dummy_of_group) {
    const std::size_t degree = tree.degree(g, dummy);
    if (degree != 1) {
      // degree 0 only happens for a lone dummy, i.e. a single-group tree {v_g}
      if (degree == 0) {
        throw Error(ErrorKind::invalid_argument,
                    "tree consists of the dummy vertex alone; nothing to extract");
      }
      throw NonLeafDummyError(dummy, degree);
    }
  }

  std::vector<EdgeId> kept;
  VertexId any_original = no_vertex;
  for (EdgeId id : tree.edges()) {
    if (id < reduced.original_edge_count) {
      kept.push_back(id);
    } else {
      const Edge& e = g.edge(id);
      any_original = reduced.is_dummy(e.a) ? e.b : e.a;
    }
  }
  // Original graph: same ids, restricted to the original part.
  std::vector<Edge> original_edges(g.edges().begin(),
                                   g.edges().begin() + static_cast<std::ptrdiff_t>(reduced.original_edge_count));
  const Graph original(reduced.original_vertex_count, std::move(original_edges));
  if (kept.empty()) return SteinerTree::single_vertex(original, any_original);
  return SteinerTree::from_edges(original, std::move(kept));
}

SteinerTree attach_dummy_leaves(const ReducedInstance& reduced, const GstpInstance& original,
                                const SteinerTree& group_tree) {
  validate_tree(original.graph(), group_tree);
  if (original.group_count() != reduced.group_count()) {
    throw Error(ErrorKind::invalid_argument, "reduced instance does not match the original");
  }
  std::vector<EdgeId> edges(group_tree.edges().begin(), group_tree.edges().end());
  std::size_t next_dummy_edge = 0;
  for (std::size_t i = 0; i < original.group_count(); ++i) {
    const auto& group = original.groups()[i];
    EdgeId chosen = no_edge;
    for (std::size_t j = 0; j < group.size(); ++j) {
      if (chosen == no_edge && group_tree.contains(group[j])) {
        chosen = reduced.dummy_edge_indices[next_dummy_edge + j];
      }
    }
    if (chosen == no_edge) {
      throw Error(ErrorKind::invalid_argument,
                  "tree misses group " + std::to_string(i));
    }
    edges.push_back(chosen);
    next_dummy_edge += group.size();
  }
  return SteinerTree::from_edges(reduced.stpg.graph(), std::move(edges));
}

GstpInstance as_group_instance(const StpgInstance& instance) {
  std::vector<GstpInstance::Group> groups;
  for (VertexId t : instance.terminals()) groups.push_back({t});
  return GstpInstance(instance.graph(), std::move(groups));
}

}  // namespace gstp
