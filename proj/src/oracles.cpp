#include <optional>
#include <string>

#include "gstp/solvers.hpp"

namespace gstp {

namespace {

void check_oracle_size(const Graph& graph) {
  if (graph.vertex_count() > oracle_max_vertices) {
    throw Error(ErrorKind::capacity, "oracle limited to " + std::to_string(oracle_max_vertices) +
                                         " vertices, got " + std::to_string(graph.vertex_count()));
  }
}

template <typename Accept>
SteinerTree best_subset_tree(const Graph& graph, Accept accept) {
  const std::uint32_t limit = std::uint32_t{1} << graph.vertex_count();
  std::optional<SteinerTree> best;
  std::vector<VertexId> subset;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    if (!accept(mask)) continue;
    subset.clear();
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
      if (mask >> v & 1U) subset.push_back(v);
    }
    auto tree = minimum_spanning_tree(graph, subset);
    if (tree && (!best || tree->total_cost() < best->total_cost())) best = std::move(tree);
  }
  if (!best) throw Error(ErrorKind::invalid_argument, "no feasible subset");
  return std::move(*best);
}

}  // namespace

SolveResult brute_force_smt(const StpgInstance& instance) {
  check_oracle_size(instance.graph());
  std::uint32_t required = 0;
  for (VertexId t : instance.terminals()) required |= std::uint32_t{1} << t;
  auto tree = best_subset_tree(instance.graph(),
                               [&](std::uint32_t mask) { return (mask & required) == required; });
  return {std::move(tree), true, SolveMethod::oracle_stpg};
}

SolveResult brute_force_gsmt(const GstpInstance& instance) {
  check_oracle_size(instance.graph());
  std::vector<std::uint32_t> group_masks;
  for (const auto& group : instance.groups()) {
    std::uint32_t mask = 0;
    for (VertexId v : group) mask |= std::uint32_t{1} << v;
    group_masks.push_back(mask);
  }
  auto tree = best_subset_tree(instance.graph(), [&](std::uint32_t mask) {
    for (std::uint32_t g : group_masks) {
      if (!(mask & g)) return false;
    }
    return true;
  });
  return {std::move(tree), true, SolveMethod::oracle_gstp};
}

}  // namespace gstp
