#pragma once

// Independent brute-force helpers for tests. Nothing here calls the
// algorithms under test except for graph construction.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "gstp/graph.hpp"
#include "gstp/instance.hpp"

namespace gstp::testing {

inline Graph triangle() {  // a=0, b=1, c=2; ab=1, bc=2, ac=4
  return Graph(3, {{0, 1, Cost(1)}, {1, 2, Cost(2)}, {0, 2, Cost(4)}});
}

inline Graph path3() {  // a-b(1)-c(2)
  return Graph(3, {{0, 1, Cost(1)}, {1, 2, Cost(2)}});
}

struct Components {
  std::vector<std::size_t> parent;
  explicit Components(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

/// Edge set given by a bitmask over edge ids: vertex set covered, or nullopt
/// if the edges contain a cycle or are disconnected.
inline std::optional<std::vector<VertexId>> tree_vertices(const Graph& g, std::uint64_t edge_mask) {
  Components comps(g.vertex_count());
  std::vector<bool> used(g.vertex_count(), false);
  std::size_t edges = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!(edge_mask >> e & 1U)) continue;
    if (!comps.join(g.edge(e).a, g.edge(e).b)) return std::nullopt;
    used[g.edge(e).a] = used[g.edge(e).b] = true;
    ++edges;
  }
  std::vector<VertexId> vs;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (used[v]) vs.push_back(v);
  }
  if (vs.size() != edges + 1) return std::nullopt;
  return vs;
}

inline std::uint64_t mask_cost(const Graph& g, std::uint64_t edge_mask) {
  std::uint64_t c = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (edge_mask >> e & 1U) c += g.edge(e).cost.value();
  }
  return c;
}

inline std::vector<EdgeId> mask_edges(std::uint64_t edge_mask) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < 64; ++e) {
    if (edge_mask >> e & 1U) out.push_back(e);
  }
  return out;
}

/// Minimum spanning tree cost of the induced subgraph by enumerating every
/// edge subset of size |subset| - 1.
inline std::optional<std::uint64_t> brute_spanning_cost(const Graph& g, const std::vector<VertexId>& subset) {
  if (subset.size() == 1) return 0;
  std::vector<EdgeId> induced;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const bool a = std::find(subset.begin(), subset.end(), g.edge(e).a) != subset.end();
    const bool b = std::find(subset.begin(), subset.end(), g.edge(e).b) != subset.end();
    if (a && b) induced.push_back(e);
  }
  std::optional<std::uint64_t> best;
  const std::size_t need = subset.size() - 1;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << induced.size()); ++pick) {
    if (static_cast<std::size_t>(__builtin_popcountll(pick)) != need) continue;
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < induced.size(); ++i) {
      if (pick >> i & 1U) mask |= std::uint64_t{1} << induced[i];
    }
    auto vs = tree_vertices(g, mask);
    if (!vs || vs->size() != subset.size()) continue;
    const auto c = mask_cost(g, mask);
    if (!best || c < *best) best = c;
  }
  return best;
}

/// Every minimum-cost tree containing `required` by enumerating all edge
/// subsets; returns the lexicographically smallest sorted edge list and its
/// cost. Needs edge_count <= ~20.
struct BestTree {
  std::uint64_t cost;
  std::vector<EdgeId> edges;  // empty for a single-vertex optimum
};

inline BestTree brute_best_tree(const Graph& g, const std::vector<VertexId>& required) {
  if (required.size() == 1) return {0, {}};
  std::optional<BestTree> best;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.edge_count()); ++mask) {
    auto vs = tree_vertices(g, mask);
    if (!vs) continue;
    if (!std::all_of(required.begin(), required.end(), [&](VertexId r) {
          return std::binary_search(vs->begin(), vs->end(), r);
        })) {
      continue;
    }
    BestTree candidate{mask_cost(g, mask), mask_edges(mask)};
    if (!best || candidate.cost < best->cost ||
        (candidate.cost == best->cost && candidate.edges < best->edges)) {
      best = std::move(candidate);
    }
  }
  return *best;
}

}  // namespace gstp::testing
