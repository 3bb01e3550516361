#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gstp/cost.hpp"

namespace gstp {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr VertexId no_vertex = static_cast<VertexId>(-1);
inline constexpr EdgeId no_edge = static_cast<EdgeId>(-1);

struct Edge {
  VertexId a;
  VertexId b;
  Cost cost;

  VertexId other(VertexId v) const noexcept { return v == a ? b : a; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

/// Undirected graph on dense vertex ids 0..n-1 with strictly positive edge
/// costs. No self-loops, no parallel edges. Immutable once built.
class Graph {
 public:
  /// Throws ErrorKind::invalid_argument for n == 0 or out-of-range endpoints,
  /// ErrorKind::invalid_structure for self-loops and parallel edges and
  /// ErrorKind::non_positive_cost for zero-cost edges.
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const Edge& edge(EdgeId id) const { return edges_.at(id); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Incident edges of v in increasing edge-id order.
  std::span<const Incidence> neighbors(VertexId v) const { return adjacency_.at(v); }

  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

  friend bool operator==(const Graph& lhs, const Graph& rhs) {
    return lhs.vertex_count() == rhs.vertex_count() && lhs.edges_ == rhs.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

/// A tree inside some graph: sorted vertex ids, sorted edge ids and the exact
/// cost of those edges. Construct only through the factories, which validate.
class SteinerTree {
 public:
  /// Tree made of exactly these edges (duplicates rejected). Throws
  /// ErrorKind::invalid_argument when the edges are not a tree.
  static SteinerTree from_edges(const Graph& graph, std::vector<EdgeId> edges);

  static SteinerTree single_vertex(const Graph& graph, VertexId v);

  std::span<const VertexId> vertices() const noexcept { return vertices_; }
  std::span<const EdgeId> edges() const noexcept { return edges_; }
  Cost total_cost() const noexcept { return total_cost_; }

  bool contains(VertexId v) const noexcept;

  /// Number of tree edges incident to v.
  std::size_t degree(const Graph& graph, VertexId v) const;

  friend bool operator==(const SteinerTree&, const SteinerTree&) = default;

 private:
  SteinerTree() = default;

  std::vector<VertexId> vertices_;
  std::vector<EdgeId> edges_;
  Cost total_cost_;
};

/// Re-checks every SteinerTree invariant against `graph`; throws
/// ErrorKind::invalid_argument on the first violation.
void validate_tree(const Graph& graph, const SteinerTree& tree);

bool is_connected(const Graph& graph);

Cost total_cost(const Graph& graph);

struct ShortestPaths {
  std::vector<Cost> distance;
  std::vector<VertexId> predecessor;  // no_vertex for the source and unreachable
  std::vector<EdgeId> predecessor_edge;
  std::vector<bool> reached;
};

/// Dijkstra from `source`. Among equal-length alternatives the predecessor
/// edge with the lowest id is kept.
ShortestPaths shortest_paths(const Graph& graph, VertexId source);

/// Multi-source variant: every source starts at distance 0. Same tie rule.
ShortestPaths shortest_paths(const Graph& graph, std::span<const VertexId> sources);

/// Edge ids of the recorded shortest path from the source to `target`, in
/// path order starting at the source.
std::vector<EdgeId> path_to(const ShortestPaths& paths, VertexId target);

/// Minimum spanning tree of the subgraph induced by `subset` (Kruskal, ties by
/// lowest edge id). std::nullopt when the induced subgraph is disconnected.
std::optional<SteinerTree> minimum_spanning_tree(const Graph& graph,
                                                 std::span<const VertexId> subset);

}  // namespace gstp
