#include "gstp/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_set>

namespace gstp {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::syntax: return "syntax";
    case ErrorKind::unknown_vertex: return "unknown_vertex";
    case ErrorKind::disconnected: return "disconnected";
    case ErrorKind::non_positive_cost: return "non_positive_cost";
    case ErrorKind::invalid_structure: return "invalid_structure";
    case ErrorKind::overflow: return "overflow";
    case ErrorKind::capacity: return "capacity";
    case ErrorKind::non_leaf_dummy: return "non_leaf_dummy";
  }
  return "unknown";
}

namespace {

std::uint64_t pair_key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

// Union-find with path halving; only used for Kruskal and tree checks.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : edges_(std::move(edges)), adjacency_(vertex_count) {
  if (vertex_count == 0) {
    throw Error(ErrorKind::invalid_argument, "graph needs at least one vertex");
  }
  if (vertex_count >= no_vertex || edges_.size() >= no_edge) {
    throw Error(ErrorKind::capacity, "graph too large for 32-bit ids");
  }
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges_.size());
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    if (e.a >= vertex_count || e.b >= vertex_count) {
      throw Error(ErrorKind::invalid_argument,
                  "edge " + std::to_string(id) + " has an endpoint out of range");
    }
    if (e.a == e.b) {
      throw Error(ErrorKind::invalid_structure,
                  "edge " + std::to_string(id) + " is a self-loop");
    }
    if (e.cost.value() == 0) {
      throw Error(ErrorKind::non_positive_cost,
                  "edge " + std::to_string(id) + " has cost 0");
    }
    if (!seen.insert(pair_key(e.a, e.b)).second) {
      throw Error(ErrorKind::invalid_structure,
                  "edge " + std::to_string(id) + " duplicates an earlier edge");
    }
    adjacency_[e.a].push_back({e.b, id});
    adjacency_[e.b].push_back({e.a, id});
  }
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
  if (u >= vertex_count() || v >= vertex_count()) return std::nullopt;
  const auto& list = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
  const VertexId wanted = adjacency_[u].size() <= adjacency_[v].size() ? v : u;
  for (const Incidence& inc : list) {
    if (inc.neighbor == wanted) return inc.edge;
  }
  return std::nullopt;
}

SteinerTree SteinerTree::from_edges(const Graph& graph, std::vector<EdgeId> edges) {
  if (edges.empty()) {
    throw Error(ErrorKind::invalid_argument,
                "a tree without edges must be built with single_vertex");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw Error(ErrorKind::invalid_argument, "tree edge listed twice");
  }
  SteinerTree tree;
  for (EdgeId id : edges) {
    if (id >= graph.edge_count()) {
      throw Error(ErrorKind::invalid_argument, "tree edge id out of range");
    }
    const Edge& e = graph.edge(id);
    tree.vertices_.push_back(e.a);
    tree.vertices_.push_back(e.b);
    tree.total_cost_ += e.cost;
  }
  std::sort(tree.vertices_.begin(), tree.vertices_.end());
  tree.vertices_.erase(std::unique(tree.vertices_.begin(), tree.vertices_.end()),
                       tree.vertices_.end());
  tree.edges_ = std::move(edges);
  validate_tree(graph, tree);
  return tree;
}

SteinerTree SteinerTree::single_vertex(const Graph& graph, VertexId v) {
  if (v >= graph.vertex_count()) {
    throw Error(ErrorKind::invalid_argument, "tree vertex out of range");
  }
  SteinerTree tree;
  tree.vertices_.push_back(v);
  return tree;
}

bool SteinerTree::contains(VertexId v) const noexcept {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::size_t SteinerTree::degree(const Graph& graph, VertexId v) const {
  std::size_t d = 0;
  for (EdgeId id : edges_) {
    const Edge& e = graph.edge(id);
    if (e.a == v || e.b == v) ++d;
  }
  return d;
}

void validate_tree(const Graph& graph, const SteinerTree& tree) {
  const auto vertices = tree.vertices();
  const auto edges = tree.edges();
  if (vertices.empty()) {
    throw Error(ErrorKind::invalid_argument, "tree has no vertices");
  }
  if (!std::is_sorted(vertices.begin(), vertices.end()) ||
      std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end() ||
      !std::is_sorted(edges.begin(), edges.end()) ||
      std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw Error(ErrorKind::invalid_argument, "tree ids are not sorted and unique");
  }
  if (vertices.back() >= graph.vertex_count()) {
    throw Error(ErrorKind::invalid_argument, "tree vertex out of range");
  }
  if (edges.size() + 1 != vertices.size()) {
    throw Error(ErrorKind::invalid_argument, "tree must have |vertices| - 1 edges");
  }
  DisjointSets sets(graph.vertex_count());
  Cost sum;
  for (EdgeId id : edges) {
    if (id >= graph.edge_count()) {
      throw Error(ErrorKind::invalid_argument, "tree edge id out of range");
    }
    const Edge& e = graph.edge(id);
    if (!tree.contains(e.a) || !tree.contains(e.b)) {
      throw Error(ErrorKind::invalid_argument, "tree edge endpoint outside the vertex set");
    }
    if (!sets.unite(e.a, e.b)) {
      throw Error(ErrorKind::invalid_argument, "tree edges contain a cycle");
    }
    sum += e.cost;
  }
  // |E| = |V| - 1 and acyclic implies connected.
  if (sum != tree.total_cost()) {
    throw Error(ErrorKind::invalid_argument, "tree cost does not match its edges");
  }
}

bool is_connected(const Graph& graph) {
  std::vector<bool> seen(graph.vertex_count(), false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (const Incidence& inc : graph.neighbors(v)) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = true;
        ++reached;
        stack.push_back(inc.neighbor);
      }
    }
  }
  return reached == graph.vertex_count();
}

Cost total_cost(const Graph& graph) {
  Cost sum;
  for (const Edge& e : graph.edges()) sum += e.cost;
  return sum;
}

ShortestPaths shortest_paths(const Graph& graph, VertexId source) {
  const VertexId sources[] = {source};
  return shortest_paths(graph, sources);
}

ShortestPaths shortest_paths(const Graph& graph, std::span<const VertexId> sources) {
  const std::size_t n = graph.vertex_count();
  if (sources.empty()) throw Error(ErrorKind::invalid_argument, "no source given");

  ShortestPaths out{std::vector<Cost>(n), std::vector<VertexId>(n, no_vertex),
                    std::vector<EdgeId>(n, no_edge), std::vector<bool>(n, false)};
  std::vector<bool> done(n, false);
  using Entry = std::pair<Cost, VertexId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  for (VertexId source : sources) {
    if (source >= n) throw Error(ErrorKind::invalid_argument, "source out of range");
    if (out.reached[source]) continue;
    out.reached[source] = true;
    queue.push({Cost{}, source});
  }
  while (!queue.empty()) {
    const auto [d, v] = queue.top();
    queue.pop();
    if (done[v]) continue;
    done[v] = true;
    for (const Incidence& inc : graph.neighbors(v)) {
      const VertexId w = inc.neighbor;
      if (done[w]) continue;
      const Cost candidate = d + graph.edge(inc.edge).cost;
      if (!out.reached[w] || candidate < out.distance[w] ||
          (candidate == out.distance[w] && inc.edge < out.predecessor_edge[w])) {
        const bool improved = !out.reached[w] || candidate < out.distance[w];
        out.reached[w] = true;
        out.distance[w] = candidate;
        out.predecessor[w] = v;
        out.predecessor_edge[w] = inc.edge;
        if (improved) queue.push({candidate, w});
      }
    }
  }
  return out;
}

std::vector<EdgeId> path_to(const ShortestPaths& paths, VertexId target) {
  if (target >= paths.distance.size() || !paths.reached[target]) {
    throw Error(ErrorKind::invalid_argument, "target not reachable");
  }
  std::vector<EdgeId> path;
  for (VertexId v = target; paths.predecessor[v] != no_vertex; v = paths.predecessor[v]) {
    path.push_back(paths.predecessor_edge[v]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<SteinerTree> minimum_spanning_tree(const Graph& graph,
                                                 std::span<const VertexId> subset) {
  if (subset.empty()) {
    throw Error(ErrorKind::invalid_argument, "minimum_spanning_tree needs a nonempty subset");
  }
  std::vector<bool> member(graph.vertex_count(), false);
  std::size_t distinct = 0;
  for (VertexId v : subset) {
    if (v >= graph.vertex_count()) {
      throw Error(ErrorKind::invalid_argument, "subset vertex out of range");
    }
    if (!member[v]) {
      member[v] = true;
      ++distinct;
    }
  }
  if (distinct == 1) return SteinerTree::single_vertex(graph, subset.front());

  std::vector<EdgeId> candidates;
  for (EdgeId id = 0; id < graph.edge_count(); ++id) {
    const Edge& e = graph.edge(id);
    if (member[e.a] && member[e.b]) candidates.push_back(id);
  }
  std::stable_sort(candidates.begin(), candidates.end(), [&](EdgeId x, EdgeId y) {
    return graph.edge(x).cost < graph.edge(y).cost;
  });
  DisjointSets sets(graph.vertex_count());
  std::vector<EdgeId> chosen;
  for (EdgeId id : candidates) {
    const Edge& e = graph.edge(id);
    if (sets.unite(e.a, e.b)) {
      chosen.push_back(id);
      if (chosen.size() + 1 == distinct) break;
    }
  }
  if (chosen.size() + 1 != distinct) return std::nullopt;
  return SteinerTree::from_edges(graph, std::move(chosen));
}

}  // namespace gstp
