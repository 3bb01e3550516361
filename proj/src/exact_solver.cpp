#include <algorithm>
#include <bit>
#include <queue>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "gstp/solvers.hpp"

namespace gstp {

std::string_view to_string(SolveMethod method) noexcept {
  switch (method) {
    case SolveMethod::exact_dp: return "exact-dp";
    case SolveMethod::heuristic_sph: return "heuristic-sph";
    case SolveMethod::oracle_stpg: return "oracle-stpg";
    case SolveMethod::oracle_gstp: return "oracle-gstp";
  }
  return "unknown";
}

namespace {

// Edge e of m edges weighs c(e) * 2^m - 2^(m-1-e). The subtracted term is a
// tie-breaker worth less than one unit of cost, so minimizing total weight
// minimizes cost first and then picks the tree whose sorted edge-id sequence
// is lexicographically smallest. All weights stay strictly positive.
using Weight = boost::multiprecision::cpp_int;

std::vector<Weight> tie_break_weights(const Graph& graph) {
  const std::size_t m = graph.edge_count();
  std::vector<Weight> weights(m);
  for (std::size_t e = 0; e < m; ++e) {
    weights[e] = (Weight(graph.edge(static_cast<EdgeId>(e)).cost.value()) << m) -
                 (Weight(1) << (m - 1 - e));
  }
  return weights;
}

enum class Step : std::uint8_t { none, base, merge, grow };

struct Cell {
  Weight weight;
  Step step = Step::none;
  std::uint32_t arg = 0;    // submask for merge, predecessor vertex for grow
  EdgeId edge = no_edge;    // grow edge
};

class DreyfusWagner {
 public:
  DreyfusWagner(const Graph& graph, std::span<const VertexId> terminals)
      : graph_(graph),
        weights_(tie_break_weights(graph)),
        root_(terminals.front()),
        others_(terminals.begin() + 1, terminals.end()),
        n_(graph.vertex_count()),
        table_((std::size_t{1} << others_.size()) * n_) {}

  std::vector<EdgeId> solve() {
    const std::uint32_t full = (std::uint32_t{1} << others_.size()) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) fill(mask);
    std::vector<EdgeId> edges;
    collect(full, root_, edges);
    return edges;
  }

 private:
  Cell& cell(std::uint32_t mask, VertexId v) { return table_[mask * n_ + v]; }

  void fill(std::uint32_t mask) {
    if (std::has_single_bit(mask)) {
      Cell& c = cell(mask, others_[std::countr_zero(mask)]);
      c.weight = 0;
      c.step = Step::base;
    } else {
      const std::uint32_t low = mask & (~mask + 1);
      for (VertexId v = 0; v < n_; ++v) {
        Cell& target = cell(mask, v);
        for (std::uint32_t sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
          if (!(sub & low)) continue;
          const Cell& left = cell(sub, v);
          const Cell& right = cell(mask ^ sub, v);
          if (left.step == Step::none || right.step == Step::none) continue;
          Weight candidate = left.weight + right.weight;
          if (target.step == Step::none || candidate < target.weight) {
            target.weight = std::move(candidate);
            target.step = Step::merge;
            target.arg = sub;
          }
        }
      }
    }
    grow(mask);
  }

  // Dijkstra seeded with every finite entry of the row.
  void grow(std::uint32_t mask) {
    using Entry = std::pair<Weight, VertexId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    std::vector<bool> done(n_, false);
    for (VertexId v = 0; v < n_; ++v) {
      if (cell(mask, v).step != Step::none) queue.emplace(cell(mask, v).weight, v);
    }
    while (!queue.empty()) {
      const VertexId u = queue.top().second;
      queue.pop();
      if (done[u]) continue;
      done[u] = true;
      const Weight base = cell(mask, u).weight;
      for (const Incidence& inc : graph_.neighbors(u)) {
        if (done[inc.neighbor]) continue;
        Cell& target = cell(mask, inc.neighbor);
        Weight candidate = base + weights_[inc.edge];
        if (target.step == Step::none || candidate < target.weight) {
          target.weight = candidate;
          target.step = Step::grow;
          target.arg = u;
          target.edge = inc.edge;
          queue.emplace(std::move(candidate), inc.neighbor);
        }
      }
    }
  }

  void collect(std::uint32_t mask, VertexId v, std::vector<EdgeId>& out) {
    std::vector<std::pair<std::uint32_t, VertexId>> stack{{mask, v}};
    while (!stack.empty()) {
      const auto [s, x] = stack.back();
      stack.pop_back();
      const Cell& c = cell(s, x);
      switch (c.step) {
        case Step::base:
          break;
        case Step::merge:
          stack.emplace_back(c.arg, x);
          stack.emplace_back(s ^ c.arg, x);
          break;
        case Step::grow:
          out.push_back(c.edge);
          stack.emplace_back(s, c.arg);
          break;
        case Step::none:
          throw Error(ErrorKind::invalid_argument, "terminal unreachable from the root");
      }
    }
  }

  const Graph& graph_;
  std::vector<Weight> weights_;
  VertexId root_;
  std::vector<VertexId> others_;
  std::size_t n_;
  std::vector<Cell> table_;
};

// Drops non-terminal leaves until none are left.
std::vector<EdgeId> prune(const Graph& graph, std::vector<EdgeId> edges,
                          std::span<const VertexId> terminals) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<bool> is_terminal(graph.vertex_count(), false);
  for (VertexId t : terminals) is_terminal[t] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::size_t> degree(graph.vertex_count(), 0);
    for (EdgeId id : edges) {
      ++degree[graph.edge(id).a];
      ++degree[graph.edge(id).b];
    }
    std::erase_if(edges, [&](EdgeId id) {
      const Edge& e = graph.edge(id);
      const bool drop = (degree[e.a] == 1 && !is_terminal[e.a]) ||
                        (degree[e.b] == 1 && !is_terminal[e.b]);
      changed |= drop;
      return drop;
    });
  }
  return edges;
}

}  // namespace

SolveResult solve_exact_stpg(const StpgInstance& instance, std::size_t max_terminals) {
  const auto terminals = instance.terminals();
  if (terminals.size() > max_terminals || terminals.size() > 31) {
    throw Error(ErrorKind::capacity,
                std::to_string(terminals.size()) + " terminals exceed the exact solver limit of " +
                    std::to_string(std::min<std::size_t>(max_terminals, 31)));
  }
  const Graph& graph = instance.graph();
  if (terminals.size() == 1) {
    return {SteinerTree::single_vertex(graph, terminals.front()), true, SolveMethod::exact_dp};
  }
  DreyfusWagner dp(graph, terminals);
  auto edges = prune(graph, dp.solve(), terminals);
  return {SteinerTree::from_edges(graph, std::move(edges)), true, SolveMethod::exact_dp};
}

}  // namespace gstp
