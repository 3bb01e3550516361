#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "gstp/verification.hpp"

namespace gstp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

void require(bool ok, const char* message) {
  if (!ok) throw Error(ErrorKind::invalid_argument, message);
}

Graph random_graph(const GenParams& params, InstanceRng& rng) {
  const auto n = rng.uniform(params.vertices.min, params.vertices.max);
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  for (std::size_t i = n - 1; i > 0; --i) std::swap(order[i], order[rng.uniform(0, i)]);

  std::set<std::pair<VertexId, VertexId>> present;
  std::vector<Edge> edges;
  auto add = [&](VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    present.emplace(u, v);
    edges.push_back({u, v, Cost(rng.uniform(params.costs.min, params.costs.max))});
  };
  for (std::size_t i = 1; i < n; ++i) add(order[i], order[rng.uniform(0, i - 1)]);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (!present.contains({u, v}) && rng.bernoulli(params.edge_density)) add(u, v);
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
    return std::pair(x.a, x.b) < std::pair(y.a, y.b);
  });
  return Graph(n, std::move(edges));
}

// `size` distinct vertices of 0..n-1, ascending.
std::vector<VertexId> sample_vertices(std::size_t n, std::size_t size, InstanceRng& rng) {
  std::vector<VertexId> pool(n);
  std::iota(pool.begin(), pool.end(), VertexId{0});
  for (std::size_t j = 0; j < size; ++j) std::swap(pool[j], pool[rng.uniform(j, n - 1)]);
  pool.resize(size);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

void GenParams::validate() const {
  for (const IntRange& r : {vertices, costs, group_count, group_size}) {
    require(r.min <= r.max, "empty interval in generation parameters");
  }
  require(vertices.min >= 2, "instances need at least 2 vertices");
  require(vertices.max < no_vertex, "vertex maximum too large");
  require(costs.min >= 1, "edge costs must be at least 1");
  require(group_count.min >= 2, "at least 2 groups are required");
  require(group_size.min >= 1, "groups must be nonempty");
  require(group_size.min <= vertices.min, "group size minimum exceeds the vertex minimum");
  require(edge_density >= 0.0 && edge_density <= 1.0, "edge density must lie in [0, 1]");
}

InstanceRng::InstanceRng(std::uint64_t seed, std::uint64_t index)
    : engine_(splitmix64(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)))) {}

std::uint64_t InstanceRng::uniform(std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return engine_();
  const std::uint64_t buckets = span + 1;
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % buckets + 1) % buckets;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x > limit);
  return lo + x % buckets;
}

bool InstanceRng::bernoulli(double p) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return u < p;
}

GstpInstance generate_instance(const GenParams& params, std::uint64_t index) {
  params.validate();
  InstanceRng rng(params.seed, index);
  Graph graph = random_graph(params, rng);
  const std::size_t n = graph.vertex_count();
  const auto k = rng.uniform(params.group_count.min, params.group_count.max);
  std::vector<GstpInstance::Group> groups;
  for (std::uint64_t i = 0; i < k; ++i) {
    const auto size = rng.uniform(params.group_size.min, std::min<std::uint64_t>(params.group_size.max, n));
    groups.push_back(sample_vertices(n, size, rng));
  }
  return GstpInstance(std::move(graph), std::move(groups));
}

StpgInstance generate_stpg_instance(const GenParams& params, IntRange terminal_count,
                                    std::uint64_t index) {
  params.validate();
  require(terminal_count.min >= 1 && terminal_count.min <= terminal_count.max,
          "terminal count interval must be nonempty and start at 1 or more");
  InstanceRng rng(params.seed, index);
  Graph graph = random_graph(params, rng);
  const std::size_t n = graph.vertex_count();
  const auto hi = std::min<std::uint64_t>(terminal_count.max, n);
  const auto lo = std::min<std::uint64_t>(terminal_count.min, hi);
  auto terminals = sample_vertices(n, rng.uniform(lo, hi), rng);
  return StpgInstance(std::move(graph), std::move(terminals));
}

}  // namespace gstp
