#include <doctest.h>

#include <limits>

#include "gstp/reduction.hpp"
#include "gstp/solvers.hpp"
#include "gstp/verification.hpp"
#include "support.hpp"

using namespace gstp;
using gstp::testing::triangle;

namespace {

// a=0, b=1; ab=5.
Graph two_vertices() { return Graph(2, {{0, 1, Cost(5)}}); }

void check_invariants(const GstpInstance& original, const ReducedInstance& r) {
  const Graph& g = r.stpg.graph();
  const Graph& og = original.graph();
  const std::size_t n = og.vertex_count();
  const std::size_t k = original.group_count();
  CHECK(r.m_value == total_cost(og));
  CHECK(r.original_vertex_count == n);
  CHECK(r.original_edge_count == og.edge_count());
  CHECK(g.vertex_count() == n + k);
  REQUIRE(r.dummy_of_group.size() == k);
  for (std::size_t i = 0; i < k; ++i) CHECK(r.dummy_of_group[i] == n + i);
  CHECK(std::vector<VertexId>(r.stpg.terminals().begin(), r.stpg.terminals().end()) == r.dummy_of_group);

  std::size_t members = 0;
  for (const auto& group : original.groups()) members += group.size();
  CHECK(r.dummy_edge_indices.size() == members);
  CHECK(g.edge_count() == og.edge_count() + members);
  for (EdgeId e = 0; e < og.edge_count(); ++e) CHECK(g.edge(e) == og.edge(e));

  for (std::size_t i = 0; i < k; ++i) {
    const VertexId d = r.dummy_of_group[i];
    std::vector<VertexId> neighbors;
    for (const Incidence& inc : g.neighbors(d)) {
      neighbors.push_back(inc.neighbor);
      CHECK(g.edge(inc.edge).cost == r.m_value);
    }
    CHECK(neighbors == original.groups()[i]);
  }
  CHECK(is_connected(g));
}

SteinerTree tree_of(const Graph& g, std::vector<std::pair<VertexId, VertexId>> pairs) {
  std::vector<EdgeId> ids;
  for (auto [u, v] : pairs) ids.push_back(*g.find_edge(u, v));
  return SteinerTree::from_edges(g, ids);
}

}  // namespace

TEST_CASE("transform on two vertices") {
  const GstpInstance inst(two_vertices(), {{0}, {1}});
  const ReducedInstance r = transform(inst);
  CHECK(r.m_value == Cost(5));
  const Graph& g = r.stpg.graph();
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.edge(1) == Edge{2, 0, Cost(5)});
  CHECK(g.edge(2) == Edge{3, 1, Cost(5)});
  CHECK(std::vector<VertexId>(r.stpg.terminals().begin(), r.stpg.terminals().end()) == std::vector<VertexId>{2, 3});
  check_invariants(inst, r);
}

TEST_CASE("transform on the triangle") {
  const GstpInstance inst(triangle(), {{0}, {1, 2}});
  const ReducedInstance r = transform(inst);
  CHECK(r.m_value == Cost(7));
  CHECK(r.stpg.graph().vertex_count() == 5);
  CHECK(r.stpg.graph().edge_count() == 6);
  CHECK(r.stpg.graph().find_edge(4, 1).has_value());
  CHECK(r.stpg.graph().find_edge(4, 2).has_value());
  CHECK_FALSE(r.stpg.graph().find_edge(4, 0).has_value());
  check_invariants(inst, r);
}

TEST_CASE("transform counts and invariants on random instances") {
  GenParams params;
  params.vertices = {2, 20};
  params.group_count = {2, 6};
  params.group_size = {1, 5};
  for (std::uint64_t i = 0; i < 100; ++i) {
    const GstpInstance inst = generate_instance(params, i);
    const ReducedInstance r = transform(inst);
    check_invariants(inst, r);
    // Deterministic: same input, same output.
    const ReducedInstance again = transform(inst);
    CHECK(again.stpg == r.stpg);
    CHECK(again.dummy_edge_indices == r.dummy_edge_indices);
  }
}

TEST_CASE("transform distinguishes distinct inputs") {
  const ReducedInstance a = transform(GstpInstance(triangle(), {{0}, {1, 2}}));
  const ReducedInstance b = transform(GstpInstance(triangle(), {{0}, {2, 1}}));
  const ReducedInstance c = transform(GstpInstance(triangle(), {{1, 2}, {0}}));
  CHECK_FALSE(a.stpg == b.stpg);
  CHECK_FALSE(a.stpg == c.stpg);
}

TEST_CASE("transform edge cases") {
  CHECK_THROWS_AS(transform(GstpInstance(Graph(1, {}), {{0}, {0}})), Error);
  const auto max = std::numeric_limits<Cost::value_type>::max();
  try {
    (void)transform(GstpInstance(Graph(2, {{0, 1, Cost(max / 2)}}), {{0}, {1}}));
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::overflow);
  }
  // A single group is accepted by transform itself.
  CHECK(transform(GstpInstance(triangle(), {{1}})).stpg.terminals().size() == 1);
}

TEST_CASE("extract on the two-vertex example") {
  const GstpInstance inst(two_vertices(), {{0}, {1}});
  const ReducedInstance r = transform(inst);
  const SteinerTree full = tree_of(r.stpg.graph(), {{2, 0}, {0, 1}, {1, 3}});
  CHECK(full.total_cost() == Cost(15));
  const SteinerTree stripped = extract(r, full);
  CHECK(stripped.total_cost() == Cost(5));
  CHECK(std::vector<EdgeId>(stripped.edges().begin(), stripped.edges().end()) == std::vector<EdgeId>{0});
  CHECK(gstp_is_feasible(inst, stripped));
}

TEST_CASE("extract with groups sharing one vertex") {
  const GstpInstance inst(triangle(), {{0}, {0}});
  const ReducedInstance r = transform(inst);
  const SteinerTree star = tree_of(r.stpg.graph(), {{3, 0}, {4, 0}});
  const SteinerTree stripped = extract(r, star);
  CHECK(stripped.total_cost() == Cost(0));
  CHECK(stripped.edges().empty());
  CHECK(std::vector<VertexId>(stripped.vertices().begin(), stripped.vertices().end()) == std::vector<VertexId>{0});
}

TEST_CASE("extract rejects a dummy of degree two") {
  const GstpInstance inst(triangle(), {{0}, {1, 2}});
  const ReducedInstance r = transform(inst);
  // v2 (id 4) joined to both b and c.
  const SteinerTree bad = tree_of(r.stpg.graph(), {{3, 0}, {0, 1}, {4, 1}, {4, 2}});
  try {
    (void)extract(r, bad);
    FAIL("expected NonLeafDummyError");
  } catch (const NonLeafDummyError& e) {
    CHECK(e.dummy_vertex() == 4);
    CHECK(e.kind() == ErrorKind::non_leaf_dummy);
  }
  // A tree missing a dummy terminal is not an STPG solution.
  CHECK_THROWS_AS(extract(r, tree_of(r.stpg.graph(), {{3, 0}, {0, 1}})), Error);
}

TEST_CASE("attaching dummy leaves then extracting is the identity") {
  GenParams params;
  params.vertices = {2, 10};
  params.group_size = {1, 4};
  for (std::uint64_t i = 0; i < 100; ++i) {
    const GstpInstance inst = generate_instance(params, i);
    const ReducedInstance r = transform(inst);
    // Any group-feasible tree works; a spanning tree of the whole graph is one.
    std::vector<VertexId> all(inst.graph().vertex_count());
    std::iota(all.begin(), all.end(), VertexId{0});
    for (const SteinerTree& theta : {*minimum_spanning_tree(inst.graph(), all), brute_force_gsmt(inst).tree}) {
      const SteinerTree lifted = attach_dummy_leaves(r, inst, theta);
      CHECK(stpg_is_feasible(r.stpg, lifted));
      CHECK(lifted.total_cost() == theta.total_cost() + r.m_value * inst.group_count());
      for (VertexId d : r.dummy_of_group) CHECK(lifted.degree(r.stpg.graph(), d) == 1);
      CHECK(extract(r, lifted) == theta);
    }
  }
}

TEST_CASE("tied optimum through a dummy still yields leaf dummies") {
  // Path a-b (5); groups {a}, {b}, {a,b}. The tree v1-a, v3-a, v3-b, v2-b costs
  // 4M = 20, the same as a-b plus three dummy leaves.
  const GstpInstance inst(Graph(2, {{0, 1, Cost(5)}}), {{0}, {1}, {0, 1}});
  const ReducedInstance r = transform(inst);
  const SteinerTree through = tree_of(r.stpg.graph(), {{2, 0}, {4, 0}, {4, 1}, {3, 1}});
  const SolveResult best = solve_exact_stpg(r.stpg);
  CHECK(through.total_cost() == best.tree.total_cost());
  CHECK_THROWS_AS(extract(r, through), NonLeafDummyError);
  for (VertexId d : r.dummy_of_group) CHECK(best.tree.degree(r.stpg.graph(), d) == 1);
  CHECK(extract(r, best.tree).total_cost() == Cost(5));
}

TEST_CASE("singleton-group view of a Steiner instance") {
  const StpgInstance s(triangle(), {0, 2});
  const GstpInstance g = as_group_instance(s);
  REQUIRE(g.group_count() == 2);
  CHECK(g.groups()[0] == std::vector<VertexId>{0});
  CHECK(g.groups()[1] == std::vector<VertexId>{2});
}
