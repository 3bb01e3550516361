#include <doctest.h>

#include "gstp/verification.hpp"
#include "support.hpp"

using namespace gstp;
using gstp::testing::path3;
using gstp::testing::triangle;

namespace {

ErrorKind parse_kind(std::string_view text, bool groups, std::size_t* line = nullptr) {
  try {
    if (groups) {
      (void)parse_gstp(text);
    } else {
      (void)parse_stpg(text);
    }
  } catch (const ParseError& e) {
    if (line) *line = e.line();
    return e.kind();
  }
  FAIL("parse succeeded");
  return ErrorKind::syntax;
}

const char* const two_node_stp =
    "SECTION Graph\n"
    "Nodes 2\n"
    "Edges 1\n"
    "E 1 2 5\n"
    "END\n"
    "SECTION Terminals\n"
    "Terminals 1\n"
    "T 1\n"
    "END\n"
    "EOF\n";

const char* const triangle_gstp =
    "SECTION Graph\n"
    "Nodes 3\n"
    "Edges 3\n"
    "E 1 2 1\n"
    "E 2 3 2\n"
    "E 1 3 4\n"
    "END\n"
    "SECTION Groups\n"
    "Groups 2\n"
    "G 1\n"
    "G 2 3\n"
    "END\n"
    "EOF\n";

std::string with_graph(const std::string& tail) {
  return "SECTION Graph\nNodes 3\nEdges 2\nE 1 2 1\nE 2 3 2\nEND\n" + tail;
}

}  // namespace

TEST_CASE("stpg feasibility") {
  const StpgInstance single(path3(), {0});
  CHECK(stpg_is_feasible(single, SteinerTree::single_vertex(path3(), 0)));

  const StpgInstance ends(path3(), {0, 2});
  CHECK(stpg_is_feasible(ends, SteinerTree::from_edges(path3(), {0, 1})));
  CHECK_FALSE(stpg_is_feasible(ends, SteinerTree::from_edges(path3(), {0})));

  const Graph bigger(5, {{0, 1, Cost(1)}, {1, 2, Cost(1)}, {2, 3, Cost(1)}, {3, 4, Cost(1)}});
  CHECK_THROWS_AS(stpg_is_feasible(ends, SteinerTree::from_edges(bigger, {2, 3})), Error);
}

TEST_CASE("gstp feasibility") {
  const Graph g = triangle();
  const GstpInstance two(g, {{0}, {1, 2}});
  CHECK(gstp_is_feasible(two, SteinerTree::from_edges(g, {0})));
  CHECK_FALSE(gstp_is_feasible(two, SteinerTree::single_vertex(g, 0)));

  const GstpInstance shared(g, {{0}, {0}});
  CHECK(gstp_is_feasible(shared, SteinerTree::single_vertex(g, 0)));
}

TEST_CASE("instance invariants") {
  CHECK_THROWS_AS(StpgInstance(path3(), {}), Error);
  CHECK_THROWS_AS(StpgInstance(path3(), {0, 0}), Error);
  CHECK_THROWS_AS(StpgInstance(path3(), {3}), Error);
  CHECK_THROWS_AS(StpgInstance(Graph(2, {}), {0}), Error);
  CHECK_THROWS_AS(GstpInstance(path3(), {}), Error);
  CHECK_THROWS_AS(GstpInstance(path3(), {{}}), Error);
  CHECK_THROWS_AS(GstpInstance(path3(), {{1, 1}}), Error);
  // Repeated identical groups are kept.
  CHECK(GstpInstance(path3(), {{0}, {0}}).group_count() == 2);
  // Terminals are held sorted.
  const StpgInstance inst(path3(), {2, 0});
  CHECK(inst.terminals()[0] == 0);
}

TEST_CASE("parse minimal stpg file") {
  const StpgInstance inst = parse_stpg(two_node_stp);
  CHECK(inst.graph().vertex_count() == 2);
  CHECK(inst.graph().edge_count() == 1);
  CHECK(inst.terminals().size() == 1);
  CHECK(inst.graph().edge(0).cost == Cost(5));
  CHECK(render_stpg(inst) == two_node_stp);
}

TEST_CASE("parser ignores comments and blank lines") {
  const std::string text =
      "# header\n\nSECTION Graph\nNodes 2   # two\nEdges 1\n\n  E 1 2 5\nEND\n"
      "SECTION Terminals\nTerminals 1\nT 1\nEND\nEOF\n";
  CHECK(parse_stpg(text) == parse_stpg(two_node_stp));
}

TEST_CASE("parse gstp groups") {
  const GstpInstance inst = parse_gstp(triangle_gstp);
  REQUIRE(inst.group_count() == 2);
  CHECK(inst.groups()[1] == std::vector<VertexId>{1, 2});
  CHECK(render_gstp(inst) == triangle_gstp);

  const auto one = parse_gstp(with_graph("SECTION Groups\nGroups 1\nG 1 2\nEND\nEOF\n"));
  CHECK(one.groups()[0] == std::vector<VertexId>{0, 1});
}

TEST_CASE("parse errors are categorized") {
  std::size_t line = 0;
  const std::string zero_cost = "SECTION Graph\nNodes 2\nEdges 1\nE 1 2 0\nEND\n"
                                "SECTION Terminals\nTerminals 1\nT 1\nEND\nEOF\n";
  CHECK(parse_kind(zero_cost, false, &line) == ErrorKind::non_positive_cost);
  CHECK(line == 4);
  const std::string negative = "SECTION Graph\nNodes 2\nEdges 1\nE 1 2 -3\nEND\n"
                               "SECTION Terminals\nTerminals 1\nT 1\nEND\nEOF\n";
  CHECK(parse_kind(negative, false) == ErrorKind::non_positive_cost);

  CHECK(parse_kind(with_graph("SECTION Terminals\nTerminals 1\nT 4\nEND\nEOF\n"), false, &line) ==
        ErrorKind::unknown_vertex);
  CHECK(line == 9);
  CHECK(parse_kind(with_graph("SECTION Terminals\nTerminals 1\nT 0\nEND\nEOF\n"), false) ==
        ErrorKind::unknown_vertex);

  const std::string disconnected = "SECTION Graph\nNodes 3\nEdges 1\nE 1 2 1\nEND\n"
                                   "SECTION Terminals\nTerminals 1\nT 1\nEND\nEOF\n";
  CHECK(parse_kind(disconnected, false) == ErrorKind::disconnected);

  CHECK(parse_kind(with_graph("SECTION Terminals\nTerminals 1\nX 1\nEND\nEOF\n"), false, &line) ==
        ErrorKind::syntax);
  CHECK(line == 9);
  CHECK(parse_kind(with_graph("SECTION Terminals\nTerminals 2\nT 1\nEND\nEOF\n"), false) == ErrorKind::syntax);
  CHECK(parse_kind(with_graph("SECTION Terminals\nTerminals 1\nT 1\nEND\n"), false) == ErrorKind::syntax);
  CHECK(parse_kind(with_graph("SECTION Terminals\nTerminals 1\nT 1\nEND\nEOF\nmore\n"), false) ==
        ErrorKind::syntax);
  CHECK(parse_kind("SECTION Graph\nNodes two\n", false) == ErrorKind::syntax);
  CHECK(parse_kind("SECTION Graph\nNodes 2\nEdges 1\nE 1 1 3\nEND\n", false) == ErrorKind::invalid_structure);
  CHECK(parse_kind("SECTION Graph\nNodes 2\nEdges 2\nE 1 2 3\nE 2 1 3\nEND\n", false) ==
        ErrorKind::invalid_structure);
  CHECK(parse_kind(with_graph("SECTION Terminals\nTerminals 2\nT 1\nT 1\nEND\nEOF\n"), false) ==
        ErrorKind::invalid_structure);
}

TEST_CASE("gstp parse errors") {
  std::size_t line = 0;
  CHECK(parse_kind(with_graph("SECTION Groups\nGroups 1\nG\nEND\nEOF\n"), true, &line) ==
        ErrorKind::invalid_structure);
  CHECK(line == 9);
  CHECK(parse_kind(with_graph("SECTION Groups\nGroups 1\nG 2 2\nEND\nEOF\n"), true) ==
        ErrorKind::invalid_structure);
  CHECK(parse_kind(with_graph("SECTION Groups\nGroups 0\nEND\nEOF\n"), true) == ErrorKind::invalid_structure);
  CHECK(parse_kind(with_graph("SECTION Groups\nGroups 1\nG 9\nEND\nEOF\n"), true) == ErrorKind::unknown_vertex);
  // A .stp file is not a .gstp file.
  CHECK(parse_kind(two_node_stp, true) == ErrorKind::syntax);
}

TEST_CASE("render then parse is the identity on random instances") {
  GenParams params;
  params.vertices = {2, 30};
  params.group_count = {2, 8};
  params.group_size = {1, 6};
  params.costs = {1, 1000000};
  for (std::uint64_t i = 0; i < 50; ++i) {
    const GstpInstance g = generate_instance(params, i);
    CHECK(parse_gstp(render_gstp(g)) == g);
    const StpgInstance s = generate_stpg_instance(params, {1, 10}, i);
    CHECK(parse_stpg(render_stpg(s)) == s);
  }
}

TEST_CASE("a tree over every vertex is group-feasible") {
  GenParams params;
  params.vertices = {2, 12};
  for (std::uint64_t i = 0; i < 50; ++i) {
    const GstpInstance g = generate_instance(params, i);
    std::vector<VertexId> all(g.graph().vertex_count());
    std::iota(all.begin(), all.end(), VertexId{0});
    const auto spanning = minimum_spanning_tree(g.graph(), all);
    REQUIRE(spanning);
    CHECK(gstp_is_feasible(g, *spanning));
  }
}
