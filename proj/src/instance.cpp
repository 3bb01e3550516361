#include "gstp/instance.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <unordered_set>

namespace gstp {

namespace {

void check_vertices(const Graph& graph, std::span<const VertexId> ids, const char* what) {
  for (VertexId v : ids) {
    if (v >= graph.vertex_count()) {
      throw Error(ErrorKind::invalid_argument, std::string(what) + " vertex out of range");
    }
  }
}

bool hits(const SteinerTree& tree, std::span<const VertexId> ids) {
  return std::any_of(ids.begin(), ids.end(), [&](VertexId v) { return tree.contains(v); });
}

void check_tree_ids(const Graph& graph, const SteinerTree& tree) {
  const auto vs = tree.vertices();
  const auto es = tree.edges();
  if (!vs.empty() && vs.back() >= graph.vertex_count()) {
    throw Error(ErrorKind::invalid_argument, "tree references a vertex outside the graph");
  }
  if (!es.empty() && es.back() >= graph.edge_count()) {
    throw Error(ErrorKind::invalid_argument, "tree references an edge outside the graph");
  }
}

}  // namespace

StpgInstance::StpgInstance(Graph graph, std::vector<VertexId> terminals)
    : graph_(std::move(graph)), terminals_(std::move(terminals)) {
  if (terminals_.empty()) {
    throw Error(ErrorKind::invalid_structure, "instance needs at least one terminal");
  }
  check_vertices(graph_, terminals_, "terminal");
  std::sort(terminals_.begin(), terminals_.end());
  if (std::adjacent_find(terminals_.begin(), terminals_.end()) != terminals_.end()) {
    throw Error(ErrorKind::invalid_structure, "terminal listed twice");
  }
  if (!is_connected(graph_)) {
    throw Error(ErrorKind::disconnected, "graph is not connected");
  }
}

GstpInstance::GstpInstance(Graph graph, std::vector<Group> groups)
    : graph_(std::move(graph)), groups_(std::move(groups)) {
  if (groups_.empty()) {
    throw Error(ErrorKind::invalid_structure, "instance needs at least one group");
  }
  for (const Group& g : groups_) {
    if (g.empty()) throw Error(ErrorKind::invalid_structure, "group is empty");
    check_vertices(graph_, g, "group");
    Group sorted = g;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorKind::invalid_structure, "vertex repeated within a group");
    }
  }
  if (!is_connected(graph_)) {
    throw Error(ErrorKind::disconnected, "graph is not connected");
  }
}

bool stpg_is_feasible(const StpgInstance& instance, const SteinerTree& tree) {
  check_tree_ids(instance.graph(), tree);
  return std::all_of(instance.terminals().begin(), instance.terminals().end(),
                     [&](VertexId t) { return tree.contains(t); });
}

bool gstp_is_feasible(const GstpInstance& instance, const SteinerTree& tree) {
  check_tree_ids(instance.graph(), tree);
  return std::all_of(instance.groups().begin(), instance.groups().end(),
                     [&](const GstpInstance::Group& g) { return hits(tree, g); });
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lines_(tokenize(text)) {}

  Graph graph_section() {
    expect_keyword({"SECTION", "Graph"});
    const std::size_t n = expect_count("Nodes");
    if (n == 0) fail(ErrorKind::syntax, "Nodes must be at least 1");
    if (n >= no_vertex) fail(ErrorKind::capacity, "too many nodes");
    const std::size_t m = expect_count("Edges");
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> seen;
    for (std::size_t i = 0; i < m; ++i) {
      const Line& line = next("E line");
      if (line.tokens[0] != "E" || line.tokens.size() != 4) {
        fail(ErrorKind::syntax, "expected 'E <u> <v> <cost>'");
      }
      const VertexId u = vertex(line.tokens[1], n);
      const VertexId v = vertex(line.tokens[2], n);
      const Cost c = cost(line.tokens[3]);
      if (u == v) fail(ErrorKind::invalid_structure, "self-loop");
      const std::uint64_t key = (std::uint64_t{std::min(u, v)} << 32) | std::max(u, v);
      if (!seen.insert(key).second) fail(ErrorKind::invalid_structure, "parallel edge");
      edges.push_back({u, v, c});
    }
    expect_keyword({"END"});
    Graph graph(n, std::move(edges));
    if (!is_connected(graph)) fail(ErrorKind::disconnected, "graph is not connected");
    vertex_count_ = n;
    return graph;
  }

  std::vector<VertexId> terminals_section() {
    expect_keyword({"SECTION", "Terminals"});
    const std::size_t t = expect_count("Terminals");
    if (t == 0) fail(ErrorKind::invalid_structure, "at least one terminal is required");
    std::vector<VertexId> terminals;
    std::unordered_set<VertexId> seen;
    for (std::size_t i = 0; i < t; ++i) {
      const Line& line = next("T line");
      if (line.tokens[0] != "T" || line.tokens.size() != 2) fail(ErrorKind::syntax, "expected 'T <v>'");
      const VertexId v = vertex(line.tokens[1], vertex_count_);
      if (!seen.insert(v).second) fail(ErrorKind::invalid_structure, "terminal listed twice");
      terminals.push_back(v);
    }
    expect_keyword({"END"});
    return terminals;
  }

  std::vector<GstpInstance::Group> groups_section() {
    expect_keyword({"SECTION", "Groups"});
    const std::size_t k = expect_count("Groups");
    if (k == 0) fail(ErrorKind::invalid_structure, "at least one group is required");
    std::vector<GstpInstance::Group> groups;
    for (std::size_t i = 0; i < k; ++i) {
      const Line& line = next("G line");
      if (line.tokens[0] != "G") fail(ErrorKind::syntax, "expected 'G <v1> ... <vj>'");
      if (line.tokens.size() == 1) fail(ErrorKind::invalid_structure, "empty group");
      GstpInstance::Group group;
      std::unordered_set<VertexId> seen;
      for (std::size_t j = 1; j < line.tokens.size(); ++j) {
        const VertexId v = vertex(line.tokens[j], vertex_count_);
        if (!seen.insert(v).second) fail(ErrorKind::invalid_structure, "vertex repeated within a group");
        group.push_back(v);
      }
      groups.push_back(std::move(group));
    }
    expect_keyword({"END"});
    return groups;
  }

  void finish() {
    expect_keyword({"EOF"});
    if (pos_ < lines_.size()) {
      current_ = lines_[pos_].number;
      fail(ErrorKind::syntax, "content after EOF");
    }
  }

 private:
  [[noreturn]] void fail(ErrorKind kind, const std::string& message) const {
    throw ParseError(kind, current_, message);
  }

  const Line& next(const char* expected) {
    if (pos_ >= lines_.size()) {
      fail(ErrorKind::syntax, std::string("unexpected end of input, expected ") + expected);
    }
    const Line& line = lines_[pos_++];
    current_ = line.number;
    return line;
  }

  void expect_keyword(std::initializer_list<std::string_view> words) {
    std::string wanted;
    for (auto w : words) wanted += (wanted.empty() ? "" : " ") + std::string(w);
    const Line& line = next(wanted.c_str());
    if (!std::equal(line.tokens.begin(), line.tokens.end(), words.begin(), words.end())) {
      fail(ErrorKind::syntax, "expected '" + wanted + "'");
    }
  }

  std::size_t expect_count(std::string_view keyword) {
    const Line& line = next(std::string(keyword).c_str());
    if (line.tokens.size() != 2 || line.tokens[0] != keyword) {
      fail(ErrorKind::syntax, "expected '" + std::string(keyword) + " <count>'");
    }
    const auto value = number(line.tokens[1]);
    if (!value) fail(ErrorKind::syntax, "bad count '" + std::string(line.tokens[1]) + "'");
    return static_cast<std::size_t>(*value);
  }

  static std::optional<std::uint64_t> number(std::string_view token) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
    return value;
  }

  static bool is_negative_integer(std::string_view token) {
    return token.size() > 1 && token[0] == '-' && number(token.substr(1)).has_value();
  }

  VertexId vertex(std::string_view token, std::size_t n) const {
    const auto value = number(token);
    if (!value) {
      if (is_negative_integer(token)) fail(ErrorKind::unknown_vertex, "unknown vertex " + std::string(token));
      fail(ErrorKind::syntax, "bad vertex '" + std::string(token) + "'");
    }
    if (*value < 1 || *value > n) fail(ErrorKind::unknown_vertex, "unknown vertex " + std::string(token));
    return static_cast<VertexId>(*value - 1);
  }

  Cost cost(std::string_view token) const {
    if (is_negative_integer(token)) fail(ErrorKind::non_positive_cost, "negative edge cost");
    const auto value = number(token);
    if (!value) fail(ErrorKind::syntax, "bad cost '" + std::string(token) + "'");
    if (*value == 0) fail(ErrorKind::non_positive_cost, "edge cost must be at least 1");
    return Cost(*value);
  }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::size_t current_ = 0;
  std::size_t vertex_count_ = 0;
};

void render_graph(std::ostringstream& out, const Graph& graph) {
  out << "SECTION Graph\n"
      << "Nodes " << graph.vertex_count() << '\n'
      << "Edges " << graph.edge_count() << '\n';
  for (const Edge& e : graph.edges()) {
    out << "E " << e.a + 1 << ' ' << e.b + 1 << ' ' << e.cost << '\n';
  }
  out << "END\n";
}

}  // namespace

StpgInstance parse_stpg(std::string_view text) {
  Parser parser(text);
  Graph graph = parser.graph_section();
  auto terminals = parser.terminals_section();
  parser.finish();
  return StpgInstance(std::move(graph), std::move(terminals));
}

GstpInstance parse_gstp(std::string_view text) {
  Parser parser(text);
  Graph graph = parser.graph_section();
  auto groups = parser.groups_section();
  parser.finish();
  return GstpInstance(std::move(graph), std::move(groups));
}

std::string render_stpg(const StpgInstance& instance) {
  std::ostringstream out;
  render_graph(out, instance.graph());
  out << "SECTION Terminals\n"
      << "Terminals " << instance.terminals().size() << '\n';
  for (VertexId t : instance.terminals()) out << "T " << t + 1 << '\n';
  out << "END\nEOF\n";
  return out.str();
}

std::string render_gstp(const GstpInstance& instance) {
  std::ostringstream out;
  render_graph(out, instance.graph());
  out << "SECTION Groups\n"
      << "Groups " << instance.group_count() << '\n';
  for (const auto& group : instance.groups()) {
    out << 'G';
    for (VertexId v : group) out << ' ' << v + 1;
    out << '\n';
  }
  out << "END\nEOF\n";
  return out.str();
}

}  // namespace gstp
