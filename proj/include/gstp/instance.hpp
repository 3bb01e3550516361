#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gstp/graph.hpp"

namespace gstp {

/// Steiner tree problem in graphs: connected graph plus compulsory vertices.
class StpgInstance {
 public:
  /// Terminals are stored sorted; duplicates, out-of-range ids and an empty
  /// set are rejected, as is a disconnected graph.
  StpgInstance(Graph graph, std::vector<VertexId> terminals);

  const Graph& graph() const noexcept { return graph_; }
  std::span<const VertexId> terminals() const noexcept { return terminals_; }

  friend bool operator==(const StpgInstance&, const StpgInstance&) = default;

 private:
  Graph graph_;
  std::vector<VertexId> terminals_;
};

/// Group Steiner tree problem: connected graph plus an ordered list of
/// vertex groups. Groups may overlap or repeat; member order is kept.
class GstpInstance {
 public:
  using Group = std::vector<VertexId>;

  GstpInstance(Graph graph, std::vector<Group> groups);

  const Graph& graph() const noexcept { return graph_; }
  std::span<const Group> groups() const noexcept { return groups_; }
  std::size_t group_count() const noexcept { return groups_.size(); }

  friend bool operator==(const GstpInstance&, const GstpInstance&) = default;

 private:
  Graph graph_;
  std::vector<Group> groups_;
};

bool stpg_is_feasible(const StpgInstance& instance, const SteinerTree& tree);
bool gstp_is_feasible(const GstpInstance& instance, const SteinerTree& tree);

// Text formats. Vertices are numbered from 1 in files and from 0 in memory.
// Parse failures raise ParseError with the offending line.
StpgInstance parse_stpg(std::string_view text);
GstpInstance parse_gstp(std::string_view text);
std::string render_stpg(const StpgInstance& instance);
std::string render_gstp(const GstpInstance& instance);

}  // namespace gstp
