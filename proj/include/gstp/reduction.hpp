#pragma once

#include <vector>

#include "gstp/instance.hpp"

namespace gstp {

/// A group Steiner instance rewritten as a plain Steiner instance: one new
/// terminal per group, joined to every member of its group by an edge of cost
/// M, where M is the total edge cost of the original graph.
///
/// Original vertices and edges keep their ids. Dummy vertex i (for group i)
/// has id original_vertex_count + i; dummy edges follow the original edges,
/// grouped by group and in member order within a group.
struct ReducedInstance {
  StpgInstance stpg;
  Cost m_value;
  std::vector<VertexId> dummy_of_group;
  std::vector<EdgeId> dummy_edge_indices;
  std::size_t original_vertex_count = 0;
  std::size_t original_edge_count = 0;

  std::size_t group_count() const noexcept { return dummy_of_group.size(); }
  bool is_dummy(VertexId v) const noexcept { return v >= original_vertex_count; }

  /// m_value * group_count(), checked.
  Cost dummy_cost() const { return m_value * group_count(); }
};

/// Throws ErrorKind::invalid_argument for an edgeless graph (M would be 0 and
/// the dummy edges would not have positive cost) and ErrorKind::overflow
/// when M or M * (|groups| + 1) does not fit in a Cost.
ReducedInstance transform(const GstpInstance& instance);

/// Strips the dummy vertices and edges from a Steiner tree of the reduced
/// instance. Every dummy must be a leaf of `tree`; otherwise
/// NonLeafDummyError names the first offending dummy. The result lives in the
/// original graph and costs tree.total_cost() - M * |groups|.
SteinerTree extract(const ReducedInstance& reduced, const SteinerTree& tree);

/// Builds a Steiner tree of the reduced instance from a group Steiner tree of
/// the original one by hanging each dummy off the first member of its group
/// (in group order) that the tree contains.
SteinerTree attach_dummy_leaves(const ReducedInstance& reduced, const GstpInstance& original,
                                const SteinerTree& group_tree);

/// Singleton-group view of a Steiner instance, one group per terminal.
GstpInstance as_group_instance(const StpgInstance& instance);

}  // namespace gstp
