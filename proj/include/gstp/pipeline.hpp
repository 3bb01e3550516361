#pragma once

#include <optional>

#include "gstp/reduction.hpp"
#include "gstp/solvers.hpp"

namespace gstp {

struct GroupSolveResult {
  SteinerTree tree;      // in the original graph
  SolveMethod method;    // Steiner solver used on the reduced instance
  bool short_circuit;    // single group or single vertex: no reduction ran
  Cost smt_cost;         // cost of the reduced-instance tree (0 when short-circuited)
  Cost m_value;          // 0 when short-circuited
};

/// Solves a group Steiner instance by reduction: transform, run `method` on
/// the Steiner instance, extract. A lone group (or a one-vertex graph) is
/// answered directly with the first member of the first group at cost 0.
/// `method` must be exact_dp or heuristic_sph.
GroupSolveResult solve_gstp_via_reduction(const GstpInstance& instance,
                                          SolveMethod method = SolveMethod::exact_dp,
                                          std::size_t max_terminals = default_max_terminals);

}  // namespace gstp
