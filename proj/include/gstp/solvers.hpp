#pragma once

#include <cstddef>
#include <string_view>

#include "gstp/instance.hpp"

namespace gstp {

enum class SolveMethod { exact_dp, heuristic_sph, oracle_stpg, oracle_gstp };

std::string_view to_string(SolveMethod method) noexcept;

struct SolveResult {
  SteinerTree tree;
  bool optimal;
  SolveMethod method;
};

inline constexpr std::size_t default_max_terminals = 14;
inline constexpr std::size_t oracle_max_vertices = 15;

/// Dreyfus-Wagner over terminal subsets. Among all minimum-cost trees the
/// one whose sorted edge-id sequence is lexicographically smallest is
/// returned, so the output is a pure function of the instance.
///
/// Throws ErrorKind::capacity when the instance has more than
/// `max_terminals` terminals.
SolveResult solve_exact_stpg(const StpgInstance& instance,
                             std::size_t max_terminals = default_max_terminals);

/// Shortest-path heuristic: start from the lowest terminal and repeatedly
/// connect the nearest unconnected terminal (lowest id on ties) along a
/// shortest path.
SolveResult solve_heuristic_stpg(const StpgInstance& instance);

// Exhaustive oracles: minimum over vertex subsets S of the MST cost of the
// subgraph induced by S, subsets visited in increasing bitmask order. Both
// refuse graphs with more than oracle_max_vertices vertices.
SolveResult brute_force_smt(const StpgInstance& instance);
SolveResult brute_force_gsmt(const GstpInstance& instance);

}  // namespace gstp
