#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gstp/instance.hpp"

namespace gstp {

struct IntRange {
  std::uint64_t min;
  std::uint64_t max;

  friend bool operator==(const IntRange&, const IntRange&) = default;
};

inline constexpr std::uint64_t default_seed = 1;

/// Random instance model: a uniformly shuffled spanning tree as backbone,
/// each remaining vertex pair added with probability edge_density, costs
/// uniform in `costs`, and every group sampled without replacement.
struct GenParams {
  IntRange vertices{2, 10};
  double edge_density = 0.3;
  IntRange costs{1, 20};
  IntRange group_count{2, 4};
  IntRange group_size{1, 3};
  std::uint64_t seed = default_seed;

  /// Throws ErrorKind::invalid_argument on empty intervals, a cost minimum
  /// of 0, fewer than two groups, a density outside [0, 1], a group size
  /// minimum of 0 or above the vertex minimum, or a vertex minimum of 0.
  void validate() const;

  friend bool operator==(const GenParams&, const GenParams&) = default;
};

/// Deterministic generator for one instance index. The engine is
/// std::mt19937_64 (its output sequence is fixed by the C++ standard) seeded
/// with splitmix64(seed ^ (0x9E3779B97F4A7C15 * (index + 1))). Bounded
/// integers use rejection sampling and probabilities compare the top 53 bits,
/// so the stream does not depend on the standard library's distributions.
class InstanceRng {
 public:
  InstanceRng(std::uint64_t seed, std::uint64_t index);

  /// Uniform in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  bool bernoulli(double p);

 private:
  std::mt19937_64 engine_;
};

GstpInstance generate_instance(const GenParams& params, std::uint64_t index);

/// Same graph model; the terminal count is drawn from `terminal_count`
/// (clamped to the vertex count) and terminals are sampled without replacement.
StpgInstance generate_stpg_instance(const GenParams& params, IntRange terminal_count,
                                    std::uint64_t index);

struct TheoremRecord {
  std::uint64_t index = 0;
  Cost gsmt_cost;
  Cost smt_cost;
  Cost m_value;
  std::uint64_t group_count = 0;
  bool identity_holds = false;       // gsmt_cost + M * |groups| == smt_cost
  bool all_dummies_leaves = false;   // every dummy has degree 1 in the exact tree
  bool extraction_feasible = false;  // extract succeeded, hits every group, costs smt - M * |groups|
  Cost heuristic_gap;                // heuristic cost - M * |groups| - gsmt_cost (0 if negative)
  bool sandwich_holds = false;       // leaf-augmented oracle tree is feasible, costs gsmt + M * |groups| >= smt
  bool heuristic_sound = false;      // heuristic tree feasible and heuristic - M * |groups| >= gsmt

  friend bool operator==(const TheoremRecord&, const TheoremRecord&) = default;
};

/// Runs the oracle, the reduction + exact solver + extraction, and the
/// heuristic on one instance and records what it observed. Needs at least two
/// groups and at most oracle_max_vertices vertices.
TheoremRecord verify_theorem(const GstpInstance& instance);

struct TheoremReport {
  GenParams params;
  std::vector<TheoremRecord> records;  // by instance index

  std::size_t count_identity() const;
  std::size_t count_leaves() const;
  std::size_t count_extraction() const;
  std::size_t count_sandwich() const;
  std::size_t count_heuristic() const;

  /// Every record has identity_holds and extraction_feasible.
  bool passed() const;
};

/// Raised when an instance of a campaign fails with a library error. Carries
/// the failing index and the campaign seed for replay.
class CampaignError : public Error {
 public:
  CampaignError(const Error& cause, std::uint64_t index, std::uint64_t seed);

  std::uint64_t index() const noexcept { return index_; }
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t index_;
  std::uint64_t seed_;
};

/// Verifies instances 0..count-1. `workers` == 0 picks the hardware
/// concurrency; the report does not depend on it.
TheoremReport run_campaign(const GenParams& params, std::size_t count, unsigned workers = 0);

/// Line format:
///   H seed=<s> count=<n> vertices=<a>..<b> edge_density=<p> costs=<a>..<b>
///     groups=<a>..<b> group_size=<a>..<b>
///   R index=<i> gsmt_cost=.. smt_cost=.. m_value=.. group_count=..
///     identity_holds=0|1 all_dummies_leaves=0|1 extraction_feasible=0|1
///     heuristic_gap=.. sandwich_holds=0|1 heuristic_sound=0|1
///   S records=<n> identity_holds=<n> all_dummies_leaves=<n>
///     extraction_feasible=<n> sandwich_holds=<n> heuristic_sound=<n>
/// (each is a single line).
std::string render_report(const TheoremReport& report);

/// Short multi-line summary for terminals.
std::string summarize(const TheoremReport& report);

}  // namespace gstp
