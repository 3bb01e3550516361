#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <optional>
#include <sstream>
#include <thread>

#include "gstp/reduction.hpp"
#include "gstp/solvers.hpp"
#include "gstp/verification.hpp"

namespace gstp {

TheoremRecord verify_theorem(const GstpInstance& instance) {
  if (instance.group_count() < 2) {
    throw Error(ErrorKind::invalid_argument, "theorem check needs at least 2 groups");
  }
  TheoremRecord record;
  record.group_count = instance.group_count();

  const SolveResult oracle = brute_force_gsmt(instance);
  const ReducedInstance reduced = transform(instance);
  const SolveResult exact = solve_exact_stpg(reduced.stpg);
  const Graph& reduced_graph = reduced.stpg.graph();
  const Cost dummy_cost = reduced.dummy_cost();

  record.gsmt_cost = oracle.tree.total_cost();
  record.smt_cost = exact.tree.total_cost();
  record.m_value = reduced.m_value;
  record.identity_holds = record.gsmt_cost + dummy_cost == record.smt_cost;

  record.all_dummies_leaves =
      std::all_of(reduced.dummy_of_group.begin(), reduced.dummy_of_group.end(),
                  [&](VertexId d) { return exact.tree.degree(reduced_graph, d) == 1; });

  try {
    const SteinerTree extracted = extract(reduced, exact.tree);
    record.extraction_feasible = gstp_is_feasible(instance, extracted) &&
                                 extracted.total_cost() + dummy_cost == record.smt_cost;
  } catch (const NonLeafDummyError&) {
    record.extraction_feasible = false;
  }

  const SteinerTree augmented = attach_dummy_leaves(reduced, instance, oracle.tree);
  record.sandwich_holds = stpg_is_feasible(reduced.stpg, augmented) &&
                          augmented.total_cost() == record.gsmt_cost + dummy_cost &&
                          record.smt_cost <= augmented.total_cost();

  const SolveResult heuristic = solve_heuristic_stpg(reduced.stpg);
  const Cost lower = record.gsmt_cost + dummy_cost;
  record.heuristic_sound =
      stpg_is_feasible(reduced.stpg, heuristic.tree) && heuristic.tree.total_cost() >= lower;
  record.heuristic_gap = heuristic.tree.total_cost() >= lower ? heuristic.tree.total_cost() - lower : Cost{};
  return record;
}

std::size_t TheoremReport::count_identity() const {
  return std::count_if(records.begin(), records.end(), [](const auto& r) { return r.identity_holds; });
}
std::size_t TheoremReport::count_leaves() const {
  return std::count_if(records.begin(), records.end(), [](const auto& r) { return r.all_dummies_leaves; });
}
std::size_t TheoremReport::count_extraction() const {
  return std::count_if(records.begin(), records.end(), [](const auto& r) { return r.extraction_feasible; });
}
std::size_t TheoremReport::count_sandwich() const {
  return std::count_if(records.begin(), records.end(), [](const auto& r) { return r.sandwich_holds; });
}
std::size_t TheoremReport::count_heuristic() const {
  return std::count_if(records.begin(), records.end(), [](const auto& r) { return r.heuristic_sound; });
}

bool TheoremReport::passed() const {
  return count_identity() == records.size() && count_extraction() == records.size();
}

CampaignError::CampaignError(const Error& cause, std::uint64_t index, std::uint64_t seed)
    : Error(cause.kind(), "instance " + std::to_string(index) + " (seed " + std::to_string(seed) +
                              "): " + cause.what()),
      index_(index),
      seed_(seed) {}

TheoremReport run_campaign(const GenParams& params, std::size_t count, unsigned workers) {
  params.validate();
  if (count == 0) throw Error(ErrorKind::invalid_argument, "campaign count must be at least 1");
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));

  std::vector<std::optional<TheoremRecord>> slots(count);
  std::vector<std::exception_ptr> failures(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        TheoremRecord r = verify_theorem(generate_instance(params, i));
        r.index = i;
        slots[i] = r;
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }

  TheoremReport report{params, {}};
  for (std::size_t i = 0; i < count; ++i) {
    if (failures[i]) {
      try {
        std::rethrow_exception(failures[i]);
      } catch (const Error& e) {
        throw CampaignError(e, i, params.seed);
      }
    }
    report.records.push_back(*slots[i]);
  }
  return report;
}

namespace {

std::string format_double(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, end);
}

std::ostream& operator<<(std::ostream& os, const IntRange& r) { return os << r.min << ".." << r.max; }

}  // namespace

std::string render_report(const TheoremReport& report) {
  const GenParams& p = report.params;
  std::ostringstream out;
  out << "H seed=" << p.seed << " count=" << report.records.size() << " vertices=" << p.vertices
      << " edge_density=" << format_double(p.edge_density) << " costs=" << p.costs
      << " groups=" << p.group_count << " group_size=" << p.group_size << '\n';
  for (const TheoremRecord& r : report.records) {
    out << "R index=" << r.index << " gsmt_cost=" << r.gsmt_cost << " smt_cost=" << r.smt_cost
        << " m_value=" << r.m_value << " group_count=" << r.group_count
        << " identity_holds=" << r.identity_holds << " all_dummies_leaves=" << r.all_dummies_leaves
        << " extraction_feasible=" << r.extraction_feasible << " heuristic_gap=" << r.heuristic_gap
        << " sandwich_holds=" << r.sandwich_holds << " heuristic_sound=" << r.heuristic_sound << '\n';
  }
  out << "S records=" << report.records.size() << " identity_holds=" << report.count_identity()
      << " all_dummies_leaves=" << report.count_leaves()
      << " extraction_feasible=" << report.count_extraction()
      << " sandwich_holds=" << report.count_sandwich()
      << " heuristic_sound=" << report.count_heuristic() << '\n';
  return out.str();
}

std::string summarize(const TheoremReport& report) {
  const std::size_t n = report.records.size();
  std::ostringstream out;
  out << "instances:            " << n << " (seed " << report.params.seed << ")\n"
      << "cost identity:        " << report.count_identity() << "/" << n << '\n'
      << "dummies are leaves:   " << report.count_leaves() << "/" << n << '\n'
      << "extraction feasible:  " << report.count_extraction() << "/" << n << '\n'
      << "feasibility sandwich: " << report.count_sandwich() << "/" << n << '\n'
      << "heuristic sound:      " << report.count_heuristic() << "/" << n << '\n'
      << (report.passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace gstp
