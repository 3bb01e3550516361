#include "gstp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gstp/pipeline.hpp"
#include "gstp/solvers.hpp"
#include "gstp/verification.hpp"

namespace gstp::cli {

namespace {

namespace fs = std::filesystem;

/// Input problems that map to exit 2 without being library errors.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string temp_path_for(const std::string& path) { return path + ".tmp"; }

void write_temp(const std::string& path, const std::string& content) {
  std::ofstream out(temp_path_for(path), std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path);
  out << content;
  out.close();
  if (!out) {
    std::error_code ignored;
    fs::remove(temp_path_for(path), ignored);
    throw InputError("cannot write " + path);
  }
}

void commit(const std::vector<std::pair<std::string, std::string>>& files) {
  for (const auto& [path, content] : files) write_temp(path, content);
  for (const auto& [path, content] : files) fs::rename(temp_path_for(path), path);
}

bool looks_like_gstp(const std::string& path, const std::string& text) {
  const std::string ext = fs::path(path).extension().string();
  if (ext == ".gstp") return true;
  if (ext == ".stp") return false;
  return text.find("SECTION Groups") != std::string::npos;
}

struct GenFlags {
  std::uint64_t min_nodes = 2;
  std::uint64_t max_nodes = 10;
  double density = 0.3;
  std::uint64_t min_cost = 1;
  std::uint64_t max_cost = 20;
  std::uint64_t min_groups = 2;
  std::uint64_t max_groups = 4;
  std::uint64_t min_group_size = 1;
  std::uint64_t max_group_size = 3;
  std::uint64_t seed = default_seed;

  void attach(CLI::App& app) {
    app.add_option("--min-nodes", min_nodes, "Minimum vertex count")->capture_default_str();
    app.add_option("--max-nodes", max_nodes, "Maximum vertex count")->capture_default_str();
    app.add_option("--density", density, "Probability of each non-backbone edge")->capture_default_str();
    app.add_option("--min-cost", min_cost, "Minimum edge cost")->capture_default_str();
    app.add_option("--max-cost", max_cost, "Maximum edge cost")->capture_default_str();
    app.add_option("--min-groups", min_groups, "Minimum group count")->capture_default_str();
    app.add_option("--max-groups", max_groups, "Maximum group count")->capture_default_str();
    app.add_option("--min-group-size", min_group_size, "Minimum group size")->capture_default_str();
    app.add_option("--max-group-size", max_group_size, "Maximum group size")->capture_default_str();
    app.add_option("--seed", seed, "Random seed")->capture_default_str();
  }

  GenParams params() const {
    GenParams p;
    p.vertices = {min_nodes, max_nodes};
    p.edge_density = density;
    p.costs = {min_cost, max_cost};
    p.group_count = {min_groups, max_groups};
    p.group_size = {min_group_size, max_group_size};
    p.seed = seed;
    p.validate();
    return p;
  }
};

// Edge lines "E u v cost" (1-based, u < v) sorted by (u, v).
void print_tree(std::ostream& out, const Graph& graph, const SteinerTree& tree) {
  out << "cost " << tree.total_cost() << '\n' << "vertices";
  for (VertexId v : tree.vertices()) out << ' ' << v + 1;
  out << '\n';
  std::vector<Edge> edges;
  for (EdgeId id : tree.edges()) {
    Edge e = graph.edge(id);
    if (e.a > e.b) std::swap(e.a, e.b);
    edges.push_back(e);
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& x, const Edge& y) { return std::pair(x.a, x.b) < std::pair(y.a, y.b); });
  for (const Edge& e : edges) out << "E " << e.a + 1 << ' ' << e.b + 1 << ' ' << e.cost << '\n';
}

enum class Mode { exact, heuristic, oracle };

SolveResult solve_stpg(const StpgInstance& instance, Mode mode, std::size_t max_terminals) {
  switch (mode) {
    case Mode::exact: return solve_exact_stpg(instance, max_terminals);
    case Mode::heuristic: return solve_heuristic_stpg(instance);
    case Mode::oracle: return brute_force_smt(instance);
  }
  throw Error(ErrorKind::invalid_argument, "unknown mode");
}

void solve_group_instance(const GstpInstance& instance, Mode mode, std::size_t max_terminals,
                          std::ostream& out) {
  const Graph& graph = instance.graph();
  if (mode == Mode::oracle && instance.group_count() > 1) {
    const SolveResult result = brute_force_gsmt(instance);
    out << "method " << to_string(result.method) << '\n';
    print_tree(out, graph, result.tree);
    return;
  }
  const GroupSolveResult result = solve_gstp_via_reduction(
      instance, mode == Mode::heuristic ? SolveMethod::heuristic_sph : SolveMethod::exact_dp, max_terminals);
  if (result.short_circuit) {
    out << "method single-group\n";
    print_tree(out, graph, result.tree);
    return;
  }
  out << "method " << to_string(result.method) << '\n';
  print_tree(out, graph, result.tree);
  out << "identity " << result.smt_cost << " - " << result.m_value << '*' << instance.group_count()
      << " = " << result.tree.total_cost() << '\n';
}

std::string render_map(const ReducedInstance& reduced) {
  std::ostringstream out;
  out << "M " << reduced.m_value << '\n';
  for (std::size_t i = 0; i < reduced.group_count(); ++i) {
    out << "DUMMY " << i + 1 << ' ' << reduced.dummy_of_group[i] + 1 << '\n';
  }
  return out.str();
}

int exit_code_for(const Error& e, bool capacity_is_solver) {
  switch (e.kind()) {
    case ErrorKind::overflow: return exit_abort;
    case ErrorKind::capacity: return capacity_is_solver ? exit_capacity : exit_abort;
    case ErrorKind::non_leaf_dummy: return exit_abort;
    default: return exit_input;
  }
}

}  // namespace

void write_file_atomically(const std::string& path, const std::string& content) {
  commit({{path, content}});
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Group Steiner tree to Steiner tree reduction toolkit", "gstp"};
  app.require_subcommand(1);

  std::string input, output, map_path;
  std::string mode_name = "exact";
  std::size_t max_terminals = default_max_terminals;
  std::size_t count = 200;
  std::uint64_t index = 0;
  unsigned workers = 0;
  GenFlags verify_flags, gen_flags;

  auto* transform_cmd = app.add_subcommand("transform", "Rewrite a .gstp instance as a .stp instance");
  transform_cmd->add_option("-i,--input", input, "Input .gstp file")->required();
  transform_cmd->add_option("-o,--output", output, "Output .stp file")->required();
  transform_cmd->add_option("--map", map_path, "Sidecar map file (default: <output>.map)");

  auto* solve_cmd = app.add_subcommand("solve", "Solve a .stp or .gstp instance");
  solve_cmd->add_option("-i,--input", input, "Input file")->required();
  solve_cmd->add_option("--mode", mode_name, "Solver")
      ->check(CLI::IsMember({"exact", "heuristic", "oracle"}))
      ->capture_default_str();
  solve_cmd->add_option("--max-terminals", max_terminals, "Exact solver terminal limit")
      ->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "Check the reduction on random instances");
  verify_cmd->add_option("--count", count, "Number of instances")->capture_default_str();
  verify_cmd->add_option("-o,--output", output, "Report file (default: standard output)");
  verify_cmd->add_option("--workers", workers, "Worker threads (0 = all cores)");
  verify_flags.attach(*verify_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "Write one random .gstp instance");
  gen_cmd->add_option("-o,--output", output, "Output .gstp file")->required();
  gen_cmd->add_option("--index", index, "Instance index within the seed's stream")->capture_default_str();
  gen_flags.attach(*gen_cmd);

  std::vector<std::string> argv_rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(argv_rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input;
  }

  const bool solving = solve_cmd->parsed();
  try {
    if (transform_cmd->parsed()) {
      const GstpInstance instance = parse_gstp(read_file(input));
      const ReducedInstance reduced = transform(instance);
      commit({{output, render_stpg(reduced.stpg)},
              {map_path.empty() ? output + ".map" : map_path, render_map(reduced)}});
      return exit_ok;
    }
    if (solving) {
      const Mode mode = mode_name == "heuristic" ? Mode::heuristic
                        : mode_name == "oracle"  ? Mode::oracle
                                                 : Mode::exact;
      const std::string text = read_file(input);
      if (looks_like_gstp(input, text)) {
        solve_group_instance(parse_gstp(text), mode, max_terminals, out);
      } else {
        const StpgInstance instance = parse_stpg(text);
        const SolveResult result = solve_stpg(instance, mode, max_terminals);
        out << "method " << to_string(result.method) << '\n';
        print_tree(out, instance.graph(), result.tree);
      }
      return exit_ok;
    }
    if (verify_cmd->parsed()) {
      const GenParams params = verify_flags.params();
      if (params.vertices.max > oracle_max_vertices) {
        throw Error(ErrorKind::invalid_argument,
                    "--max-nodes must be at most " + std::to_string(oracle_max_vertices));
      }
      if (params.group_count.max > default_max_terminals) {
        throw Error(ErrorKind::invalid_argument,
                    "--max-groups must be at most " + std::to_string(default_max_terminals));
      }
      if (count == 0) throw Error(ErrorKind::invalid_argument, "--count must be at least 1");
      TheoremReport report;
      try {
        report = run_campaign(params, count, workers);
      } catch (const CampaignError& e) {
        err << "verify aborted at instance " << e.index() << "; replay with --seed " << e.seed()
            << ": " << e.what() << '\n';
        return exit_abort;
      }
      const std::string text = render_report(report);
      if (output.empty()) {
        out << text;
      } else {
        commit({{output, text}});
      }
      err << summarize(report);
      return report.passed() ? exit_ok : exit_abort;
    }
    if (gen_cmd->parsed()) {
      const GenParams params = gen_flags.params();
      commit({{output, render_gstp(generate_instance(params, index))}});
      return exit_ok;
    }
  } catch (const ParseError& e) {
    err << input << ": " << e.what() << '\n';
    return exit_input;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (solving && e.kind() == ErrorKind::capacity) {
      err << "hint: use --mode heuristic for instances beyond the exact solver's limit\n";
    }
    return exit_code_for(e, solving);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  }
  return exit_input;
}

}  // namespace gstp::cli
