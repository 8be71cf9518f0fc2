#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "maxkcut/closed_form.hpp"
#include "maxkcut/graph.hpp"
#include "maxkcut/io.hpp"
#include "maxkcut/rounding.hpp"
#include "maxkcut/sdp.hpp"
#include "verify.hpp"

namespace maxkcut::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunConfig {
  std::string graph_path;
  std::string solution_path;
  std::string gram_path;
  int k = 3;
  std::vector<int> k_list;
  std::string scheme = "disc";
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::size_t rank = 0;
  std::size_t max_iterations = 100000;
  double relative_tolerance = 1e-7;
  double feasibility_tolerance = 1e-6;
  double gradient_tolerance = 1e-5;
  std::string format = "csv";
  std::string out_dir;
  bool json_output = false;
  bool refs = false;
  std::size_t curve_points = 0;
  std::size_t mc_samples = 0;
  std::vector<std::string> checks;
  std::optional<double> r;
  std::optional<double> delta;
  std::size_t samples = 1000000;
};

// Usage and I/O problems exit with code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

fs::path output_dir(const RunConfig& c) {
  fs::path dir = c.out_dir.empty() ? fs::path(".") : fs::path(c.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw UsageError("cannot create output directory '" + dir.string() + "': " + ec.message());
  return dir;
}

SolverOptions solver_options(const RunConfig& c) {
  SolverOptions o;
  o.max_iterations = c.max_iterations;
  o.relative_tolerance = c.relative_tolerance;
  o.feasibility_tolerance = c.feasibility_tolerance;
  o.gradient_tolerance = c.gradient_tolerance;
  return o;
}

Scheme scheme_or_throw(const std::string& name) {
  const auto s = parse_scheme(name);
  if (!s) throw UsageError("unknown scheme '" + name + "' (expected uniform, fj, disc or simplex)");
  return *s;
}

void print_solution_summary(const SdpSolution& s, const RunConfig& c, std::ostream& out) {
  if (c.json_output) {
    out << json{{"objective", s.objective},
                {"max_norm_violation", s.max_norm_violation},
                {"max_dot_violation", s.max_dot_violation},
                {"iterations", s.iterations},
                {"converged", s.converged},
                {"seed", s.seed}}
               .dump()
        << '\n';
    return;
  }
  out << std::setprecision(10) << "objective " << s.objective << '\n'
      << "max norm violation " << s.max_norm_violation << '\n'
      << "max edge dot violation " << s.max_dot_violation << '\n'
      << "iterations " << s.iterations << (s.converged ? " (converged)" : " (not converged)") << '\n'
      << "seed " << s.seed << '\n';
}

SdpSolution solve_graph(const WeightedGraph& g, const RunConfig& c) {
  SdpProblem problem{g, c.k, c.rank, solver_options(c)};
  return solve(problem, c.seed);
}

int cmd_solve(const RunConfig& c, std::ostream& out) {
  const WeightedGraph g = read_graph_file(c.graph_path);
  const SdpSolution s = solve_graph(g, c);
  const fs::path path = output_dir(c) / "solution.json";
  write_text_file(path.string(), to_json(s).dump(2) + "\n");
  print_solution_summary(s, c, out);
  if (!c.json_output) out << "wrote " << path.string() << '\n';
  return kExitOk;
}

struct RoundOutcome {
  TrialStatistics stats;
  fs::path partition_path;
  fs::path trials_path;
};

RoundOutcome round_and_write(const WeightedGraph& g, const SdpSolution& s, const RunConfig& c) {
  const Scheme scheme = scheme_or_throw(c.scheme);
  if (c.trials == 0) throw UsageError("--trials must be at least 1");
  RoundOutcome o{run_trials(scheme, g, s, c.k, c.trials, c.seed), {}, {}};
  const fs::path dir = output_dir(c);
  o.partition_path = dir / "partition.json";
  o.trials_path = dir / "trials.csv";
  write_text_file(o.partition_path.string(), to_json(o.stats.best).dump(2) + "\n");
  std::ostringstream csv;
  write_trials_csv(csv, o.stats);
  write_text_file(o.trials_path.string(), csv.str());
  return o;
}

void print_round_summary(const RoundOutcome& o, const RunConfig& c, std::ostream& out) {
  if (c.json_output) {
    out << json{{"scheme", scheme_name(o.stats.scheme)},
                {"k", o.stats.k},
                {"trials", o.stats.trials()},
                {"mean", o.stats.mean()},
                {"stderr", o.stats.standard_error()},
                {"best", o.stats.best.value},
                {"seed", o.stats.seed}}
               .dump()
        << '\n';
    return;
  }
  out << std::setprecision(10) << "scheme " << scheme_name(o.stats.scheme) << ", k " << o.stats.k << ", trials "
      << o.stats.trials() << '\n'
      << "mean " << o.stats.mean() << " +- " << o.stats.standard_error() << '\n'
      << "best " << o.stats.best.value << " (trial " << o.stats.best.trial << ")\n"
      << "seed " << o.stats.seed << '\n'
      << "wrote " << o.partition_path.string() << ", " << o.trials_path.string() << '\n';
}

int cmd_round(const RunConfig& c, std::ostream& out) {
  const WeightedGraph g = read_graph_file(c.graph_path);
  if (c.solution_path.empty() == c.gram_path.empty()) {
    throw UsageError("round needs exactly one of --solution or --gram");
  }
  SdpSolution s;
  if (!c.solution_path.empty()) {
    s = solution_from_json(read_json_file(c.solution_path));
    if (s.k != c.k) {
      throw UsageError("solution was computed for k=" + std::to_string(s.k) + " but --k is " + std::to_string(c.k));
    }
  } else {
    s = load_gram(g, read_gram_file(c.gram_path), c.k);
  }
  if (s.num_vertices() != g.num_vertices()) throw UsageError("solution size does not match the graph");
  print_round_summary(round_and_write(g, s, c), c, out);
  return kExitOk;
}

int cmd_ratio_table(const RunConfig& c, std::ostream& out) {
  for (int k : c.k_list) {
    if (k < 3) {
      throw UsageError("ratio-table covers k >= 3 only; k=" + std::to_string(k) +
                       " has no endpoint worst case (see worst-case ratio for k=2)");
    }
  }
  RatioTableOptions opt;
  opt.curve_points = c.curve_points;
  opt.mc_samples = c.mc_samples;
  opt.seed = c.seed;
  const std::vector<RatioReport> reports = ratio_table(c.k_list, opt);

  std::ostringstream csv;
  write_ratio_csv(csv, reports, c.refs);
  const std::string json_text = to_json(reports, c.refs).dump(2) + "\n";
  if (c.format == "json") out << json_text;
  else out << csv.str();

  if (!c.out_dir.empty()) {
    const fs::path dir = output_dir(c);
    write_text_file((dir / "ratio_table.csv").string(), csv.str());
    write_text_file((dir / "ratio_table.json").string(), json_text);
    if (c.curve_points >= 2) {
      std::ostringstream curve;
      write_curve_csv(curve, reports);
      write_text_file((dir / "ratio_curves.csv").string(), curve.str());
    }
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  std::vector<CheckResult> results;
  if (c.r || c.delta) {
    if (!(c.r && c.delta)) throw UsageError("--r and --delta must be given together");
    results.push_back(check_cdf_point(*c.r, *c.delta, c.samples, c.seed));
  } else {
    for (const std::string& name : c.checks) {
      const auto known = available_checks();
      if (std::find(known.begin(), known.end(), name) == known.end()) throw UsageError("unknown check '" + name + "'");
    }
    results = run_checks({c.checks, c.samples, c.seed});
  }
  bool all = true;
  json report = json::array();
  for (const CheckResult& r : results) {
    all = all && r.passed;
    if (!c.json_output) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name << "  statistic=" << std::setprecision(6) << r.statistic
          << " tolerance=" << r.tolerance << " samples=" << r.samples;
      if (!r.detail.empty()) out << "  (" << r.detail << ')';
      out << '\n';
    }
    report.push_back({{"name", r.name},
                      {"passed", r.passed},
                      {"statistic", r.statistic},
                      {"tolerance", r.tolerance},
                      {"samples", r.samples},
                      {"detail", r.detail}});
  }
  if (c.json_output) out << json{{"seed", c.seed}, {"checks", report}}.dump(2) << '\n';
  else out << "seed " << c.seed << '\n';
  if (!c.out_dir.empty()) write_text_file((output_dir(c) / "verify.json").string(), report.dump(2) + "\n");
  return all ? kExitOk : kExitVerificationFailed;
}

int cmd_pipeline(const RunConfig& c, std::ostream& out) {
  const WeightedGraph g = read_graph_file(c.graph_path);
  const SdpSolution s = solve_graph(g, c);
  const fs::path dir = output_dir(c);
  write_text_file((dir / "solution.json").string(), to_json(s).dump(2) + "\n");
  const RoundOutcome o = round_and_write(g, s, c);
  const double denom = s.objective > 0.0 ? s.objective : 1.0;
  const json report = {
      {"k", c.k},
      {"scheme", c.scheme},
      {"seed", c.seed},
      {"trials", o.stats.trials()},
      {"sdp_objective", s.objective},
      {"sdp_converged", s.converged},
      {"total_weight", g.total_weight()},
      {"mean_cut", o.stats.mean()},
      {"mean_cut_stderr", o.stats.standard_error()},
      {"best_cut", o.stats.best.value},
      {"mean_ratio", o.stats.mean() / denom},
      {"best_ratio", o.stats.best.value / denom},
  };
  write_text_file((dir / "report.json").string(), report.dump(2) + "\n");
  if (c.json_output) {
    out << report.dump() << '\n';
  } else {
    print_solution_summary(s, c, out);
    print_round_summary(o, c, out);
    out << "mean/objective " << o.stats.mean() / denom << ", best/objective " << o.stats.best.value / denom << '\n';
  }
  return kExitOk;
}

void add_solver_flags(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--rank", c.rank, "embedding dimension (0 = automatic)");
  cmd->add_option("--max-iter", c.max_iterations, "maximum gradient sweeps");
  cmd->add_option("--rel-tol", c.relative_tolerance, "relative objective change for convergence");
  cmd->add_option("--feas-tol", c.feasibility_tolerance, "edge dot-product violation tolerance");
  cmd->add_option("--grad-tol", c.gradient_tolerance, "tangent gradient tolerance per unit of max degree");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Max-k-Cut relaxation solver, rounding schemes and ratio verification", "maxkcut"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto* solve_cmd = app.add_subcommand("solve", "solve the vector relaxation for a graph");
  solve_cmd->add_option("--graph", c.graph_path, "edge-list graph file")->required();
  solve_cmd->add_option("--k", c.k, "number of parts")->required()->check(CLI::Range(2, 1 << 20));
  solve_cmd->add_option("--seed", c.seed, "random seed");
  solve_cmd->add_option("--out", c.out_dir, "output directory (solution.json)");
  solve_cmd->add_flag("--json", c.json_output, "machine-readable summary");
  add_solver_flags(solve_cmd, c);

  auto* round_cmd = app.add_subcommand("round", "round a relaxation solution into partitions");
  round_cmd->add_option("--graph", c.graph_path, "edge-list graph file")->required();
  round_cmd->add_option("--solution", c.solution_path, "solution.json from solve");
  round_cmd->add_option("--gram", c.gram_path, "Gram matrix text file");
  round_cmd->add_option("--k", c.k, "number of parts")->required()->check(CLI::Range(2, 1 << 20));
  round_cmd->add_option("--scheme", c.scheme, "uniform | fj | disc | simplex");
  round_cmd->add_option("--trials", c.trials, "number of independent roundings");
  round_cmd->add_option("--seed", c.seed, "random seed");
  round_cmd->add_option("--out", c.out_dir, "output directory (partition.json, trials.csv)");
  round_cmd->add_flag("--json", c.json_output, "machine-readable summary");

  auto* table_cmd = app.add_subcommand("ratio-table", "closed-form approximation ratios per k");
  table_cmd->add_option("--k", c.k_list, "comma-separated k values")->required()->delimiter(',');
  table_cmd->add_flag("--refs", c.refs, "fill the reference guarantee columns");
  table_cmd->add_option("--format", c.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  table_cmd->add_option("--curve-points", c.curve_points, "points per cut-probability curve");
  table_cmd->add_option("--mc-samples", c.mc_samples, "Monte Carlo trials per curve point");
  table_cmd->add_option("--seed", c.seed, "random seed for Monte Carlo");
  table_cmd->add_option("--out", c.out_dir, "output directory");
  table_cmd->add_flag("--json", c.json_output, "alias for --format json");

  auto* verify_cmd = app.add_subcommand("verify", "check closed forms against simulation");
  verify_cmd->add_option("--check", c.checks, "cdf | modk | disc-law | k3-equivalence | worst-case")->delimiter(',');
  verify_cmd->add_option("--r", c.r, "correlation for a single CDF check");
  verify_cmd->add_option("--delta", c.delta, "angle for a single CDF check");
  verify_cmd->add_option("--samples", c.samples, "Monte Carlo sample count")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", c.seed, "random seed");
  verify_cmd->add_option("--out", c.out_dir, "output directory (verify.json)");
  verify_cmd->add_flag("--json", c.json_output, "machine-readable report");

  auto* pipe_cmd = app.add_subcommand("pipeline", "solve, round and report in one go");
  pipe_cmd->add_option("--graph", c.graph_path, "edge-list graph file")->required();
  pipe_cmd->add_option("--k", c.k, "number of parts")->required()->check(CLI::Range(2, 1 << 20));
  pipe_cmd->add_option("--scheme", c.scheme, "uniform | fj | disc | simplex");
  pipe_cmd->add_option("--trials", c.trials, "number of independent roundings");
  pipe_cmd->add_option("--seed", c.seed, "random seed");
  pipe_cmd->add_option("--out", c.out_dir, "output directory");
  pipe_cmd->add_flag("--json", c.json_output, "machine-readable summary");
  add_solver_flags(pipe_cmd, c);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(c, out);
    if (round_cmd->parsed()) return cmd_round(c, out);
    if (table_cmd->parsed()) {
      if (c.json_output) c.format = "json";
      return cmd_ratio_table(c, out);
    }
    if (verify_cmd->parsed()) return cmd_verify(c, out);
    if (pipe_cmd->parsed()) return cmd_pipeline(c, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace maxkcut::cli
