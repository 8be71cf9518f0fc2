#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "maxkcut/closed_form.hpp"
#include "maxkcut/graph.hpp"
#include "maxkcut/rounding.hpp"
#include "maxkcut/sdp.hpp"

namespace maxkcut::cli {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string format_r(double r) {
  std::ostringstream s;
  s << r;
  return s.str();
}

std::vector<CheckResult> cdf_agreement(std::size_t samples, std::uint64_t seed) {
  std::vector<double> grid(64);
  for (std::size_t j = 0; j < grid.size(); ++j) grid[j] = (static_cast<double>(j) + 0.5) * kTwoPi / 64.0;
  std::vector<CheckResult> out;
  for (double r : {-0.9, -0.5, 0.0, 0.5, 0.9}) {
    const auto estimates = mc_angle_cdf(r, grid, samples, seed);
    double worst = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j) worst = std::max(worst, std::abs(estimates[j].value - angle_cdf(r, grid[j])));
    out.push_back({"cdf-agreement r=" + format_r(r), worst < 0.005, worst, 0.005, samples, "sup over 64 deltas"});
  }
  return out;
}

std::vector<CheckResult> modk_normalization() {
  double worst = 0.0;
  for (int k = 2; k <= 12; ++k) {
    for (int i = 0; i <= 20; ++i) {
      const double r = -1.0 + 0.1 * i;
      double total = 0.0;
      for (int c = 0; c < k; ++c) total += modk_probability(std::clamp(r, -1.0, 1.0), k, c);
      worst = std::max(worst, std::abs(total - 1.0));
    }
  }
  return {{"modk-normalization", worst < 1e-10, worst, 1e-10, 0, "k=2..12, r=-1..1 step 0.1"}};
}

std::vector<CheckResult> disc_law(std::size_t samples, std::uint64_t seed) {
  const WeightedGraph edge(2, {{0, 1, 1.0}});
  std::vector<CheckResult> out;
  for (int k : {3, 4, 5, 10}) {
    for (double r : {dot_lower_bound(k), 0.0, 0.5, 1.0}) {
      const TrialStatistics stats = run_trials(Scheme::kDisc, edge, DiscPair(r).as_solution(k), k, samples, seed);
      const double expected = cut_probability(r, k);
      const double sigma = std::sqrt(expected * (1.0 - expected) / static_cast<double>(samples));
      const double diff = std::abs(stats.edge_cut_frequency(0) - expected);
      const bool ok = sigma > 0.0 ? diff <= 3.0 * sigma : diff == 0.0;
      out.push_back({"disc-law k=" + std::to_string(k) + " r=" + format_r(r), ok, diff, 3.0 * sigma, samples,
                     "|empirical - closed form|"});
    }
  }
  return out;
}

std::vector<CheckResult> k3_equivalence(std::size_t samples, std::uint64_t seed) {
  const WeightedGraph k3 = complete_graph(3);
  const SdpSolution sol = solve({k3, 3}, seed);
  const TrialStatistics disc = run_trials(Scheme::kDisc, k3, sol, 3, samples, seed);
  const TrialStatistics simplex = run_trials(Scheme::kSimplex, k3, sol, 3, samples, seed + 1);
  double gap = 0.0;
  double off_target = 0.0;
  for (std::size_t e = 0; e < k3.num_edges(); ++e) {
    gap = std::max(gap, std::abs(disc.edge_cut_frequency(e) - simplex.edge_cut_frequency(e)));
    off_target = std::max({off_target, std::abs(disc.edge_cut_frequency(e) - 0.836008),
                           std::abs(simplex.edge_cut_frequency(e) - 0.836008)});
  }
  return {{"k3-equivalence", gap < 0.005, gap, 0.005, samples, "max per-edge |p_disc - p_simplex|"},
          {"k3-target", off_target < 0.005, off_target, 0.005, samples, "max per-edge |p - 0.836008|"}};
}

std::vector<CheckResult> worst_case_location() {
  std::vector<CheckResult> out;
  for (int k = 3; k <= 12; ++k) {
    const WorstCase wc = worst_case_ratio(k, 10000);
    const double offset = std::abs(wc.argmin_r - dot_lower_bound(k));
    const double value_gap = std::abs(wc.ratio - phi(k));
    const bool ok = offset <= wc.grid_step && value_gap < 1e-6;
    out.push_back({"worst-case k=" + std::to_string(k), ok, value_gap, 1e-6, 10000,
                   "argmin offset " + format_r(offset) + ", grid step " + format_r(wc.grid_step)});
  }
  return out;
}

}  // namespace

std::vector<std::string> available_checks() {
  return {"cdf", "modk", "disc-law", "k3-equivalence", "worst-case"};
}

CheckResult check_cdf_point(double r, double delta, std::size_t samples, std::uint64_t seed) {
  const MonteCarloEstimate mc = mc_angle_cdf(r, delta, samples, seed);
  const double expected = angle_cdf(r, delta);
  const double sigma = std::sqrt(expected * (1.0 - expected) / static_cast<double>(samples));
  const double diff = std::abs(mc.value - expected);
  const bool ok = sigma > 0.0 ? diff < 3.0 * sigma : diff == 0.0;
  return {"cdf-point r=" + format_r(r) + " delta=" + format_r(delta), ok, diff, 3.0 * sigma, samples,
          "closed form " + format_r(expected) + ", estimate " + format_r(mc.value)};
}

std::vector<CheckResult> run_checks(const VerifyOptions& options) {
  std::vector<std::string> names = options.checks.empty() ? available_checks() : options.checks;
  std::vector<CheckResult> results;
  for (const std::string& name : names) {
    std::vector<CheckResult> part;
    if (name == "cdf") part = cdf_agreement(options.samples, options.seed);
    else if (name == "modk") part = modk_normalization();
    else if (name == "disc-law") part = disc_law(options.samples, options.seed);
    else if (name == "k3-equivalence") part = k3_equivalence(options.samples, options.seed);
    else if (name == "worst-case") part = worst_case_location();
    else throw std::invalid_argument("unknown check '" + name + "'");
    results.insert(results.end(), part.begin(), part.end());
  }
  return results;
}

}  // namespace maxkcut::cli
