#include "maxkcut/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "maxkcut/random.hpp"
#include "maxkcut/rounding.hpp"

namespace maxkcut {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }
double clamp_probability(double p) { return std::clamp(p, 0.0, 1.0); }

void check_correlation(double r) {
  if (std::isnan(r) || r < -1.0 || r > 1.0) {
    throw std::invalid_argument("correlation must lie in [-1, 1], got " + std::to_string(r));
  }
}

void check_k(int k, int minimum) {
  if (k < minimum) {
    throw std::invalid_argument("k must be at least " + std::to_string(minimum) + ", got " + std::to_string(k));
  }
}

// arccos^2(-r cos(2 pi c / k)); c may be negative or >= k.
double arccos_sq(double r, int k, int c) {
  const double a = std::acos(clamp_unit(-r * std::cos(kTwoPi * c / k)));
  return a * a;
}

}  // namespace

DiscPair::DiscPair(double r_) : r(r_), s(0.0) {
  check_correlation(r);
  s = std::sqrt(std::max(0.0, 1.0 - r * r));
}

std::array<double, 4> DiscPair::x_i(double phi) const { return {std::cos(phi), std::sin(phi), 0.0, 0.0}; }

std::array<double, 4> DiscPair::x_j(double phi) const {
  const double c = std::cos(phi);
  const double sn = std::sin(phi);
  return {r * c, r * sn, s * c, s * sn};
}

SdpSolution DiscPair::as_solution(int k) const {
  check_k(k, 2);
  SdpSolution sol;
  sol.k = k;
  sol.vectors.resize(2, 2);
  sol.vectors << 1.0, 0.0, r, s;
  sol.objective = (1.0 - r) * (k - 1.0) / k;
  sol.max_dot_violation = std::max(0.0, dot_lower_bound(k) - r);
  return sol;
}

double angle_cdf(double r, double delta) {
  check_correlation(r);
  if (std::isnan(delta) || delta < 0.0 || delta > kTwoPi * (1.0 + 1e-15)) {
    throw std::invalid_argument("delta must lie in [0, 2pi], got " + std::to_string(delta));
  }
  if (delta == 0.0) return 0.0;
  if (delta >= kTwoPi) return 1.0;
  const double c = std::cos(delta);
  const double radicand = 1.0 - r * r * c * c;
  // Only reachable at |r| = 1 with delta in {0, pi, 2pi}, where sin(delta) = 0 too.
  const double fraction =
      radicand < 1e-14 ? 0.0 : r * std::sin(delta) / std::sqrt(radicand) * std::acos(clamp_unit(-r * c));
  return clamp_probability((delta + fraction) / kTwoPi);
}

std::vector<MonteCarloEstimate> mc_angle_cdf(double r, std::span<const double> deltas, std::size_t samples,
                                             std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("need at least one sample");
  const DiscPair pair(r);
  RandomStream rng(seed, 0, StreamPurpose::kOracle);
  std::vector<double> gaps(samples);
  for (double& gap : gaps) {
    const double g1 = rng.normal();
    const double g2 = rng.normal();
    const double g3 = rng.normal();
    const double g4 = rng.normal();
    const double theta_i = std::atan2(g2, g1);
    const double theta_j = std::atan2(pair.r * g2 + pair.s * g4, pair.r * g1 + pair.s * g3);
    double gamma = std::fmod(theta_j - theta_i, kTwoPi);
    if (gamma < 0.0) gamma += kTwoPi;
    if (gamma >= kTwoPi) gamma = 0.0;
    gap = gamma;
  }
  std::sort(gaps.begin(), gaps.end());

  std::vector<MonteCarloEstimate> out;
  out.reserve(deltas.size());
  const auto n = static_cast<double>(samples);
  for (double delta : deltas) {
    const auto below = static_cast<double>(std::lower_bound(gaps.begin(), gaps.end(), delta) - gaps.begin());
    const double p = below / n;
    out.push_back({p, std::sqrt(p * (1.0 - p) / n), samples});
  }
  return out;
}

MonteCarloEstimate mc_angle_cdf(double r, double delta, std::size_t samples, std::uint64_t seed) {
  const double grid[] = {delta};
  return mc_angle_cdf(r, grid, samples, seed).front();
}

double modk_probability(double r, int k, int c) {
  check_correlation(r);
  check_k(k, 2);
  if (c < 0 || c >= k) {
    throw std::invalid_argument("offset c must lie in [0, " + std::to_string(k) + "), got " + std::to_string(c));
  }
  const double bracket = 2.0 * arccos_sq(r, k, c) - arccos_sq(r, k, c + 1) - arccos_sq(r, k, c - 1);
  return clamp_probability(1.0 / k + k / (8.0 * kPi * kPi) * bracket);
}

double cut_probability(double r, int k) {
  check_correlation(r);
  check_k(k, 2);
  const double bracket = arccos_sq(r, k, 1) - arccos_sq(r, k, 0);
  return clamp_probability((k - 1.0) / k + k / (4.0 * kPi * kPi) * bracket);
}

double phi(int k) {
  if (k < 3) {
    throw std::domain_error("phi(k) is defined for k >= 3; use worst_case_ratio for k = " + std::to_string(k));
  }
  const double inv = 1.0 / (k - 1.0);
  const double near = std::acos(clamp_unit(inv * std::cos(kTwoPi / k)));
  const double far = std::acos(inv);
  return (k - 1.0) / k + k / (4.0 * kPi * kPi) * (near * near - far * far);
}

WorstCase worst_case_ratio(int k, std::size_t resolution) {
  check_k(k, 2);
  if (resolution < 1000) throw std::invalid_argument("worst_case_ratio needs at least 1000 grid points");
  const double lo = dot_lower_bound(k);
  const double step = (1.0 - lo) / static_cast<double>(resolution);
  const double scale = (k - 1.0) / k;
  WorstCase best{std::numeric_limits<double>::infinity(), lo, step};
  for (std::size_t i = 0; i < resolution; ++i) {
    const double r = lo + static_cast<double>(i) * step;
    const double ratio = cut_probability(r, k) / ((1.0 - r) * scale);
    if (ratio < best.ratio) {
      best.ratio = ratio;
      best.argmin_r = r;
    }
  }
  return best;
}

std::optional<double> frieze_jerrum_reference(int k) {
  switch (k) {
    case 3: return 0.832718;
    case 4: return 0.850304;
    case 5: return 0.874243;
    case 10: return 0.926642;
    default: return std::nullopt;
  }
}

std::optional<double> de_klerk_reference(int k) {
  switch (k) {
    case 3: return 0.836008;
    case 4: return 0.857487;
    case 5: return 0.876610;
    case 10: return 0.926788;
    default: return std::nullopt;
  }
}

std::vector<RatioReport> ratio_table(std::span<const int> ks, const RatioTableOptions& options) {
  for (int k : ks) check_k(k, 3);
  std::vector<RatioReport> reports;
  reports.reserve(ks.size());
  for (int k : ks) {
    RatioReport rep;
    rep.k = k;
    rep.phi_k = phi(k);
    rep.uniform_baseline = 1.0 - 1.0 / k;
    rep.fj_ref = frieze_jerrum_reference(k);
    rep.dkpw_ref = de_klerk_reference(k);
    rep.worst_case = worst_case_ratio(k, options.worst_case_resolution);

    if (options.curve_points >= 2) {
      const double lo = dot_lower_bound(k);
      const WeightedGraph edge(2, {{0, 1, 1.0}});
      for (std::size_t i = 0; i < options.curve_points; ++i) {
        const double r = std::min(1.0, lo + (1.0 - lo) * static_cast<double>(i) /
                                               static_cast<double>(options.curve_points - 1));
        const double p = cut_probability(r, k);
        const double denom = (1.0 - r) * (k - 1.0) / k;
        rep.curve.push_back({r, p, denom > 0.0 ? p / denom : 1.0});
        if (options.mc_samples > 0) {
          const TrialStatistics stats =
              run_trials(Scheme::kDisc, edge, DiscPair(r).as_solution(k), k, options.mc_samples, options.seed + i);
          const double freq = stats.edge_cut_frequency(0);
          const auto n = static_cast<double>(options.mc_samples);
          rep.monte_carlo.push_back({freq, std::sqrt(freq * (1.0 - freq) / n), options.mc_samples});
        }
      }
    }
    reports.push_back(std::move(rep));
  }
  return reports;
}

}  // namespace maxkcut
