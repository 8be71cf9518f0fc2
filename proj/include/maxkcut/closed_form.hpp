#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "maxkcut/sdp.hpp"

namespace maxkcut {

/**
 * Two unit discs correlated by r = cos(theta), in canonical coordinates:
 *   x_i(phi) = (cos phi, sin phi, 0, 0)
 *   x_j(phi) = (r cos phi, r sin phi, s cos phi, s sin phi),  s = sin(theta) >= 0
 * so that x_i(a) . x_j(b) = r cos(a - b).
 */
struct DiscPair {
  explicit DiscPair(double r);

  double r;
  double s;

  std::array<double, 4> x_i(double phi) const;
  std::array<double, 4> x_j(double phi) const;

  /// The two-vertex relaxation solution (1, 0), (r, s) that generates this pair.
  SdpSolution as_solution(int k) const;
};

/**
 * Probability that the angle gap gamma = theta_j - theta_i (mod 2pi) lies in
 * [0, delta), for discs correlated by r:
 *   (1/2pi) (delta + r sin(delta) / sqrt(1 - r^2 cos^2 delta) * arccos(-r cos delta)).
 * At |r| = 1 the gap distribution is degenerate and the value returned is the
 * limit from |r| < 1 (1/2 on (0, 2pi) for r = 1).
 */
double angle_cdf(double r, double delta);

struct MonteCarloEstimate {
  double value = 0.0;
  double standard_error = 0.0;
  std::size_t samples = 0;
};

/// Sampled Pr[gamma < delta] using the four relevant Gaussian coordinates.
MonteCarloEstimate mc_angle_cdf(double r, double delta, std::size_t samples, std::uint64_t seed);

/// Same sampler evaluated on a whole delta grid with one shared sample set.
std::vector<MonteCarloEstimate> mc_angle_cdf(double r, std::span<const double> deltas, std::size_t samples,
                                             std::uint64_t seed);

/// Probability that the sector labels satisfy y_i - y_j = c (mod k).
double modk_probability(double r, int k, int c);

/// Probability that disc rounding separates an edge with endpoint dot r.
double cut_probability(double r, int k);

/// Worst-case ratio of disc rounding, attained at r = -1/(k-1). Needs k >= 3.
double phi(int k);

struct WorstCase {
  double ratio = 0.0;
  double argmin_r = 0.0;
  double grid_step = 0.0;
};

/// Minimum of cut_probability(r,k) / ((1-r)(k-1)/k) on `resolution` equally
/// spaced points of [-1/(k-1), 1), left endpoint included.
WorstCase worst_case_ratio(int k, std::size_t resolution);

struct CurvePoint {
  double r;
  double cut_probability;
  double ratio;
};

struct RatioReport {
  int k = 3;
  double phi_k = 0.0;
  double uniform_baseline = 0.0;
  std::optional<double> fj_ref;    // reference guarantee, fj column
  std::optional<double> dkpw_ref;  // reference guarantee, dkpw column
  WorstCase worst_case;
  std::vector<CurvePoint> curve;
  std::vector<MonteCarloEstimate> monte_carlo;  // disc rounding at each curve point
};

struct RatioTableOptions {
  std::size_t worst_case_resolution = 10000;
  std::size_t curve_points = 0;
  std::size_t mc_samples = 0;
  std::uint64_t seed = 1;
};

std::vector<RatioReport> ratio_table(std::span<const int> ks, const RatioTableOptions& options = {});

/// Reference column values; empty for k without a tabulated value.
std::optional<double> frieze_jerrum_reference(int k);
std::optional<double> de_klerk_reference(int k);

}  // namespace maxkcut
