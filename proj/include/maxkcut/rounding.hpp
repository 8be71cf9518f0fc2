#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "maxkcut/graph.hpp"
#include "maxkcut/sdp.hpp"

namespace maxkcut {

enum class Scheme { kUniform, kFriezeJerrum, kDisc, kSimplex };

std::string_view scheme_name(Scheme s);
std::optional<Scheme> parse_scheme(std::string_view name);

struct Partition {
  std::vector<Label> labels;
  int k = 2;
  double value = 0.0;
  Scheme scheme = Scheme::kUniform;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
  // Vertices whose disc was orthogonal to the random vector (disc scheme).
  std::size_t degenerate_projections = 0;
};

/**
 * Each vertex i lifted to the disc spanned by base_i = (v_i, 0) and
 * perp_i = (0, v_i) in R^{2d}; v_i(phi) = base_i cos(phi) + perp_i sin(phi).
 */
class DiscEmbedding {
 public:
  explicit DiscEmbedding(const Eigen::MatrixXd& vectors);

  std::size_t num_vertices() const { return static_cast<std::size_t>(base_.rows()); }
  std::size_t dimension() const { return static_cast<std::size_t>(base_.cols()); }
  const Eigen::MatrixXd& base() const { return base_; }
  const Eigen::MatrixXd& perp() const { return perp_; }

  Eigen::VectorXd point(std::size_t i, double phi) const;

 private:
  Eigen::MatrixXd base_;
  Eigen::MatrixXd perp_;
};

DiscEmbedding build_discs(const SdpSolution& s);

struct AngleProjection {
  double theta = 0.0;  // in [0, 2pi)
  bool degenerate = false;
};

/// Angle of the point of disc i that maximizes its dot product with g.
AngleProjection project_angle(const DiscEmbedding& discs, std::size_t i, const Eigen::VectorXd& g);

/// Sector of the circle, cut into k arcs starting at offset psi, holding theta.
Label sector_label(double theta, double psi, int k);

Partition round_uniform(const WeightedGraph& g, int k, std::uint64_t seed, std::uint64_t trial = 0);
Partition round_frieze_jerrum(const WeightedGraph& g, const SdpSolution& s, int k, std::uint64_t seed,
                              std::uint64_t trial = 0);
Partition round_disc(const WeightedGraph& g, const DiscEmbedding& discs, int k, std::uint64_t seed,
                     std::uint64_t trial = 0);
Partition round_disc(const WeightedGraph& g, const SdpSolution& s, int k, std::uint64_t seed,
                     std::uint64_t trial = 0);
Partition round_simplex(const WeightedGraph& g, const SdpSolution& s, int k, std::uint64_t seed,
                        std::uint64_t trial = 0);

Partition round(Scheme scheme, const WeightedGraph& g, const SdpSolution& s, int k, std::uint64_t seed,
                std::uint64_t trial = 0);

struct TrialStatistics {
  Scheme scheme = Scheme::kUniform;
  int k = 2;
  std::uint64_t seed = 0;
  std::vector<double> values;             // cut value per trial
  std::vector<std::uint64_t> edge_cuts;   // per edge: trials in which it was cut
  Partition best;

  std::size_t trials() const { return values.size(); }
  double mean() const;
  double standard_error() const;
  double edge_cut_frequency(std::size_t edge) const;
};

/// Runs `trials` independent roundings; trial t uses streams (seed, t, *).
TrialStatistics run_trials(Scheme scheme, const WeightedGraph& g, const SdpSolution& s, int k,
                           std::size_t trials, std::uint64_t seed);

}  // namespace maxkcut
