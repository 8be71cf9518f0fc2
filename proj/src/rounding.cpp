#include "maxkcut/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "maxkcut/random.hpp"
#include "maxkcut/simplex.hpp"

namespace maxkcut {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_k(int k) {
  if (k < 2) throw std::invalid_argument("rounding needs k >= 2, got " + std::to_string(k));
}

void check_solution(const WeightedGraph& g, const SdpSolution& s) {
  if (s.num_vertices() != g.num_vertices()) {
    throw std::invalid_argument("solution has " + std::to_string(s.num_vertices()) + " vectors for " +
                                std::to_string(g.num_vertices()) + " vertices");
  }
  if (s.dimension() == 0) throw std::invalid_argument("solution vectors have dimension 0");
}

// d x count matrix of iid N(0,1), filled column by column.
Eigen::MatrixXd gaussian_matrix(RandomStream& rng, Eigen::Index d, Eigen::Index count) {
  Eigen::MatrixXd m(d, count);
  for (Eigen::Index c = 0; c < count; ++c)
    for (Eigen::Index r = 0; r < d; ++r) m(r, c) = rng.normal();
  return m;
}

Partition finish(const WeightedGraph& g, std::vector<Label> labels, int k, Scheme scheme, std::uint64_t seed,
                 std::uint64_t trial) {
  Partition p;
  p.value = cut_value(g, labels);
  p.labels = std::move(labels);
  p.k = k;
  p.scheme = scheme;
  p.seed = seed;
  p.trial = trial;
  return p;
}

}  // namespace

std::string_view scheme_name(Scheme s) {
  switch (s) {
    case Scheme::kUniform: return "uniform";
    case Scheme::kFriezeJerrum: return "fj";
    case Scheme::kDisc: return "disc";
    case Scheme::kSimplex: return "simplex";
  }
  return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
  for (Scheme s : {Scheme::kUniform, Scheme::kFriezeJerrum, Scheme::kDisc, Scheme::kSimplex})
    if (scheme_name(s) == name) return s;
  return std::nullopt;
}

DiscEmbedding::DiscEmbedding(const Eigen::MatrixXd& vectors) {
  const Eigen::Index n = vectors.rows();
  const Eigen::Index d = vectors.cols();
  base_ = Eigen::MatrixXd::Zero(n, 2 * d);
  perp_ = Eigen::MatrixXd::Zero(n, 2 * d);
  base_.leftCols(d) = vectors;
  perp_.rightCols(d) = vectors;
}

Eigen::VectorXd DiscEmbedding::point(std::size_t i, double phi) const {
  const auto row = static_cast<Eigen::Index>(i);
  return (base_.row(row) * std::cos(phi) + perp_.row(row) * std::sin(phi)).transpose();
}

DiscEmbedding build_discs(const SdpSolution& s) { return DiscEmbedding(s.vectors); }

AngleProjection project_angle(const DiscEmbedding& discs, std::size_t i, const Eigen::VectorXd& g) {
  if (static_cast<std::size_t>(g.size()) != discs.dimension()) {
    throw std::invalid_argument("random vector has dimension " + std::to_string(g.size()) + ", expected " +
                                std::to_string(discs.dimension()));
  }
  const auto row = static_cast<Eigen::Index>(i);
  const double along = discs.base().row(row).dot(g);
  const double across = discs.perp().row(row).dot(g);
  if (along == 0.0 && across == 0.0) return {0.0, true};
  double theta = std::atan2(across, along);
  if (theta < 0.0) theta += kTwoPi;
  if (theta >= kTwoPi) theta = 0.0;
  return {theta, false};
}

Label sector_label(double theta, double psi, int k) {
  double shifted = std::fmod(theta - psi, kTwoPi);
  if (shifted < 0.0) shifted += kTwoPi;
  const auto label = static_cast<Label>(std::floor(shifted / (kTwoPi / k)));
  return std::clamp(label, 0, k - 1);
}

Partition round_uniform(const WeightedGraph& g, int k, std::uint64_t seed, std::uint64_t trial) {
  check_k(k);
  RandomStream rng(seed, trial, StreamPurpose::kLabels);
  std::vector<Label> labels(g.num_vertices());
  for (Label& l : labels) l = static_cast<Label>(rng.below(static_cast<std::uint64_t>(k)));
  return finish(g, std::move(labels), k, Scheme::kUniform, seed, trial);
}

Partition round_frieze_jerrum(const WeightedGraph& g, const SdpSolution& s, int k, std::uint64_t seed,
                              std::uint64_t trial) {
  check_k(k);
  check_solution(g, s);
  RandomStream rng(seed, trial, StreamPurpose::kGaussian);
  const Eigen::MatrixXd scores = s.vectors * gaussian_matrix(rng, s.vectors.cols(), k);
  std::vector<Label> labels(g.num_vertices());
  for (Eigen::Index i = 0; i < scores.rows(); ++i) {
    Label best = 0;
    for (Label h = 1; h < k; ++h)
      if (scores(i, h) > scores(i, best)) best = h;
    labels[i] = best;
  }
  return finish(g, std::move(labels), k, Scheme::kFriezeJerrum, seed, trial);
}

Partition round_disc(const WeightedGraph& g, const DiscEmbedding& discs, int k, std::uint64_t seed,
                     std::uint64_t trial) {
  check_k(k);
  if (discs.num_vertices() != g.num_vertices()) {
    throw std::invalid_argument("disc embedding does not match the graph size");
  }
  RandomStream gauss(seed, trial, StreamPurpose::kGaussian);
  Eigen::VectorXd direction(static_cast<Eigen::Index>(discs.dimension()));
  for (Eigen::Index j = 0; j < direction.size(); ++j) direction(j) = gauss.normal();
  RandomStream offset(seed, trial, StreamPurpose::kOffset);
  const double psi = kTwoPi * offset.uniform();

  std::vector<Label> labels(g.num_vertices());
  std::size_t degenerate = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const AngleProjection a = project_angle(discs, i, direction);
    if (a.degenerate) ++degenerate;
    labels[i] = sector_label(a.theta, psi, k);
  }
  Partition p = finish(g, std::move(labels), k, Scheme::kDisc, seed, trial);
  p.degenerate_projections = degenerate;
  return p;
}

Partition round_disc(const WeightedGraph& g, const SdpSolution& s, int k, std::uint64_t seed,
                     std::uint64_t trial) {
  check_solution(g, s);
  return round_disc(g, build_discs(s), k, seed, trial);
}

Partition round_simplex(const WeightedGraph& g, const SdpSolution& s, int k, std::uint64_t seed,
                        std::uint64_t trial) {
  check_k(k);
  check_solution(g, s);
  const SimplexVertices simplex(k);
  RandomStream rng(seed, trial, StreamPurpose::kGaussian);
  const Eigen::MatrixXd projected = s.vectors * gaussian_matrix(rng, s.vectors.cols(), k - 1);
  std::vector<Label> labels(g.num_vertices());
  for (Eigen::Index i = 0; i < projected.rows(); ++i)
    labels[i] = simplex.nearest_vertex(projected.row(i).transpose());
  return finish(g, std::move(labels), k, Scheme::kSimplex, seed, trial);
}

Partition round(Scheme scheme, const WeightedGraph& g, const SdpSolution& s, int k, std::uint64_t seed,
                std::uint64_t trial) {
  switch (scheme) {
    case Scheme::kUniform: return round_uniform(g, k, seed, trial);
    case Scheme::kFriezeJerrum: return round_frieze_jerrum(g, s, k, seed, trial);
    case Scheme::kDisc: return round_disc(g, s, k, seed, trial);
    case Scheme::kSimplex: return round_simplex(g, s, k, seed, trial);
  }
  throw std::invalid_argument("unknown rounding scheme");
}

double TrialStatistics::mean() const {
  if (values.empty()) return 0.0;
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double TrialStatistics::standard_error() const {
  const std::size_t t = values.size();
  if (t < 2) return 0.0;
  const double mu = mean();
  double ss = 0.0;
  for (double v : values) ss += (v - mu) * (v - mu);
  return std::sqrt(ss / static_cast<double>(t - 1) / static_cast<double>(t));
}

double TrialStatistics::edge_cut_frequency(std::size_t edge) const {
  return values.empty() ? 0.0 : static_cast<double>(edge_cuts.at(edge)) / static_cast<double>(values.size());
}

TrialStatistics run_trials(Scheme scheme, const WeightedGraph& g, const SdpSolution& s, int k,
                           std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("need at least one trial");
  TrialStatistics stats;
  stats.scheme = scheme;
  stats.k = k;
  stats.seed = seed;
  stats.values.reserve(trials);
  stats.edge_cuts.assign(g.num_edges(), 0);

  std::optional<DiscEmbedding> discs;
  if (scheme == Scheme::kDisc) {
    check_solution(g, s);
    discs.emplace(s.vectors);
  }
  const auto edges = g.edges();
  for (std::size_t t = 0; t < trials; ++t) {
    Partition p = discs ? round_disc(g, *discs, k, seed, t) : round(scheme, g, s, k, seed, t);
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (p.labels[edges[e].u] != p.labels[edges[e].v]) ++stats.edge_cuts[e];
    stats.values.push_back(p.value);
    if (t == 0 || p.value > stats.best.value) stats.best = std::move(p);
  }
  return stats;
}

}  // namespace maxkcut
