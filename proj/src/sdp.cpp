#include "maxkcut/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "maxkcut/random.hpp"

namespace maxkcut {

double dot_lower_bound(int k) { return -1.0 / (k - 1); }

double relaxation_objective(const WeightedGraph& g, const Eigen::MatrixXd& vectors, int k) {
  const double scale = (k - 1.0) / k;
  double total = 0.0;
  for (const Edge& e : g.edges()) total += e.w * (1.0 - vectors.row(e.u).dot(vectors.row(e.v)));
  return total * scale;
}

std::size_t default_rank(const WeightedGraph& g) {
  const auto m = static_cast<double>(g.num_edges());
  const auto heuristic = static_cast<std::size_t>(std::ceil(std::sqrt(2.0 * m))) + 1;
  return std::min(g.num_vertices(), std::max<std::size_t>(heuristic, 2));
}

namespace {

void check_k(int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2, got " + std::to_string(k));
}

// Normalizes every row; rows that collapsed to zero are redrawn.
void normalize_rows(Eigen::MatrixXd& v, RandomStream& rng) {
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    double norm = v.row(i).norm();
    while (!(norm > 1e-300)) {
      for (Eigen::Index j = 0; j < v.cols(); ++j) v(i, j) = rng.normal();
      norm = v.row(i).norm();
    }
    v.row(i) /= norm;
  }
}

// Removes from each row of x its component along the matching row of v.
void project_tangent(const Eigen::MatrixXd& v, Eigen::MatrixXd& x) {
  for (Eigen::Index i = 0; i < v.rows(); ++i) x.row(i) -= x.row(i).dot(v.row(i)) * v.row(i);
}

// Augmented Lagrangian for max f(V) s.t. g_e(V) = v_u.v_v - bound >= 0:
//   L = f - 1/(2 mu) sum_e [max(0, lambda_e - mu g_e)^2 - lambda_e^2].
class AugmentedLagrangian {
 public:
  AugmentedLagrangian(const WeightedGraph& g, int k)
      : graph_(g), scale_((k - 1.0) / k), bound_(dot_lower_bound(k)), lambda_(g.num_edges(), 0.0) {}

  double penalty() const { return mu_; }
  void set_penalty(double mu) { mu_ = mu; }

  double value(const Eigen::MatrixXd& v) const {
    double total = 0.0;
    const auto edges = graph_.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const double dot = v.row(edges[e].u).dot(v.row(edges[e].v));
      total += scale_ * edges[e].w * (1.0 - dot);
      const double shifted = std::max(0.0, lambda_[e] - mu_ * (dot - bound_));
      total -= (shifted * shifted - lambda_[e] * lambda_[e]) / (2.0 * mu_);
    }
    return total;
  }

  // Euclidean gradient projected onto the tangent space of each row's sphere.
  void tangent_gradient(const Eigen::MatrixXd& v, Eigen::MatrixXd& grad) const {
    grad.setZero(v.rows(), v.cols());
    const auto edges = graph_.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const Edge& edge = edges[e];
      const double dot = v.row(edge.u).dot(v.row(edge.v));
      const double coeff = -scale_ * edge.w + std::max(0.0, lambda_[e] - mu_ * (dot - bound_));
      grad.row(edge.u) += coeff * v.row(edge.v);
      grad.row(edge.v) += coeff * v.row(edge.u);
    }
    project_tangent(v, grad);
  }

  double max_violation(const Eigen::MatrixXd& v) const {
    double worst = 0.0;
    for (const Edge& e : graph_.edges()) worst = std::max(worst, bound_ - v.row(e.u).dot(v.row(e.v)));
    return worst;
  }

  void update_multipliers(const Eigen::MatrixXd& v) {
    const auto edges = graph_.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const double dot = v.row(edges[e].u).dot(v.row(edges[e].v));
      lambda_[e] = std::max(0.0, lambda_[e] - mu_ * (dot - bound_));
    }
  }

 private:
  const WeightedGraph& graph_;
  double scale_;
  double bound_;
  double mu_ = 1.0;
  std::vector<double> lambda_;
};

double max_norm_violation(const Eigen::MatrixXd& v) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < v.rows(); ++i) worst = std::max(worst, std::abs(v.row(i).norm() - 1.0));
  return worst;
}

void finalize(SdpSolution& s, const WeightedGraph& g) {
  const FeasibilityReport report = validate(s, g, s.k);
  s.objective = report.objective;
  s.max_norm_violation = report.max_norm_violation;
  s.max_dot_violation = report.max_edge_dot_violation;
}

}  // namespace

SdpSolution solve(const SdpProblem& problem, std::uint64_t seed) {
  check_k(problem.k);
  const WeightedGraph& g = problem.graph;
  const SolverOptions& opt = problem.options;
  const std::size_t n = g.num_vertices();
  std::size_t d = problem.rank == 0 ? default_rank(g) : problem.rank;
  d = std::clamp<std::size_t>(d, std::min<std::size_t>(2, n), n);

  SdpSolution s;
  s.k = problem.k;
  s.seed = seed;

  RandomStream rng(seed, 0, StreamPurpose::kSolverInit);
  Eigen::MatrixXd v(n, d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j) v(i, j) = rng.normal();
  normalize_rows(v, rng);
  s.trace.initial_objective = relaxation_objective(g, v, problem.k);

  if (g.num_edges() == 0 || g.total_weight() == 0.0) {
    s.vectors = std::move(v);
    finalize(s, g);
    return s;
  }

  AugmentedLagrangian lagrangian(g, problem.k);
  lagrangian.set_penalty(opt.initial_penalty);
  const double grad_scale = std::max(1.0, g.max_weighted_degree());
  const double final_tol = opt.gradient_tolerance * grad_scale;
  double inner_tol = std::max(final_tol, 1e-2 * grad_scale);
  double step = 1.0 / g.max_weighted_degree();
  double value = lagrangian.value(v);
  Eigen::MatrixXd grad(n, d);
  Eigen::MatrixXd candidate(n, d);
  Eigen::MatrixXd direction(n, d);
  Eigen::MatrixXd prev_grad(n, d);
  double prev_grad_sq = 1.0;

  std::size_t iterations = 0;
  bool converged = false;
  double previous_violation = std::numeric_limits<double>::infinity();
  double previous_objective = -std::numeric_limits<double>::infinity();
  Eigen::MatrixXd best_feasible;
  double best_feasible_objective = -std::numeric_limits<double>::infinity();

  if (opt.record_trace) s.trace.segment_starts.push_back(0);
  while (iterations < opt.max_iterations) {
    // Inner ascent at fixed multipliers and penalty: Riemannian conjugate
    // gradient (PR+) with an Armijo backtracking search.
    double grad_norm = 0.0;
    bool restart = true;
    while (true) {
      lagrangian.tangent_gradient(v, grad);
      grad_norm = grad.norm();
      if (grad_norm <= inner_tol || iterations >= opt.max_iterations) break;
      if (restart) {
        direction = grad;
      } else {
        project_tangent(v, direction);
        project_tangent(v, prev_grad);
        const double beta = std::max(0.0, grad.cwiseProduct(grad - prev_grad).sum() / prev_grad_sq);
        direction = grad + beta * direction;
        if (grad.cwiseProduct(direction).sum() <= 0.0) direction = grad;
      }
      const double slope = grad.cwiseProduct(direction).sum();
      bool accepted = false;
      while (iterations < opt.max_iterations && step > 1e-18) {
        ++iterations;
        candidate = v + step * direction;
        normalize_rows(candidate, rng);
        const double next = lagrangian.value(candidate);
        if (next >= value + 1e-4 * step * slope) {
          v.swap(candidate);
          value = next;
          step *= 1.1;
          accepted = true;
          if (opt.record_trace) s.trace.lagrangian.push_back(value);
          break;
        }
        step *= 0.5;
      }
      if (!accepted) {
        if (restart) break;  // no ascent left at working precision
        step = 1.0 / g.max_weighted_degree();
        restart = true;
        continue;
      }
      prev_grad = grad;
      prev_grad_sq = grad_norm * grad_norm;
      restart = false;
    }
    if (step <= 1e-18) step = 1.0 / (g.max_weighted_degree() * (1.0 + lagrangian.penalty()));

    const double violation = lagrangian.max_violation(v);
    const double objective = relaxation_objective(g, v, problem.k);
    if (violation < opt.feasibility_tolerance && objective > best_feasible_objective) {
      best_feasible = v;
      best_feasible_objective = objective;
    }
    if (violation < opt.feasibility_tolerance && grad_norm <= final_tol &&
        std::abs(objective - previous_objective) <= opt.relative_tolerance * std::max(1.0, std::abs(objective))) {
      converged = true;
      break;
    }
    lagrangian.update_multipliers(v);
    if (violation >= opt.feasibility_tolerance && violation > 0.25 * previous_violation) {
      lagrangian.set_penalty(std::min(lagrangian.penalty() * opt.penalty_growth, opt.max_penalty));
    }
    inner_tol = std::max(final_tol, 0.1 * inner_tol);
    previous_violation = violation;
    previous_objective = objective;
    value = lagrangian.value(v);
    if (opt.record_trace) s.trace.segment_starts.push_back(s.trace.lagrangian.size());
  }

  s.iterations = iterations;
  s.converged = converged;
  s.vectors = (!converged && best_feasible.size() > 0) ? std::move(best_feasible) : std::move(v);
  finalize(s, g);
  return s;
}

SdpSolution load_gram(const WeightedGraph& g, const Eigen::MatrixXd& gram, int k) {
  check_k(k);
  const Eigen::Index n = gram.rows();
  if (gram.cols() != n) throw std::invalid_argument("Gram matrix is not square");
  if (static_cast<std::size_t>(n) != g.num_vertices()) {
    throw std::invalid_argument("Gram matrix has " + std::to_string(n) + " rows for a graph with " +
                                std::to_string(g.num_vertices()) + " vertices");
  }
  if ((gram - gram.transpose()).cwiseAbs().maxCoeff() > 1e-9) {
    throw std::invalid_argument("Gram matrix is not symmetric");
  }
  if ((gram.diagonal().array() - 1.0).abs().maxCoeff() > 1e-6) {
    throw std::invalid_argument("Gram matrix diagonal is not 1 within 1e-6");
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(0.5 * (gram + gram.transpose()));
  if (eig.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  const Eigen::VectorXd& values = eig.eigenvalues();  // ascending
  if (values(0) < -1e-6) {
    throw std::invalid_argument("Gram matrix has eigenvalue " + std::to_string(values(0)) + " below -1e-6");
  }
  const double cutoff = 1e-9 * std::max(1.0, values(n - 1));
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    if (values(i) > cutoff) ++rank;
  rank = std::max<Eigen::Index>(rank, 1);

  SdpSolution s;
  s.k = k;
  s.vectors.resize(n, rank);
  for (Eigen::Index c = 0; c < rank; ++c) {
    const Eigen::Index src = n - 1 - c;
    s.vectors.col(c) = eig.eigenvectors().col(src) * std::sqrt(std::max(values(src), 0.0));
  }
  RandomStream rng(0, 0, StreamPurpose::kSolverInit);
  normalize_rows(s.vectors, rng);
  finalize(s, g);
  return s;
}

FeasibilityReport validate(const SdpSolution& s, const WeightedGraph& g, int k) {
  check_k(k);
  if (s.num_vertices() != g.num_vertices()) {
    throw std::invalid_argument("solution has " + std::to_string(s.num_vertices()) + " vectors for " +
                                std::to_string(g.num_vertices()) + " vertices");
  }
  const double bound = dot_lower_bound(k);
  FeasibilityReport r;
  r.max_norm_violation = max_norm_violation(s.vectors);
  for (const Edge& e : g.edges()) {
    r.max_edge_dot_violation =
        std::max(r.max_edge_dot_violation, bound - s.vectors.row(e.u).dot(s.vectors.row(e.v)));
  }
  r.objective = relaxation_objective(g, s.vectors, k);
  const Eigen::Index n = s.vectors.rows();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) r.min_pair_dot = std::min(r.min_pair_dot, s.vectors.row(i).dot(s.vectors.row(j)));
  r.max_pair_dot_violation = std::max(0.0, bound - r.min_pair_dot);
  return r;
}

Eigen::MatrixXd parse_gram(std::istream& in) {
  in.imbue(std::locale::classic());
  long long n = 0;
  if (!(in >> n) || n <= 0) throw std::runtime_error("Gram file: expected a positive dimension on the first line");
  Eigen::MatrixXd m(n, n);
  for (long long i = 0; i < n; ++i) {
    for (long long j = 0; j < n; ++j) {
      if (!(in >> m(i, j))) {
        throw std::runtime_error("Gram file: missing or malformed entry at row " + std::to_string(i + 1) +
                                 ", column " + std::to_string(j + 1));
      }
    }
  }
  std::string extra;
  if (in >> extra) throw std::runtime_error("Gram file: trailing data '" + extra + "'");
  return m;
}

Eigen::MatrixXd read_gram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open Gram file '" + path + "'");
  return parse_gram(in);
}

}  // namespace maxkcut
