#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "maxkcut/graph.hpp"

namespace maxkcut {

struct SolverOptions {
  std::size_t max_iterations = 100000;  // gradient sweeps, accepted or not
  double relative_tolerance = 1e-7;     // objective change between multiplier updates
  double gradient_tolerance = 1e-5;     // tangent gradient norm, per unit of max weighted degree
  double feasibility_tolerance = 1e-6;  // max edge-dot violation
  double initial_penalty = 1.0;
  double penalty_growth = 10.0;
  double max_penalty = 1e8;
  bool record_trace = false;
};

/**
 * Max-k-Cut vector relaxation: unit vectors v_i maximizing
 * sum_ij w_ij (1 - v_i.v_j)(k-1)/k with v_i.v_j >= -1/(k-1) on edges.
 * rank == 0 picks min(n, ceil(sqrt(2m)) + 1).
 */
struct SdpProblem {
  const WeightedGraph& graph;
  int k;
  std::size_t rank = 0;
  SolverOptions options = {};
};

/// Ascent history. `lagrangian` has one entry per accepted step; a new
/// segment begins at each multiplier/penalty update.
struct SolverTrace {
  std::vector<double> lagrangian;
  std::vector<std::size_t> segment_starts;
  double initial_objective = 0.0;
};

struct SdpSolution {
  int k = 2;
  Eigen::MatrixXd vectors;  // n x d, one unit row per vertex
  double objective = 0.0;
  double max_norm_violation = 0.0;
  double max_dot_violation = 0.0;
  std::size_t iterations = 0;
  bool converged = true;
  std::uint64_t seed = 0;
  SolverTrace trace;

  std::size_t num_vertices() const { return static_cast<std::size_t>(vectors.rows()); }
  std::size_t dimension() const { return static_cast<std::size_t>(vectors.cols()); }
};

struct FeasibilityReport {
  double max_norm_violation = 0.0;
  double max_edge_dot_violation = 0.0;
  double objective = 0.0;
  // Informational: the relaxation states the dot bound for every pair.
  double min_pair_dot = 1.0;
  double max_pair_dot_violation = 0.0;
};

double dot_lower_bound(int k);
double relaxation_objective(const WeightedGraph& g, const Eigen::MatrixXd& vectors, int k);
std::size_t default_rank(const WeightedGraph& g);

SdpSolution solve(const SdpProblem& problem, std::uint64_t seed);

/// Factor a symmetric PSD unit-diagonal Gram matrix into unit vectors.
SdpSolution load_gram(const WeightedGraph& g, const Eigen::MatrixXd& gram, int k);

FeasibilityReport validate(const SdpSolution& s, const WeightedGraph& g, int k);

/// Text format: "n" then n rows of n decimals.
Eigen::MatrixXd parse_gram(std::istream& in);
Eigen::MatrixXd read_gram_file(const std::string& path);

}  // namespace maxkcut
