#pragma once

#include <Eigen/Dense>

#include "maxkcut/graph.hpp"

namespace maxkcut {

/// The k unit vectors of the regular simplex in R^{k-1}, pairwise dot -1/(k-1).
class SimplexVertices {
 public:
  explicit SimplexVertices(int k);

  int k() const { return k_; }
  int dimension() const { return k_ - 1; }

  /// Row j is vertex w_j.
  const Eigen::MatrixXd& vertices() const { return vertices_; }
  Eigen::VectorXd vertex(int j) const { return vertices_.row(j).transpose(); }

  /// argmax_j w_j . z; ties go to the lowest index.
  Label nearest_vertex(const Eigen::Ref<const Eigen::VectorXd>& z) const;

 private:
  int k_;
  Eigen::MatrixXd vertices_;
};

inline SimplexVertices build_simplex(int k) { return SimplexVertices(k); }

}  // namespace maxkcut
