#include "maxkcut/simplex.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace maxkcut {

// Vertex 0 of the k-simplex is e_1. The remaining k-1 vertices share first
// coordinate -1/(k-1) and carry the (k-1)-simplex, scaled by
// sqrt(1 - 1/(k-1)^2), in the trailing coordinates. Built from k = 2 upwards.
SimplexVertices::SimplexVertices(int k) : k_(k) {
  if (k < 2) throw std::invalid_argument("simplex needs k >= 2, got " + std::to_string(k));
  vertices_ = Eigen::MatrixXd::Zero(k, k - 1);
  // Base case {+1, -1} in the bottom-right corner.
  vertices_(k - 2, k - 2) = 1.0;
  vertices_(k - 1, k - 2) = -1.0;
  for (int size = 3; size <= k; ++size) {
    // The (size-1)-simplex occupies rows [top+1, k) and columns [top+1, k-1).
    const int top = k - size;
    const double first = -1.0 / (size - 1);
    vertices_.block(top + 1, top + 1, size - 1, size - 2) *= std::sqrt(1.0 - first * first);
    vertices_.block(top + 1, top, size - 1, 1).setConstant(first);
    vertices_(top, top) = 1.0;
  }
  vertices_.rowwise().normalize();
}

Label SimplexVertices::nearest_vertex(const Eigen::Ref<const Eigen::VectorXd>& z) const {
  if (z.size() != dimension()) {
    throw std::invalid_argument("expected a vector of dimension " + std::to_string(dimension()) + ", got " +
                                std::to_string(z.size()));
  }
  Label best = 0;
  double best_dot = vertices_.row(0).dot(z);
  for (int j = 1; j < k_; ++j) {
    const double d = vertices_.row(j).dot(z);
    if (d > best_dot) {
      best_dot = d;
      best = j;
    }
  }
  return best;
}

}  // namespace maxkcut
