#include <cmath>

#include <gtest/gtest.h>

#include "maxkcut/random.hpp"
#include "maxkcut/simplex.hpp"

namespace maxkcut {
namespace {

TEST(Simplex, KTwoIsPlusMinusOne) {
  const SimplexVertices s(2);
  ASSERT_EQ(s.dimension(), 1);
  EXPECT_DOUBLE_EQ(s.vertices()(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(s.vertices()(1, 0), -1.0);
}

TEST(Simplex, KThreeIsPlanarTriangle) {
  const SimplexVertices s(3);
  ASSERT_EQ(s.vertices().cols(), 2);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) EXPECT_NEAR(s.vertex(i).dot(s.vertex(j)), -0.5, 1e-12);
}

TEST(Simplex, InvariantsUpToTwenty) {
  for (int k = 2; k <= 20; ++k) {
    const SimplexVertices s(k);
    ASSERT_EQ(s.vertices().rows(), k);
    ASSERT_EQ(s.vertices().cols(), k - 1);
    for (int i = 0; i < k; ++i) {
      EXPECT_NEAR(s.vertex(i).norm(), 1.0, 1e-12) << "k=" << k;
      for (int j = i + 1; j < k; ++j) EXPECT_NEAR(s.vertex(i).dot(s.vertex(j)), -1.0 / (k - 1), 1e-12) << "k=" << k;
    }
    EXPECT_LT(s.vertices().colwise().sum().norm(), 1e-10) << "k=" << k;
  }
}

TEST(Simplex, Deterministic) {
  EXPECT_EQ(SimplexVertices(7).vertices(), SimplexVertices(7).vertices());
}

TEST(Simplex, RejectsSmallK) { EXPECT_THROW(SimplexVertices(1), std::invalid_argument); }

TEST(NearestVertex, Examples) {
  const SimplexVertices s(4);
  for (int j = 0; j < 4; ++j) EXPECT_EQ(s.nearest_vertex(s.vertex(j)), j);
  EXPECT_EQ(s.nearest_vertex(Eigen::VectorXd::Zero(3)), 0);

  const SimplexVertices t(3);
  const Eigen::VectorXd mid = 0.5 * (t.vertex(0) + t.vertex(1));
  // Exact tie between 0 and 1 resolves low; a nudge towards w_0 is decisive.
  EXPECT_EQ(t.nearest_vertex(mid + 1e-9 * t.vertex(0)), 0);
  EXPECT_EQ(t.nearest_vertex(mid + 1e-9 * t.vertex(1)), 1);
  EXPECT_THROW(t.nearest_vertex(Eigen::VectorXd::Zero(3)), std::invalid_argument);
}

TEST(NearestVertex, PositiveScalingInvariance) {
  RandomStream rng(3);
  const SimplexVertices s(5);
  for (int t = 0; t < 1000; ++t) {
    Eigen::VectorXd z(4);
    for (int i = 0; i < 4; ++i) z(i) = rng.normal();
    const double c = 1e-3 + 100.0 * rng.uniform();
    EXPECT_EQ(s.nearest_vertex(z), s.nearest_vertex(c * z));
  }
}

TEST(NearestVertex, GaussianLabelsAreUniform) {
  for (int k : {3, 4, 6}) {
    const SimplexVertices s(k);
    RandomStream rng(11, 0, StreamPurpose::kOracle);
    const int samples = 200000;
    std::vector<int> counts(k, 0);
    Eigen::VectorXd z(k - 1);
    for (int t = 0; t < samples; ++t) {
      for (int i = 0; i < k - 1; ++i) z(i) = rng.normal();
      ++counts[s.nearest_vertex(z)];
    }
    const double p = 1.0 / k;
    const double sigma = std::sqrt(p * (1 - p) / samples);
    for (int j = 0; j < k; ++j) EXPECT_NEAR(counts[j] / double(samples), p, 3 * sigma) << "k=" << k << " j=" << j;
  }
}

}  // namespace
}  // namespace maxkcut
