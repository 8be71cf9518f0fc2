#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace maxkcut::cli {

struct CheckResult {
  std::string name;
  bool passed = false;
  double statistic = 0.0;
  double tolerance = 0.0;
  std::size_t samples = 0;
  std::string detail;
};

struct VerifyOptions {
  std::vector<std::string> checks;  // empty: all
  std::size_t samples = 1000000;
  std::uint64_t seed = 1;
};

std::vector<std::string> available_checks();
std::vector<CheckResult> run_checks(const VerifyOptions& options);

/// |MC - angle_cdf(r, delta)| against three binomial standard errors.
CheckResult check_cdf_point(double r, double delta, std::size_t samples, std::uint64_t seed);

}  // namespace maxkcut::cli
