#pragma once

#include <cstdint>
#include <limits>
#include <optional>

namespace maxkcut {

// Purpose tags for RNG streams. Every random quantity is drawn from a stream
// keyed by (seed, trial, purpose), so any single trial can be replayed or run
// out of order without touching the others.
enum class StreamPurpose : std::uint64_t {
  kSolverInit = 1,
  kGaussian = 2,
  kOffset = 3,
  kLabels = 4,
  kOracle = 5,
};

std::uint64_t splitmix64(std::uint64_t x);

std::uint64_t stream_key(std::uint64_t seed, std::uint64_t trial, StreamPurpose purpose);

// SplitMix64 sequence. Satisfies UniformRandomBitGenerator; all derived
// variates (uniform reals, integers, normals) are computed here rather than
// through <random> distributions so results are identical across standard
// library implementations.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  explicit RandomStream(std::uint64_t key) : state_(key) {}
  RandomStream(std::uint64_t seed, std::uint64_t trial, StreamPurpose purpose)
      : state_(stream_key(seed, trial, purpose)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();

  /// Uniform integer in [0, bound), unbiased (rejection sampling).
  std::uint64_t below(std::uint64_t bound);

  /// Standard normal via Box-Muller; the second variate of each pair is cached.
  double normal();

 private:
  std::uint64_t state_;
  std::optional<double> spare_;
};

}  // namespace maxkcut
