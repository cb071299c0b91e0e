#pragma once

#include <cstdint>
#include <random>

namespace gossip_age {

/// One SplitMix64 step. Advances `state` and returns the mixed output.
std::uint64_t splitmix64(std::uint64_t& state);

/// Derives an independent child seed from a base seed and a stream path.
/// Used for replication seeds: derive_seed(base, replication, purpose).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index = 0);

/// Seedable generator over std::mt19937_64. Every draw goes through the
/// helpers below (not <random> distributions) so streams are bit-identical
/// across standard library implementations.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer on [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Exponential variate with the given rate (> 0).
  double exponential(double rate);

  /// Child generator for an independent sub-stream.
  Rng split(std::uint64_t stream);

 private:
  std::mt19937_64 engine_;
};

}  // namespace gossip_age
