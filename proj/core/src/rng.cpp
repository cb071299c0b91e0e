#include "gossip_age/rng.hpp"

#include <cmath>

namespace gossip_age {
namespace {
__extension__ typedef unsigned __int128 u128;
}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index) {
  std::uint64_t state = base;
  std::uint64_t h = splitmix64(state);
  state = h ^ (stream * 0xd1342543de82ef95ULL);
  h = splitmix64(state);
  state = h ^ (index * 0xaf251af3b0f025b5ULL);
  return splitmix64(state);
}

Rng::Rng(std::uint64_t seed) {
  std::uint64_t state = seed;
  engine_.seed(splitmix64(state));
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Lemire's multiply-and-reject; unbiased for every bound.
  u128 product = static_cast<u128>(engine_()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<u128>(engine_()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

double Rng::exponential(double rate) {
  // 1 - uniform() lies in (0, 1], so the log is finite.
  return -std::log1p(-uniform()) / rate;
}

Rng Rng::split(std::uint64_t stream) { return Rng(derive_seed(engine_(), stream)); }

}  // namespace gossip_age
