#include "gossip_age/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "gossip_age/rng.hpp"

namespace gossip_age {

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gen_gnp: p must lie in [0, 1]");
  if (n == 0) throw std::invalid_argument("gen_gnp: n must be >= 1");
  if (p == 0.0) return empty_graph(n);
  if (p == 1.0) return complete_graph(n);

  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(p * static_cast<double>(n) * static_cast<double>(n - 1) / 2 * 1.1) + 16);
  const double log_q = std::log1p(-p);
  // Walk the lower triangle (v, w), w < v, in row-major order, jumping over
  // geometrically distributed runs of absent pairs.
  std::uint64_t v = 1;
  double w = -1.0;
  while (v < n) {
    const double skip = std::floor(std::log1p(-rng.uniform()) / log_q);
    w += 1.0 + skip;
    while (w >= static_cast<double>(v) && v < n) {
      w -= static_cast<double>(v);
      ++v;
    }
    if (v < n) edges.push_back({static_cast<Vertex>(w), static_cast<Vertex>(v)});
  }
  return Graph(n, edges);
}

Graph gen_random_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (d < 1) throw std::invalid_argument("gen_random_regular: d must be >= 1");
  if (d >= n) throw std::invalid_argument("gen_random_regular: need d < n");
  if ((n * d) % 2 != 0) throw std::invalid_argument("gen_random_regular: n*d must be even");

  Rng rng(seed);
  const std::size_t points = n * d;
  std::vector<Vertex> owner(points);
  std::vector<Edge> edges(points / 2);
  constexpr int kMaxAttempts = 1 << 20;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    for (std::size_t k = 0; k < points; ++k) owner[k] = static_cast<Vertex>(k / d);
    for (std::size_t k = points - 1; k > 0; --k) {
      std::swap(owner[k], owner[rng.below(k + 1)]);
    }
    bool simple = true;
    for (std::size_t k = 0; k < points / 2; ++k) {
      Vertex a = owner[2 * k];
      Vertex b = owner[2 * k + 1];
      if (a == b) {
        simple = false;
        break;
      }
      edges[k] = a < b ? Edge{a, b} : Edge{b, a};
    }
    if (!simple) continue;
    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    return Graph(n, sorted);
  }
  throw std::runtime_error("gen_random_regular: pairing model did not produce a simple graph");
}

}  // namespace gossip_age
