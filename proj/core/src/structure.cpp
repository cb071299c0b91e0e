#include "gossip_age/structure.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>
#include <vector>

#include "gossip_age/error.hpp"
#include "gossip_age/rng.hpp"

namespace gossip_age {
namespace {

std::size_t boundary_of(const Graph& g, const std::vector<char>& in_set,
                        std::span<const Vertex> members) {
  std::size_t count = 0;
  for (auto v : members)
    for (auto w : g.neighbors(v))
      if (!in_set[w]) ++count;
  return count;
}

// Uniform k-subset via partial Fisher-Yates over a scratch permutation.
void sample_subset(Rng& rng, std::vector<Vertex>& scratch, std::size_t k) {
  const std::size_t n = scratch.size();
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(scratch[i], scratch[i + rng.below(n - i)]);
  }
}

}  // namespace

std::size_t edge_boundary(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("edge_boundary: set must be nonempty");
  if (s.max_member() >= g.order()) throw std::invalid_argument("edge_boundary: set not in graph");
  std::vector<char> in_set(g.order(), 0);
  for (auto v : s.members()) in_set[v] = 1;
  return boundary_of(g, in_set, s.members());
}

ExpansionReport cheeger_bruteforce(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kCheegerMaxOrder) {
    throw InfeasibleSize("cheeger_bruteforce: n = " + std::to_string(n) + " exceeds " +
                         std::to_string(kCheegerMaxOrder));
  }
  if (n < 2) throw std::invalid_argument("cheeger_bruteforce: needs n >= 2");

  ExpansionReport best;
  std::uint64_t set = 0;
  std::size_t size = 0;
  std::size_t boundary = 0;
  std::uint64_t best_mask = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < total; ++k) {
    const auto v = static_cast<Vertex>(std::countr_zero(k));
    const std::uint64_t bit = std::uint64_t{1} << v;
    const std::uint64_t nb = g.neighbor_mask(v);
    const auto deg = g.degree(v);
    if (set & bit) {
      set ^= bit;
      --size;
      boundary -= deg - 2 * static_cast<std::size_t>(std::popcount(nb & set));
    } else {
      boundary += deg - 2 * static_cast<std::size_t>(std::popcount(nb & set));
      set ^= bit;
      ++size;
    }
    if (2 * size > n) continue;
    ++best.subsets_examined;
    if (best.set_size == 0 || boundary * best.set_size < best.boundary * size) {
      best.boundary = boundary;
      best.set_size = size;
      best_mask = set;
    }
  }
  best.argmin_set = VertexSet::from_mask(best_mask);
  return best;
}

ExpansionReport sampled_expansion(const Graph& g, std::size_t samples, std::uint64_t seed) {
  const std::size_t n = g.order();
  if (n < 2) throw std::invalid_argument("sampled_expansion: needs n >= 2");
  if (samples == 0) throw std::invalid_argument("sampled_expansion: needs samples >= 1");
  Rng rng(seed);
  std::vector<Vertex> scratch(n);
  std::vector<char> in_set(n, 0);
  std::vector<Vertex> members;
  ExpansionReport best;
  for (std::size_t t = 0; t < samples; ++t) {
    const std::size_t k = 1 + rng.below(n / 2);
    members.clear();
    if (t % 2 == 0) {
      for (std::size_t i = 0; i < n; ++i) scratch[i] = static_cast<Vertex>(i);
      sample_subset(rng, scratch, k);
      members.assign(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(k));
      for (auto v : members) in_set[v] = 1;
    } else {
      std::queue<Vertex> frontier;
      while (members.size() < k) {
        if (frontier.empty()) {
          Vertex root = static_cast<Vertex>(rng.below(n));
          while (in_set[root]) root = static_cast<Vertex>((root + 1) % n);
          in_set[root] = 1;
          members.push_back(root);
          frontier.push(root);
          continue;
        }
        const Vertex v = frontier.front();
        frontier.pop();
        for (auto w : g.neighbors(v)) {
          if (members.size() >= k) break;
          if (in_set[w]) continue;
          in_set[w] = 1;
          members.push_back(w);
          frontier.push(w);
        }
      }
    }
    const std::size_t boundary = boundary_of(g, in_set, members);
    ++best.subsets_examined;
    if (best.set_size == 0 || boundary * best.set_size < best.boundary * k) {
      best.boundary = boundary;
      best.set_size = k;
      best.argmin_set = VertexSet(members);
    }
    for (auto v : members) in_set[v] = 0;
  }
  return best;
}

StructureReport structure_report(const Graph& g) {
  const std::size_t n = g.order();
  StructureReport r;
  r.min_degree = g.degree(0);
  for (Vertex v = 0; v < n; ++v) {
    const auto deg = g.degree(v);
    if (deg == 0) ++r.isolated_count;
    r.min_degree = std::min(r.min_degree, deg);
    r.max_degree = std::max(r.max_degree, deg);
  }
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack;
  std::size_t components = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    ++components;
    std::size_t comp = 0;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      ++comp;
      for (auto w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    r.largest_component_size = std::max(r.largest_component_size, comp);
  }
  r.is_connected = components == 1;
  return r;
}

ConcentrationReport boundary_concentration_check(const Graph& g, double delta, double p,
                                                 std::size_t trials, std::uint64_t seed) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("boundary_concentration_check: delta must lie in (0, 1)");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("boundary_concentration_check: p must lie in [0, 1]");
  }
  const std::size_t n = g.order();
  if (n < 2) throw std::invalid_argument("boundary_concentration_check: needs n >= 2");

  Rng rng(seed);
  std::vector<Vertex> scratch(n);
  for (std::size_t i = 0; i < n; ++i) scratch[i] = static_cast<Vertex>(i);
  std::vector<char> in_set(n, 0);
  ConcentrationReport report;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t k = 1 + rng.below(n / 2);
    sample_subset(rng, scratch, k);
    std::span<const Vertex> members(scratch.data(), k);
    for (auto v : members) in_set[v] = 1;
    const auto boundary = static_cast<double>(boundary_of(g, in_set, members));
    for (auto v : members) in_set[v] = 0;

    const double expected = static_cast<double>(k) * static_cast<double>(n - k) * p;
    const bool inside = expected == 0.0
                            ? boundary == 0.0
                            : boundary > (1.0 - delta) * expected && boundary < (1.0 + delta) * expected;
    ++report.trials;
    if (inside) ++report.inside;
  }
  return report;
}

}  // namespace gossip_age
