#pragma once

#include <cstdint>

#include "gossip_age/graph.hpp"
#include "gossip_age/vertex_set.hpp"

namespace gossip_age {

/// Largest order accepted by cheeger_bruteforce (2^n subsets).
inline constexpr std::size_t kCheegerMaxOrder = 24;

/// Number of edges with exactly one endpoint in s. Throws on empty s or
/// members outside the graph.
std::size_t edge_boundary(const Graph& g, const VertexSet& s);

/// Edge expansion h = |boundary| / |set| with the set that attains it.
struct ExpansionReport {
  std::size_t boundary = 0;
  std::size_t set_size = 0;
  VertexSet argmin_set;
  std::uint64_t subsets_examined = 0;

  double h() const { return static_cast<double>(boundary) / static_cast<double>(set_size); }
};

/// Exact h(G) = min over nonempty S with |S| <= n/2 of |dS|/|S|.
/// Walks all subsets in Gray-code order with O(1) boundary updates.
/// Requires 2 <= n <= kCheegerMaxOrder.
ExpansionReport cheeger_bruteforce(const Graph& g);

/// Minimum of |dS|/|S| over `samples` random subsets (half uniform,
/// half grown breadth-first from a random root). An upper estimate of h.
ExpansionReport sampled_expansion(const Graph& g, std::size_t samples, std::uint64_t seed);

struct StructureReport {
  std::size_t isolated_count = 0;
  bool is_connected = false;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::size_t largest_component_size = 0;

  friend bool operator==(const StructureReport&, const StructureReport&) = default;
};

StructureReport structure_report(const Graph& g);

struct ConcentrationReport {
  std::size_t trials = 0;
  std::size_t inside = 0;
  double fraction() const {
    return trials == 0 ? 0.0 : static_cast<double>(inside) / static_cast<double>(trials);
  }
};

/// Samples `trials` subsets (size k uniform on 1..n/2, then a uniform
/// k-subset) and counts how many have |dS| strictly inside
/// ((1-delta)E, (1+delta)E) with E = k(n-k)p. When E = 0 the band is {0}.
ConcentrationReport boundary_concentration_check(const Graph& g, double delta, double p,
                                                 std::size_t trials, std::uint64_t seed);

}  // namespace gossip_age
