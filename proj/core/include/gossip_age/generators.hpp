#pragma once

#include <cstdint>

#include "gossip_age/graph.hpp"

namespace gossip_age {

/// Erdos-Renyi G(n, p): each of the C(n,2) pairs independently with
/// probability p. Uses geometric skipping, so cost is O(n + m).
Graph gen_gnp(std::size_t n, double p, std::uint64_t seed);

/// Uniform random simple d-regular graph via the pairing model, restarting
/// whenever a pairing produces a self-loop or a repeated edge.
Graph gen_random_regular(std::size_t n, std::size_t d, std::uint64_t seed);

}  // namespace gossip_age
