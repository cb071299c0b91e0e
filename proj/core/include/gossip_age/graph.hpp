#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gossip_age/vertex_set.hpp"

namespace gossip_age {

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1, stored as
/// compressed sorted adjacency. Graphs with n <= 64 also carry per-vertex
/// neighbor bitmasks for the subset solvers.
class Graph {
 public:
  /// Validates and canonicalizes `edges` (u < v). Throws std::invalid_argument
  /// on self-loops, duplicate edges or out-of-range endpoints.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return order_; }
  std::size_t size() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  bool has_masks() const { return !masks_.empty(); }
  /// Neighbor bitmask of v; requires order() <= 64.
  std::uint64_t neighbor_mask(Vertex v) const { return masks_[v]; }

  Graph with_edge(Vertex u, Vertex v) const;

  /// Short provenance string: order, size and a hash of the edge list.
  std::string fingerprint() const;

 private:
  std::size_t order_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
  std::vector<std::uint64_t> masks_;
};

// Deterministic topologies.
Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
/// K_{L,R}; the left part is vertices 0..L-1 (labels 1..L).
Graph complete_bipartite(std::size_t left, std::size_t right);
/// Builds from 1-based edges, as read from user input.
Graph from_labeled_edges(std::size_t n, std::span<const std::pair<std::uint64_t, std::uint64_t>> edges);

enum class Topology { complete, empty, cycle, path, star, complete_bipartite };

struct TopologyParams {
  std::size_t n = 0;
  std::size_t left = 0;  // complete_bipartite only
};

/// Named builder. For complete_bipartite, left + right must equal n.
Graph build_named(Topology kind, const TopologyParams& params);
Topology parse_topology(const std::string& name);

// Edge-list text format: first line "n m", then m lines "u v" with
// 1 <= u < v <= n.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace gossip_age
