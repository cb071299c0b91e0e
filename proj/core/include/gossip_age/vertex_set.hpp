#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gossip_age {

/// Internal vertex index, 0-based. Labels shown to users are index + 1.
using Vertex = std::uint32_t;

/// A canonical (sorted, deduplicated) subset of vertices.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> members);
  VertexSet(std::initializer_list<Vertex> members);

  /// Builds a set from 1-based labels, rejecting labels outside 1..n.
  static VertexSet from_labels(std::span<const std::uint64_t> labels, std::size_t n);
  static VertexSet from_mask(std::uint64_t mask);
  /// Parses "1+3+4" (1-based labels).
  static VertexSet parse(const std::string& text, std::size_t n);
  static VertexSet all(std::size_t n);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  std::span<const Vertex> members() const { return members_; }
  Vertex max_member() const { return members_.back(); }

  /// Bitmask with bit v set for each member. Members must all be < 64.
  std::uint64_t mask() const;
  VertexSet complement(std::size_t n) const;

  /// "1+3+4" in 1-based labels.
  std::string to_string() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

}  // namespace gossip_age
