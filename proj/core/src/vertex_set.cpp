#include "gossip_age/vertex_set.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

namespace gossip_age {

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet VertexSet::from_labels(std::span<const std::uint64_t> labels, std::size_t n) {
  std::vector<Vertex> out;
  out.reserve(labels.size());
  for (auto label : labels) {
    if (label < 1 || label > n) {
      throw std::invalid_argument("vertex label " + std::to_string(label) + " outside 1.." +
                                  std::to_string(n));
    }
    out.push_back(static_cast<Vertex>(label - 1));
  }
  return VertexSet(std::move(out));
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  VertexSet s;
  s.members_ = std::move(out);
  return s;
}

VertexSet VertexSet::parse(const std::string& text, std::size_t n) {
  std::vector<std::uint64_t> labels;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find('+', pos);
    if (next == std::string::npos) next = text.size();
    std::uint64_t label = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + next;
    auto [ptr, ec] = std::from_chars(first, last, label);
    if (ec != std::errc() || ptr != last || first == last) {
      throw std::invalid_argument("malformed vertex set '" + text + "'");
    }
    labels.push_back(label);
    pos = next + 1;
  }
  return from_labels(labels, n);
}

VertexSet VertexSet::all(std::size_t n) {
  std::vector<Vertex> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Vertex>(i);
  VertexSet s;
  s.members_ = std::move(out);
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::uint64_t VertexSet::mask() const {
  std::uint64_t m = 0;
  for (auto v : members_) {
    if (v >= 64) throw std::out_of_range("vertex set does not fit a 64-bit mask");
    m |= std::uint64_t{1} << v;
  }
  return m;
}

VertexSet VertexSet::complement(std::size_t n) const {
  std::vector<Vertex> out;
  out.reserve(n - std::min(n, members_.size()));
  std::size_t k = 0;
  for (Vertex v = 0; v < n; ++v) {
    while (k < members_.size() && members_[k] < v) ++k;
    if (k < members_.size() && members_[k] == v) continue;
    out.push_back(v);
  }
  VertexSet s;
  s.members_ = std::move(out);
  return s;
}

std::string VertexSet::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < members_.size(); ++k) {
    if (k != 0) out += '+';
    out += std::to_string(members_[k] + 1);
  }
  return out;
}

}  // namespace gossip_age
