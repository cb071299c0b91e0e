#pragma once

#include <cstddef>
#include <vector>

namespace gossip_age {

/// Normalized ages u(i, j) = (lambda / lambda_e) v(S) on K_{L,R}, where S
/// holds i left and j right vertices. Entry (0, 0) is absent.
class BipartiteAgeGrid {
 public:
  BipartiteAgeGrid(std::size_t left, std::size_t right, std::vector<double> values);

  std::size_t left() const { return left_; }
  std::size_t right() const { return right_; }
  double at(std::size_t i, std::size_t j) const;

 private:
  std::size_t left_;
  std::size_t right_;
  std::vector<double> values_;
};

/// Backward induction over anti-diagonals i + j = n, n-1, ..., 1 of
///   u(i,j) = [1 + a u(i+1,j) + b u(i,j+1)] / [(i+j)/n + a + b],
///   a = (L-i) j / R,  b = (R-j) i / L.
/// Requires left, right >= 1.
BipartiteAgeGrid bipartite_grid(std::size_t left, std::size_t right);

struct BipartiteCorner {
  std::size_t n = 0;
  std::size_t left = 0;
  std::size_t right = 0;
  double u01 = 0.0;
  double u11 = 0.0;
  double u10 = 0.0;
};

/// Same recursion as bipartite_grid with two rolling diagonals, O(L) memory.
BipartiteCorner bipartite_corner(std::size_t left, std::size_t right);

/// u(j) for j = 1..n on the clique K_n, returned at index j - 1.
std::vector<double> clique_age(std::size_t n);

/// Normalized age n / |S| of a subset of the edgeless graph.
double empty_graph_age(std::size_t n, std::size_t subset_size);

struct Fact1Comparison {
  std::size_t left = 0;   // small network K_{left, right}
  std::size_t right = 0;  // large network is K_{2 left, 2 right}
  double u12_small = 0.0;
  double u12_large = 0.0;
  double u21_small = 0.0;
  double u21_large = 0.0;

  bool holds() const { return u12_small <= u12_large && u21_small <= u21_large; }
};

/// Compares K_{cn,(1-c)n} with its doubling K_{2cn,2(1-c)n}; cn is floored.
/// Requires both parts of the small network to have at least 2 vertices.
Fact1Comparison fact1_compare(double left_fraction, std::size_t n);

}  // namespace gossip_age
