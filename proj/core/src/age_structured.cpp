#include "gossip_age/age_structured.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gossip_age {

BipartiteAgeGrid::BipartiteAgeGrid(std::size_t left, std::size_t right, std::vector<double> values)
    : left_(left), right_(right), values_(std::move(values)) {
  if (values_.size() != (left + 1) * (right + 1)) {
    throw std::invalid_argument("BipartiteAgeGrid: value count must be (L+1)(R+1)");
  }
}

double BipartiteAgeGrid::at(std::size_t i, std::size_t j) const {
  if (i > left_ || j > right_ || (i == 0 && j == 0)) {
    throw std::out_of_range("BipartiteAgeGrid: (" + std::to_string(i) + "," + std::to_string(j) +
                            ") is not a nonempty subset shape");
  }
  return values_[i * (right_ + 1) + j];
}

BipartiteAgeGrid bipartite_grid(std::size_t left, std::size_t right) {
  if (left == 0 || right == 0) {
    throw std::invalid_argument("bipartite_grid: both parts must be nonempty (use empty_graph_age)");
  }
  const std::size_t n = left + right;
  const auto L = static_cast<double>(left);
  const auto R = static_cast<double>(right);
  const auto N = static_cast<double>(n);
  const std::size_t stride = right + 1;
  std::vector<double> u((left + 1) * stride, std::nan(""));
  u[left * stride + right] = 1.0;

  for (std::size_t s = n - 1; s >= 1; --s) {
    const std::size_t i_lo = s > right ? s - right : 0;
    const std::size_t i_hi = std::min(left, s);
    for (std::size_t i = i_lo; i <= i_hi; ++i) {
      const std::size_t j = s - i;
      const double a = static_cast<double>(left - i) * static_cast<double>(j) / R;
      const double b = static_cast<double>(right - j) * static_cast<double>(i) / L;
      double numerator = 1.0;
      if (a > 0.0) numerator += a * u[(i + 1) * stride + j];
      if (b > 0.0) numerator += b * u[i * stride + j + 1];
      u[i * stride + j] = numerator / (static_cast<double>(s) / N + a + b);
    }
  }
  return BipartiteAgeGrid(left, right, std::move(u));
}

BipartiteCorner bipartite_corner(std::size_t left, std::size_t right) {
  if (left == 0 || right == 0) {
    throw std::invalid_argument("bipartite_corner: both parts must be nonempty");
  }
  const std::size_t n = left + right;
  const auto L = static_cast<double>(left);
  const auto R = static_cast<double>(right);
  const auto N = static_cast<double>(n);
  // prev holds diagonal s+1, cur diagonal s, both indexed by i.
  std::vector<double> prev(left + 1, std::nan(""));
  std::vector<double> cur(left + 1, std::nan(""));
  prev[left] = 1.0;
  BipartiteCorner out{n, left, right, 1.0, 1.0, 1.0};
  if (n == 2) out.u11 = 1.0;

  for (std::size_t s = n - 1; s >= 1; --s) {
    const std::size_t i_lo = s > right ? s - right : 0;
    const std::size_t i_hi = std::min(left, s);
    for (std::size_t i = i_lo; i <= i_hi; ++i) {
      const std::size_t j = s - i;
      const double a = static_cast<double>(left - i) * static_cast<double>(j) / R;
      const double b = static_cast<double>(right - j) * static_cast<double>(i) / L;
      double numerator = 1.0;
      if (a > 0.0) numerator += a * prev[i + 1];
      if (b > 0.0) numerator += b * prev[i];
      cur[i] = numerator / (static_cast<double>(s) / N + a + b);
    }
    if (s == 2) out.u11 = cur[1];
    if (s == 1) {
      out.u01 = cur[0];
      out.u10 = cur[1];
    }
    std::swap(prev, cur);
  }
  return out;
}

std::vector<double> clique_age(std::size_t n) {
  if (n == 0) throw std::invalid_argument("clique_age: n must be >= 1");
  std::vector<double> u(n, 1.0);
  const auto N = static_cast<double>(n);
  for (std::size_t j = n - 1; j >= 1; --j) {
    const auto J = static_cast<double>(j);
    const double inflow = (N - J) * J / (N - 1.0);
    u[j - 1] = (1.0 + inflow * u[j]) / (J / N + inflow);
  }
  return u;
}

double empty_graph_age(std::size_t n, std::size_t subset_size) {
  if (subset_size < 1 || subset_size > n) {
    throw std::invalid_argument("empty_graph_age: subset size must lie in 1..n");
  }
  return static_cast<double>(n) / static_cast<double>(subset_size);
}

Fact1Comparison fact1_compare(double left_fraction, std::size_t n) {
  if (!(left_fraction > 0.0 && left_fraction < 1.0)) {
    throw std::invalid_argument("fact1_compare: fraction must lie in (0, 1)");
  }
  const auto left = static_cast<std::size_t>(std::floor(left_fraction * static_cast<double>(n)));
  if (left < 2 || left + 2 > n) {
    throw std::invalid_argument("fact1_compare: both parts need at least 2 vertices");
  }
  const std::size_t right = n - left;
  const auto small = bipartite_grid(left, right);
  const auto large = bipartite_grid(2 * left, 2 * right);
  return {left, right, small.at(1, 2), large.at(1, 2), small.at(2, 1), large.at(2, 1)};
}

}  // namespace gossip_age
