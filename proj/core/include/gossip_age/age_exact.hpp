#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gossip_age/graph.hpp"
#include "gossip_age/vertex_set.hpp"

namespace gossip_age {

/// Poisson rates of the gossip process. The source refreshes itself at
/// `source_rate` (lambda_e) and pushes to each of the n nodes at rate
/// gossip_rate / n; node i pushes to each neighbor at gossip_rate / deg(i).
struct GossipRates {
  double source_rate = 1.0;
  double gossip_rate = 1.0;

  void validate() const;
  /// u-normalization factor lambda / lambda_e.
  double normalization() const { return gossip_rate / source_rate; }
};

/// Largest order accepted by solve_exact (a 2^n table of doubles).
inline constexpr std::size_t kExactMaxOrder = 20;
/// Largest order accepted by monotonicity_check.
inline constexpr std::size_t kMonotonicityMaxOrder = 12;

/// Version age v(S) for every nonempty vertex subset S, indexed by bitmask
/// (bit i-1 for vertex label i). Entry 0 is never populated.
class SubsetAgeTable {
 public:
  SubsetAgeTable(std::size_t n, GossipRates rates, std::string graph_id, std::vector<double> ages);

  std::size_t order() const { return order_; }
  const GossipRates& rates() const { return rates_; }
  const std::string& graph_id() const { return graph_id_; }
  std::uint32_t full_mask() const { return static_cast<std::uint32_t>((std::uint64_t{1} << order_) - 1); }

  double age(std::uint32_t mask) const;
  double age(const VertexSet& s) const;

  /// Copy with one entry replaced; used to probe checkers with bad tables.
  SubsetAgeTable with_age(const VertexSet& s, double value) const;

  /// CSV `subset_bitmask,size,age`, one row per nonempty subset.
  void write_csv(std::ostream& out) const;

 private:
  std::size_t order_;
  GossipRates rates_;
  std::string graph_id_;
  std::vector<double> ages_;
};

/// Rate at which vertex i pushes into the set `mask`:
/// lambda * |N(i) & S| / deg(i), zero for isolated i.
double inflow_rate(const Graph& g, const GossipRates& rates, Vertex i, std::uint64_t mask);

/// Unrolls the subset recursion from the full set downwards:
///   v(S) = (lambda_e + sum_{i not in S} r_i(S) v(S+i)) / (lambda|S|/n + sum r_i(S)).
/// Requires g.order() <= kExactMaxOrder.
SubsetAgeTable solve_exact(const Graph& g, const GossipRates& rates);

/// |lambda_e - lambda_0(S) v(S) - sum_{i not in S} r_i(S) (v(S) - v(S+i))|.
double identity_residual(const Graph& g, const GossipRates& rates, const SubsetAgeTable& table,
                         const VertexSet& s);

struct MonotonicityReport {
  bool holds = true;
  /// max(0, max over candidate edges and subsets of v_{G+e}(S) - v_G(S)).
  double worst_violation = 0.0;
  std::optional<Edge> witness_edge;
  VertexSet witness_set;
  std::size_t candidates = 0;
};

/// Absolute slack for monotonicity comparisons.
inline constexpr double kMonotonicityTolerance = 1e-12;

/// For every non-edge e of g, checks v_{g+e}(S) <= v_g(S) + tol for all S.
MonotonicityReport monotonicity_check(const Graph& g, const GossipRates& rates);

struct CorollaryReport {
  bool holds = true;
  double lower = 0.0;  // clique singleton age
  double upper = 0.0;  // n * lambda_e / lambda
  double min_singleton = 0.0;
  double max_singleton = 0.0;
};

/// Finite-n sandwich v_{K_n}({i}) <= v({i}) <= n lambda_e / lambda for every
/// singleton, with relative slack 1e-12.
CorollaryReport corollary_bounds_check(const SubsetAgeTable& table, const GossipRates& rates);

}  // namespace gossip_age
