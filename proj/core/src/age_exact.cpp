#include "gossip_age/age_exact.hpp"

#include <bit>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "gossip_age/age_structured.hpp"
#include "gossip_age/csv.hpp"
#include "gossip_age/error.hpp"

namespace gossip_age {

void GossipRates::validate() const {
  if (!(source_rate > 0.0) || !std::isfinite(source_rate)) {
    throw std::invalid_argument("source rate lambda_e must be positive");
  }
  if (!(gossip_rate > 0.0) || !std::isfinite(gossip_rate)) {
    throw std::invalid_argument("gossip rate lambda must be positive");
  }
}

SubsetAgeTable::SubsetAgeTable(std::size_t n, GossipRates rates, std::string graph_id,
                               std::vector<double> ages)
    : order_(n), rates_(rates), graph_id_(std::move(graph_id)), ages_(std::move(ages)) {
  if (ages_.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("SubsetAgeTable: table size must be 2^n");
  }
}

double SubsetAgeTable::age(std::uint32_t mask) const {
  if (mask == 0 || mask > full_mask()) {
    throw std::out_of_range("SubsetAgeTable: subset not in table");
  }
  return ages_[mask];
}

double SubsetAgeTable::age(const VertexSet& s) const {
  if (s.empty() || s.max_member() >= order_) {
    throw std::out_of_range("SubsetAgeTable: subset not in table");
  }
  return ages_[static_cast<std::uint32_t>(s.mask())];
}

SubsetAgeTable SubsetAgeTable::with_age(const VertexSet& s, double value) const {
  SubsetAgeTable copy = *this;
  (void)age(s);
  copy.ages_[static_cast<std::uint32_t>(s.mask())] = value;
  return copy;
}

void SubsetAgeTable::write_csv(std::ostream& out) const {
  CsvWriter csv(out, {"subset_bitmask", "size", "age"});
  for (std::uint32_t mask = 1; mask <= full_mask(); ++mask) {
    csv.row(mask, std::popcount(mask), ages_[mask]);
  }
}

double inflow_rate(const Graph& g, const GossipRates& rates, Vertex i, std::uint64_t mask) {
  const auto deg = g.degree(i);
  if (deg == 0) return 0.0;
  const int hits = std::popcount(g.neighbor_mask(i) & mask);
  return rates.gossip_rate * hits / static_cast<double>(deg);
}

SubsetAgeTable solve_exact(const Graph& g, const GossipRates& rates) {
  rates.validate();
  const std::size_t n = g.order();
  if (n > kExactMaxOrder) {
    throw InfeasibleSize("solve_exact: n = " + std::to_string(n) + " exceeds " +
                         std::to_string(kExactMaxOrder));
  }
  const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  std::vector<double> ages(std::size_t{1} << n, std::nan(""));
  ages[full] = rates.source_rate / rates.gossip_rate;

  std::vector<double> per_neighbor(n, 0.0);
  std::vector<std::uint32_t> nbr(n, 0);
  for (Vertex i = 0; i < n; ++i) {
    nbr[i] = static_cast<std::uint32_t>(g.neighbor_mask(i));
    if (g.degree(i) > 0) per_neighbor[i] = rates.gossip_rate / static_cast<double>(g.degree(i));
  }
  const double source_share = rates.gossip_rate / static_cast<double>(n);

  // S + i > S as integers, so descending mask order visits supersets first.
  for (std::uint32_t mask = full - 1; mask >= 1; --mask) {
    double numerator = rates.source_rate;
    double denominator = source_share * std::popcount(mask);
    std::uint32_t outside = full & ~mask;
    while (outside != 0) {
      const auto i = static_cast<Vertex>(std::countr_zero(outside));
      outside &= outside - 1;
      const int hits = std::popcount(nbr[i] & mask);
      if (hits == 0) continue;
      const double rate = per_neighbor[i] * hits;
      numerator += rate * ages[mask | (std::uint32_t{1} << i)];
      denominator += rate;
    }
    ages[mask] = numerator / denominator;
  }
  return SubsetAgeTable(n, rates, g.fingerprint(), std::move(ages));
}

double identity_residual(const Graph& g, const GossipRates& rates, const SubsetAgeTable& table,
                         const VertexSet& s) {
  if (table.order() != g.order()) throw std::invalid_argument("identity_residual: table/graph mismatch");
  const double v_s = table.age(s);
  const auto mask = static_cast<std::uint32_t>(s.mask());
  double rhs = rates.gossip_rate * static_cast<double>(s.size()) / static_cast<double>(g.order()) * v_s;
  for (Vertex i = 0; i < g.order(); ++i) {
    if (mask & (std::uint32_t{1} << i)) continue;
    const double rate = inflow_rate(g, rates, i, mask);
    if (rate == 0.0) continue;
    rhs += rate * (v_s - table.age(mask | (std::uint32_t{1} << i)));
  }
  return std::abs(rates.source_rate - rhs);
}

MonotonicityReport monotonicity_check(const Graph& g, const GossipRates& rates) {
  const std::size_t n = g.order();
  if (n > kMonotonicityMaxOrder) {
    throw InfeasibleSize("monotonicity_check: n = " + std::to_string(n) + " exceeds " +
                         std::to_string(kMonotonicityMaxOrder));
  }
  const SubsetAgeTable base = solve_exact(g, rates);
  MonotonicityReport report;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      ++report.candidates;
      const SubsetAgeTable added = solve_exact(g.with_edge(u, v), rates);
      for (std::uint32_t mask = 1; mask <= base.full_mask(); ++mask) {
        const double diff = added.age(mask) - base.age(mask);
        if (diff > report.worst_violation) {
          report.worst_violation = diff;
          report.witness_edge = Edge{u, v};
          report.witness_set = VertexSet::from_mask(mask);
        }
      }
    }
  }
  report.holds = report.worst_violation <= kMonotonicityTolerance;
  return report;
}

CorollaryReport corollary_bounds_check(const SubsetAgeTable& table, const GossipRates& rates) {
  const std::size_t n = table.order();
  CorollaryReport r;
  const double scale = rates.source_rate / rates.gossip_rate;
  r.lower = clique_age(n).front() * scale;
  r.upper = static_cast<double>(n) * scale;
  r.min_singleton = table.age(1u);
  r.max_singleton = r.min_singleton;
  for (Vertex i = 0; i < n; ++i) {
    const double v = table.age(std::uint32_t{1} << i);
    r.min_singleton = std::min(r.min_singleton, v);
    r.max_singleton = std::max(r.max_singleton, v);
  }
  constexpr double kSlack = 1e-12;
  r.holds = r.min_singleton >= r.lower * (1.0 - kSlack) && r.max_singleton <= r.upper * (1.0 + kSlack);
  return r;
}

}  // namespace gossip_age
