#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gossip_age/age_exact.hpp"
#include "gossip_age/graph.hpp"
#include "gossip_age/vertex_set.hpp"

namespace gossip_age {

struct SimConfig {
  GossipRates rates;
  double t_end = 2e5;
  /// Fraction of the horizon discarded before averaging starts.
  double burn_in = 0.1;
  /// Equal-length batches over the averaging window, for batch-means errors.
  std::size_t batches = 20;
  std::uint64_t seed = 0;
  std::vector<VertexSet> tracked_sets;
  /// Adds a tracked quantity "avg" = (1/n) sum_j X_j(t).
  bool track_network_average = false;
  /// Fills SimEstimate::vertex_mean_age with every vertex's time average.
  bool track_vertices = false;
  /// Optional per-event CSV trace `t,event_class,actor,target,source_counter`.
  std::ostream* trace = nullptr;
};

struct TrackedEstimate {
  std::string label;  // "1+2" for a set, "avg" for the network average
  double mean_age = 0.0;
  double batch_std = 0.0;  // standard error of the mean from batch means
};

struct SimEstimate {
  std::vector<TrackedEstimate> sets;
  std::vector<double> vertex_mean_age;
  std::uint64_t events = 0;
  std::uint64_t versions_generated = 0;
  double t_end = 0.0;

  const TrackedEstimate& find(const std::string& label) const;
  /// CSV `set,mean_age,batch_std,events`.
  void write_csv(std::ostream& out) const;
};

/// Event-driven simulation of the gossip process from all-zero counters.
/// One exponential clock at total rate lambda_e + lambda + lambda * #{deg > 0}
/// picks, in proportion to rate: a source refresh, a source push to a
/// uniform node, or a push from a uniform non-isolated node to a uniform
/// neighbor. Ages X_S = source - max_{j in S} counter_j are piecewise
/// constant and integrated exactly between events.
SimEstimate simulate(const Graph& g, const SimConfig& cfg);

/// simulate() tracking only the network average (1/n) sum_i X_i.
SimEstimate average_network_age(const Graph& g, SimConfig cfg);

/// Merges independent replications of the same tracked quantities: means
/// are averaged and standard errors pooled as sqrt(sum se^2) / R.
SimEstimate pool_estimates(const std::vector<SimEstimate>& runs);

}  // namespace gossip_age
