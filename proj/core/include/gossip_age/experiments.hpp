#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gossip_age/age_exact.hpp"
#include "gossip_age/graph.hpp"

namespace gossip_age {

enum class ExperimentKind {
  bipartite_scaling,
  clique_scaling,
  dreg_scaling,
  gnp_threshold,
  sim_vs_exact,
  monotonicity_sweep,
  isolated_vertices,
};

ExperimentKind parse_experiment_kind(const std::string& name);
std::string to_string(ExperimentKind kind);

/// Seeded experiment description. Replication r of grid point n uses seeds
/// derived from (base_seed, n, r) only, never from scheduling.
struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::bipartite_scaling;
  std::vector<std::size_t> n_grid;
  std::size_t replications = 20;
  std::uint64_t base_seed = 1;
  GossipRates rates;
  std::string output_path;

  // bipartite_scaling
  std::vector<std::string> regimes{"one", "sqrt", "power", "half"};
  double alpha = 0.5;
  // gnp_threshold
  std::vector<double> c_grid{0.5, 1.0, 2.0, 4.0, 8.0};
  // dreg_scaling
  std::size_t degree = 3;
  std::size_t expansion_samples = 0;
  bool empty_control = false;
  // isolated_vertices
  double d_exponent = 0.75;
  // simulation knobs; t_end = 0 picks the kind's default horizon
  double t_end = 0.0;
  double burn_in = 0.1;
  std::size_t batches = 20;
  /// 0 = worker_count() default.
  std::size_t threads = 0;

  void validate() const;
};

struct BipartiteScalingRow {
  std::size_t n;
  std::string regime;
  std::size_t left;
  double u01;
  double ratio_to_theory;
};

struct CliqueScalingRow {
  std::size_t n;
  double u1;
  double ratio_to_log;
};

struct DregScalingRow {
  std::size_t n;
  std::size_t d;  // 0 marks the edgeless control
  double avg_age_estimate;  // replication mean of the worst per-vertex time average
  double ratio_to_log;
  double worst_age_stderr;
  double sampled_h_min;  // nan unless expansion_samples > 0
};

struct GnpThresholdRow {
  std::size_t n;
  double c;
  double p;
  double avg_age_estimate;
  std::size_t isolated_count;
  std::size_t replication;
  bool is_connected;
  double avg_age_stderr;
};

struct SimVsExactRow {
  std::string graph_id;
  std::string set;
  double exact;
  double simulated;
  double z_score;
};

struct MonotonicitySweepRow {
  std::size_t n;
  std::uint64_t graph_mask;  // bit k set = k-th pair (u<v, lexicographic) present
  std::size_t candidates;
  bool holds;
  double worst_violation;
  std::string witness_edge;
  std::string witness_set;
};

struct IsolatedVerticesRow {
  std::size_t n;
  double d_exponent;
  double p;
  std::size_t sample;
  std::size_t isolated_count;
  double mu;
  bool inside_band;
};

std::vector<BipartiteScalingRow> run_bipartite_scaling(const ExperimentSpec& spec);
std::vector<CliqueScalingRow> run_clique_scaling(const ExperimentSpec& spec);
std::vector<DregScalingRow> run_dreg_scaling(const ExperimentSpec& spec);
std::vector<GnpThresholdRow> run_gnp_threshold(const ExperimentSpec& spec);
std::vector<SimVsExactRow> run_sim_vs_exact(const ExperimentSpec& spec);
std::vector<MonotonicitySweepRow> run_monotonicity_sweep(const ExperimentSpec& spec);
std::vector<IsolatedVerticesRow> run_isolated_vertices(const ExperimentSpec& spec);

void write_csv(std::ostream& out, const std::vector<BipartiteScalingRow>& rows);
void write_csv(std::ostream& out, const std::vector<CliqueScalingRow>& rows);
void write_csv(std::ostream& out, const std::vector<DregScalingRow>& rows);
void write_csv(std::ostream& out, const std::vector<GnpThresholdRow>& rows);
void write_csv(std::ostream& out, const std::vector<SimVsExactRow>& rows);
void write_csv(std::ostream& out, const std::vector<MonotonicitySweepRow>& rows);
void write_csv(std::ostream& out, const std::vector<IsolatedVerticesRow>& rows);

/// Runs the spec's experiment and writes its CSV to `out`.
void run_experiment(const ExperimentSpec& spec, std::ostream& out);

/// Named graph used by the simulator cross-validation corpus.
struct CorpusGraph {
  std::string id;
  Graph graph;
};

/// Paths, cycles, stars, cliques, edgeless graphs and K_{L,R} (2 <= L <= R)
/// for each n in `sizes`.
std::vector<CorpusGraph> validation_corpus(const std::vector<std::size_t>& sizes);

/// Left part size of K_{L, n-L} for a bipartite scaling regime.
std::size_t regime_left_size(const std::string& regime, std::size_t n, double alpha);

/// Graph with the edges selected by `mask` over the lexicographic pair order.
Graph graph_from_pair_mask(std::size_t n, std::uint64_t mask);

}  // namespace gossip_age
