#include "gossip_age/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "gossip_age/age_sim.hpp"
#include "gossip_age/age_structured.hpp"
#include "gossip_age/bounds.hpp"
#include "gossip_age/csv.hpp"
#include "gossip_age/error.hpp"
#include "gossip_age/generators.hpp"
#include "gossip_age/parallel.hpp"
#include "gossip_age/rng.hpp"
#include "gossip_age/structure.hpp"

namespace gossip_age {
namespace {

constexpr double kBipartiteMaxCells = 5e8;
constexpr std::size_t kSimVsExactMaxOrder = 8;
constexpr std::size_t kMonotonicitySweepMaxOrder = 6;

double horizon(const ExperimentSpec& spec, double source_updates) {
  return spec.t_end > 0.0 ? spec.t_end : source_updates / spec.rates.source_rate;
}

SimConfig sim_config(const ExperimentSpec& spec, double t_end, std::uint64_t seed) {
  SimConfig cfg;
  cfg.rates = spec.rates;
  cfg.t_end = t_end;
  cfg.burn_in = spec.burn_in;
  cfg.batches = spec.batches;
  cfg.seed = seed;
  return cfg;
}

double theory_shape(const std::string& regime, std::size_t n, double alpha) {
  const auto N = static_cast<double>(n);
  if (regime == "one") return N;
  if (regime == "sqrt") return std::sqrt(N);
  if (regime == "power") return std::pow(N, 1.0 - alpha);
  if (regime == "half") return std::log(N);
  throw std::invalid_argument("unknown bipartite regime '" + regime + "'");
}

struct MeanAndError {
  double mean = 0.0;
  double std_error = 0.0;
};

MeanAndError mean_and_error(const std::vector<double>& xs) {
  MeanAndError out;
  const auto r = static_cast<double>(xs.size());
  for (double x : xs) out.mean += x;
  out.mean /= r;
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - out.mean) * (x - out.mean);
    out.std_error = std::sqrt(ss / (r - 1.0) / r);
  }
  return out;
}

}  // namespace

ExperimentKind parse_experiment_kind(const std::string& name) {
  if (name == "bipartite_scaling") return ExperimentKind::bipartite_scaling;
  if (name == "clique_scaling") return ExperimentKind::clique_scaling;
  if (name == "dreg_scaling") return ExperimentKind::dreg_scaling;
  if (name == "gnp_threshold") return ExperimentKind::gnp_threshold;
  if (name == "sim_vs_exact") return ExperimentKind::sim_vs_exact;
  if (name == "monotonicity_sweep") return ExperimentKind::monotonicity_sweep;
  if (name == "isolated_vertices") return ExperimentKind::isolated_vertices;
  throw std::invalid_argument("unknown experiment kind '" + name + "'");
}

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::bipartite_scaling: return "bipartite_scaling";
    case ExperimentKind::clique_scaling: return "clique_scaling";
    case ExperimentKind::dreg_scaling: return "dreg_scaling";
    case ExperimentKind::gnp_threshold: return "gnp_threshold";
    case ExperimentKind::sim_vs_exact: return "sim_vs_exact";
    case ExperimentKind::monotonicity_sweep: return "monotonicity_sweep";
    case ExperimentKind::isolated_vertices: return "isolated_vertices";
  }
  return "unknown";
}

void ExperimentSpec::validate() const {
  if (n_grid.empty()) throw std::invalid_argument("experiment: n_grid must be nonempty");
  for (std::size_t k = 1; k < n_grid.size(); ++k) {
    if (n_grid[k] <= n_grid[k - 1]) throw std::invalid_argument("experiment: n_grid must be increasing");
  }
  if (replications < 1) throw std::invalid_argument("experiment: replications must be >= 1");
  rates.validate();
  if (t_end < 0.0) throw std::invalid_argument("experiment: t_end must be >= 0");
}

std::size_t regime_left_size(const std::string& regime, std::size_t n, double alpha) {
  const auto N = static_cast<double>(n);
  std::size_t left = 0;
  if (regime == "one") {
    left = 1;
  } else if (regime == "sqrt") {
    left = static_cast<std::size_t>(std::floor(std::sqrt(N)));
  } else if (regime == "power") {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("power regime needs alpha in (0, 1)");
    left = static_cast<std::size_t>(std::floor(std::pow(N, alpha)));
  } else if (regime == "half") {
    left = n / 2;
  } else {
    throw std::invalid_argument("unknown bipartite regime '" + regime + "'");
  }
  if (left < 1 || left >= n) {
    throw std::invalid_argument("regime '" + regime + "' gives an empty side at n = " + std::to_string(n));
  }
  return left;
}

std::vector<BipartiteScalingRow> run_bipartite_scaling(const ExperimentSpec& spec) {
  spec.validate();
  struct Task {
    std::size_t n;
    std::string regime;
    std::size_t left;
  };
  std::vector<Task> tasks;
  for (auto n : spec.n_grid) {
    for (const auto& regime : spec.regimes) {
      const auto left = regime_left_size(regime, n, spec.alpha);
      if (static_cast<double>(left) * static_cast<double>(n - left) > kBipartiteMaxCells) {
        throw InfeasibleSize("bipartite_scaling: K_{" + std::to_string(left) + "," +
                             std::to_string(n - left) + "} grid too large");
      }
      tasks.push_back({n, regime, left});
    }
  }
  return parallel_map(tasks.size(), worker_count(spec.threads), [&](std::size_t k) {
    const auto& t = tasks[k];
    const auto corner = bipartite_corner(t.left, t.n - t.left);
    return BipartiteScalingRow{t.n, t.regime, t.left, corner.u01,
                               corner.u01 / theory_shape(t.regime, t.n, spec.alpha)};
  });
}

std::vector<CliqueScalingRow> run_clique_scaling(const ExperimentSpec& spec) {
  spec.validate();
  std::vector<CliqueScalingRow> rows;
  for (auto n : spec.n_grid) {
    const double u1 = clique_age(n).front();
    rows.push_back({n, u1, n > 1 ? u1 / std::log(static_cast<double>(n))
                                 : std::numeric_limits<double>::quiet_NaN()});
  }
  return rows;
}

std::vector<DregScalingRow> run_dreg_scaling(const ExperimentSpec& spec) {
  spec.validate();
  if (spec.degree < 1) throw std::invalid_argument("dreg_scaling: degree must be >= 1");
  for (auto n : spec.n_grid) {
    if ((n * spec.degree) % 2 != 0) {
      throw std::invalid_argument("dreg_scaling: n*d odd at n = " + std::to_string(n));
    }
  }
  const double t_end = horizon(spec, 2000.0);
  const std::size_t reps = spec.replications;

  struct Outcome {
    double worst = 0.0;
    double sampled_h = std::numeric_limits<double>::quiet_NaN();
  };
  const std::size_t variants = spec.empty_control ? 2 : 1;
  const std::size_t tasks = spec.n_grid.size() * variants * reps;
  auto outcomes = parallel_map(tasks, worker_count(spec.threads), [&](std::size_t k) {
    const std::size_t r = k % reps;
    const std::size_t variant = (k / reps) % variants;
    const std::size_t n = spec.n_grid[k / reps / variants];
    const std::uint64_t point = derive_seed(spec.base_seed, n, variant);
    const Graph g = variant == 0 ? gen_random_regular(n, spec.degree, derive_seed(point, r, 0))
                                 : empty_graph(n);
    SimConfig cfg = sim_config(spec, t_end, derive_seed(point, r, 1));
    cfg.track_vertices = true;
    const auto est = simulate(g, cfg);
    Outcome out;
    out.worst = *std::max_element(est.vertex_mean_age.begin(), est.vertex_mean_age.end());
    if (variant == 0 && spec.expansion_samples > 0) {
      out.sampled_h = sampled_expansion(g, spec.expansion_samples, derive_seed(point, r, 2)).h();
    }
    return out;
  });

  std::vector<DregScalingRow> rows;
  for (std::size_t p = 0; p < spec.n_grid.size() * variants; ++p) {
    const std::size_t n = spec.n_grid[p / variants];
    const std::size_t variant = p % variants;
    std::vector<double> worst;
    double h_min = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t r = 0; r < reps; ++r) {
      const auto& o = outcomes[p * reps + r];
      worst.push_back(o.worst);
      if (!std::isnan(o.sampled_h)) h_min = std::isnan(h_min) ? o.sampled_h : std::min(h_min, o.sampled_h);
    }
    const auto summary = mean_and_error(worst);
    rows.push_back({n, variant == 0 ? spec.degree : 0, summary.mean,
                    summary.mean / std::log(static_cast<double>(n)), summary.std_error, h_min});
  }
  return rows;
}

std::vector<GnpThresholdRow> run_gnp_threshold(const ExperimentSpec& spec) {
  spec.validate();
  if (spec.c_grid.empty()) throw std::invalid_argument("gnp_threshold: c_grid must be nonempty");
  const double t_end = horizon(spec, 2e4);
  const std::size_t reps = spec.replications;
  const std::size_t points = spec.n_grid.size() * spec.c_grid.size();
  for (auto n : spec.n_grid) {
    for (double c : spec.c_grid) {
      const double p = c * std::log(static_cast<double>(n)) / static_cast<double>(n);
      if (!(c > 0.0) || !(p <= 1.0)) {
        throw std::invalid_argument("gnp_threshold: c ln n / n must lie in (0, 1]");
      }
    }
  }
  return parallel_map(points * reps, worker_count(spec.threads), [&](std::size_t k) {
    const std::size_t r = k % reps;
    const std::size_t point = k / reps;
    const std::size_t n = spec.n_grid[point / spec.c_grid.size()];
    const std::size_t ci = point % spec.c_grid.size();
    const double c = spec.c_grid[ci];
    const double p = c * std::log(static_cast<double>(n)) / static_cast<double>(n);
    const std::uint64_t point_seed = derive_seed(spec.base_seed, n, ci);
    const Graph g = gen_gnp(n, p, derive_seed(point_seed, r, 0));
    const auto structure = structure_report(g);
    const auto est = average_network_age(g, sim_config(spec, t_end, derive_seed(point_seed, r, 1)));
    const auto& avg = est.find("avg");
    return GnpThresholdRow{n, c, p, avg.mean_age, structure.isolated_count, r,
                           structure.is_connected, avg.batch_std};
  });
}

std::vector<CorpusGraph> validation_corpus(const std::vector<std::size_t>& sizes) {
  std::vector<CorpusGraph> corpus;
  for (auto n : sizes) {
    const auto tag = std::to_string(n);
    corpus.push_back({"path" + tag, path_graph(n)});
    if (n >= 3) {
      corpus.push_back({"cycle" + tag, cycle_graph(n)});
      corpus.push_back({"star" + tag, complete_bipartite(1, n - 1)});
      corpus.push_back({"complete" + tag, complete_graph(n)});
    }
    corpus.push_back({"empty" + tag, empty_graph(n)});
    for (std::size_t left = 2; 2 * left <= n; ++left) {
      corpus.push_back({"bipartite" + std::to_string(left) + "x" + std::to_string(n - left),
                        complete_bipartite(left, n - left)});
    }
  }
  return corpus;
}

std::vector<SimVsExactRow> run_sim_vs_exact(const ExperimentSpec& spec) {
  spec.validate();
  for (auto n : spec.n_grid) {
    if (n < 2) throw std::invalid_argument("sim_vs_exact: corpus sizes must be >= 2");
    if (n > kSimVsExactMaxOrder) throw InfeasibleSize("sim_vs_exact: corpus sizes must be <= 8");
  }
  const auto corpus = validation_corpus(spec.n_grid);
  const double t_end = horizon(spec, 2e5);
  auto per_graph = parallel_map(corpus.size(), worker_count(spec.threads), [&](std::size_t k) {
    const auto& entry = corpus[k];
    const Graph& g = entry.graph;
    const std::size_t n = g.order();
    const auto table = solve_exact(g, spec.rates);

    SimConfig cfg = sim_config(spec, t_end, derive_seed(spec.base_seed, k));
    std::vector<double> exact;
    for (Vertex v = 0; v < n; ++v) {
      cfg.tracked_sets.push_back(VertexSet{v});
      exact.push_back(table.age(std::uint32_t{1} << v));
    }
    cfg.tracked_sets.push_back(VertexSet{0, 1});
    exact.push_back(table.age(3u));
    cfg.track_network_average = true;
    double avg = 0.0;
    for (Vertex v = 0; v < n; ++v) avg += exact[v] / static_cast<double>(n);
    exact.push_back(avg);

    const auto est = simulate(g, cfg);
    std::vector<SimVsExactRow> rows;
    for (std::size_t s = 0; s < est.sets.size(); ++s) {
      const auto& t = est.sets[s];
      rows.push_back({entry.id, t.label, exact[s], t.mean_age, (t.mean_age - exact[s]) / t.batch_std});
    }
    return rows;
  });
  std::vector<SimVsExactRow> rows;
  for (auto& chunk : per_graph) rows.insert(rows.end(), chunk.begin(), chunk.end());
  return rows;
}

Graph graph_from_pair_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if (mask >> bit & 1) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

std::vector<MonotonicitySweepRow> run_monotonicity_sweep(const ExperimentSpec& spec) {
  spec.validate();
  for (auto n : spec.n_grid) {
    if (n < 1) throw std::invalid_argument("monotonicity_sweep: n must be >= 1");
    if (n > kMonotonicitySweepMaxOrder) {
      throw InfeasibleSize("monotonicity_sweep: exhaustive sweep limited to n <= 6");
    }
  }
  struct Task {
    std::size_t n;
    std::uint64_t mask;
  };
  std::vector<Task> tasks;
  for (auto n : spec.n_grid) {
    const std::uint64_t graphs = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t m = 0; m < graphs; ++m) tasks.push_back({n, m});
  }
  return parallel_map(tasks.size(), worker_count(spec.threads), [&](std::size_t k) {
    const auto& t = tasks[k];
    const auto report = monotonicity_check(graph_from_pair_mask(t.n, t.mask), spec.rates);
    std::string edge;
    if (report.witness_edge) {
      edge = std::to_string(report.witness_edge->u + 1) + "-" + std::to_string(report.witness_edge->v + 1);
    }
    return MonotonicitySweepRow{t.n, t.mask, report.candidates, report.holds, report.worst_violation,
                                edge, report.witness_set.to_string()};
  });
}

std::vector<IsolatedVerticesRow> run_isolated_vertices(const ExperimentSpec& spec) {
  spec.validate();
  std::vector<IsolatedVerticesRow> rows;
  for (auto n : spec.n_grid) {
    const auto result =
        isolated_concentration(n, spec.d_exponent, spec.replications, derive_seed(spec.base_seed, n));
    for (std::size_t s = 0; s < result.counts.size(); ++s) {
      const auto count = result.counts[s];
      rows.push_back({n, spec.d_exponent, result.p, s, count, result.mu,
                      std::abs(static_cast<double>(count) - result.mu) < result.band});
    }
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<BipartiteScalingRow>& rows) {
  CsvWriter csv(out, {"n", "regime", "L", "u01", "ratio_to_theory"});
  for (const auto& r : rows) csv.row(r.n, r.regime, r.left, r.u01, r.ratio_to_theory);
}

void write_csv(std::ostream& out, const std::vector<CliqueScalingRow>& rows) {
  CsvWriter csv(out, {"n", "u1", "ratio_to_log"});
  for (const auto& r : rows) csv.row(r.n, r.u1, r.ratio_to_log);
}

void write_csv(std::ostream& out, const std::vector<DregScalingRow>& rows) {
  CsvWriter csv(out, {"n", "d", "avg_age_estimate", "ratio_to_log", "worst_age_stderr", "sampled_h_min"});
  for (const auto& r : rows)
    csv.row(r.n, r.d, r.avg_age_estimate, r.ratio_to_log, r.worst_age_stderr, r.sampled_h_min);
}

void write_csv(std::ostream& out, const std::vector<GnpThresholdRow>& rows) {
  CsvWriter csv(out, {"n", "c", "p", "avg_age_estimate", "isolated_count", "replication",
                      "is_connected", "avg_age_stderr"});
  for (const auto& r : rows) {
    csv.row(r.n, r.c, r.p, r.avg_age_estimate, r.isolated_count, r.replication, r.is_connected,
            r.avg_age_stderr);
  }
}

void write_csv(std::ostream& out, const std::vector<SimVsExactRow>& rows) {
  CsvWriter csv(out, {"graph_id", "set", "exact", "simulated", "z_score"});
  for (const auto& r : rows) csv.row(r.graph_id, r.set, r.exact, r.simulated, r.z_score);
}

void write_csv(std::ostream& out, const std::vector<MonotonicitySweepRow>& rows) {
  CsvWriter csv(out, {"n", "graph_mask", "candidates", "holds", "worst_violation", "witness_edge",
                      "witness_set"});
  for (const auto& r : rows) {
    csv.row(r.n, r.graph_mask, r.candidates, r.holds, r.worst_violation, r.witness_edge, r.witness_set);
  }
}

void write_csv(std::ostream& out, const std::vector<IsolatedVerticesRow>& rows) {
  CsvWriter csv(out, {"n", "d_exponent", "p", "sample", "isolated_count", "mu", "inside_band"});
  for (const auto& r : rows)
    csv.row(r.n, r.d_exponent, r.p, r.sample, r.isolated_count, r.mu, r.inside_band);
}

void run_experiment(const ExperimentSpec& spec, std::ostream& out) {
  switch (spec.kind) {
    case ExperimentKind::bipartite_scaling: return write_csv(out, run_bipartite_scaling(spec));
    case ExperimentKind::clique_scaling: return write_csv(out, run_clique_scaling(spec));
    case ExperimentKind::dreg_scaling: return write_csv(out, run_dreg_scaling(spec));
    case ExperimentKind::gnp_threshold: return write_csv(out, run_gnp_threshold(spec));
    case ExperimentKind::sim_vs_exact: return write_csv(out, run_sim_vs_exact(spec));
    case ExperimentKind::monotonicity_sweep: return write_csv(out, run_monotonicity_sweep(spec));
    case ExperimentKind::isolated_vertices: return write_csv(out, run_isolated_vertices(spec));
  }
}

}  // namespace gossip_age
