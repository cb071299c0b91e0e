#include "gossip_age/age_sim.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "gossip_age/csv.hpp"
#include "gossip_age/rng.hpp"

namespace gossip_age {
namespace {

// Area under a piecewise-constant level, advanced only when the level
// changes or an accounting boundary is reached.
struct LazyIntegral {
  double level = 0.0;
  double since = 0.0;
  double area = 0.0;

  void flush(double t) {
    area += level * (t - since);
    since = t;
  }
  void set(double t, double v) {
    flush(t);
    level = v;
  }
  void restart(double t) {
    flush(t);
    area = 0.0;
  }
};

struct TrackedSet {
  LazyIntegral freshest;  // max counter over members
  std::vector<double> batch_means;
};

struct BatchSummary {
  double mean = 0.0;
  double std_error = 0.0;
};

BatchSummary summarize(const std::vector<double>& means) {
  BatchSummary s;
  const auto b = static_cast<double>(means.size());
  for (double m : means) s.mean += m;
  s.mean /= b;
  if (means.size() > 1) {
    double ss = 0.0;
    for (double m : means) ss += (m - s.mean) * (m - s.mean);
    s.std_error = std::sqrt(ss / (b - 1.0) / b);
  }
  return s;
}

void validate(const Graph& g, const SimConfig& cfg) {
  cfg.rates.validate();
  if (!(cfg.t_end > 0.0) || !std::isfinite(cfg.t_end)) {
    throw std::invalid_argument("simulate: t_end must be positive and finite");
  }
  if (!(cfg.burn_in >= 0.0 && cfg.burn_in < 1.0)) {
    throw std::invalid_argument("simulate: burn_in must lie in [0, 1)");
  }
  if (cfg.batches < 1) throw std::invalid_argument("simulate: batches must be >= 1");
  if (cfg.tracked_sets.empty() && !cfg.track_network_average && !cfg.track_vertices) {
    throw std::invalid_argument("simulate: nothing to track");
  }
  for (const auto& s : cfg.tracked_sets) {
    if (s.empty()) throw std::invalid_argument("simulate: tracked set is empty");
    if (s.max_member() >= g.order()) throw std::invalid_argument("simulate: tracked set not in graph");
  }
}

}  // namespace

const TrackedEstimate& SimEstimate::find(const std::string& label) const {
  for (const auto& s : sets)
    if (s.label == label) return s;
  throw std::out_of_range("SimEstimate: no tracked quantity '" + label + "'");
}

void SimEstimate::write_csv(std::ostream& out) const {
  CsvWriter csv(out, {"set", "mean_age", "batch_std", "events"});
  for (const auto& s : sets) csv.row(s.label, s.mean_age, s.batch_std, events);
}

SimEstimate simulate(const Graph& g, const SimConfig& cfg) {
  validate(g, cfg);
  const std::size_t n = g.order();
  const double lambda_e = cfg.rates.source_rate;
  const double lambda = cfg.rates.gossip_rate;

  std::vector<Vertex> active;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) > 0) active.push_back(v);
  const double total_rate = lambda_e + lambda + lambda * static_cast<double>(active.size());

  std::vector<std::uint64_t> counter(n, 0);
  std::uint64_t source = 0;
  std::uint64_t counter_sum = 0;
  const auto inv_n = 1.0 / static_cast<double>(n);

  std::vector<TrackedSet> sets(cfg.tracked_sets.size());
  std::vector<std::vector<std::uint32_t>> member_of(cfg.tracked_sets.empty() ? 0 : n);
  for (std::uint32_t s = 0; s < cfg.tracked_sets.size(); ++s)
    for (auto v : cfg.tracked_sets[s].members()) member_of[v].push_back(s);

  LazyIntegral source_batch;
  LazyIntegral source_window;
  LazyIntegral average;  // level = source - mean counter
  std::vector<double> average_batches;
  std::vector<LazyIntegral> vertex(cfg.track_vertices ? n : 0);

  const double window_start = cfg.burn_in * cfg.t_end;
  const double window = cfg.t_end - window_start;
  const double batch_len = window / static_cast<double>(cfg.batches);
  std::vector<double> boundaries(cfg.batches + 1);
  for (std::size_t k = 0; k <= cfg.batches; ++k)
    boundaries[k] = window_start + static_cast<double>(k) * batch_len;
  boundaries.back() = cfg.t_end;

  auto cross_boundary = [&](std::size_t k, double b) {
    if (k == 0) {
      source_batch.restart(b);
      source_window.restart(b);
      average.restart(b);
      for (auto& s : sets) s.freshest.restart(b);
      for (auto& v : vertex) v.restart(b);
      return;
    }
    const double len = b - boundaries[k - 1];
    source_batch.flush(b);
    for (auto& s : sets) {
      s.freshest.flush(b);
      s.batch_means.push_back((source_batch.area - s.freshest.area) / len);
      s.freshest.area = 0.0;
    }
    source_batch.area = 0.0;
    if (cfg.track_network_average) {
      average.flush(b);
      average_batches.push_back(average.area / len);
      average.area = 0.0;
    }
  };

  auto raise = [&](Vertex j, std::uint64_t value, double t) {
    if (value <= counter[j]) return;
    counter_sum += value - counter[j];
    counter[j] = value;
    if (!vertex.empty()) vertex[j].set(t, static_cast<double>(value));
    if (!member_of.empty()) {
      for (auto s : member_of[j]) {
        if (static_cast<double>(value) > sets[s].freshest.level) {
          sets[s].freshest.set(t, static_cast<double>(value));
        }
      }
    }
    average.set(t, static_cast<double>(source) - static_cast<double>(counter_sum) * inv_n);
  };

  auto trace = [&](double t, int kind, std::uint64_t actor, std::uint64_t target) {
    *cfg.trace << format_double(t) << ',' << kind << ',' << actor << ',' << target << ','
               << source << '\n';
  };
  if (cfg.trace != nullptr) *cfg.trace << "t,event_class,actor,target,source_counter\n";

  Rng rng(cfg.seed);
  SimEstimate est;
  est.t_end = cfg.t_end;
  double t = 0.0;
  std::size_t next_boundary = 0;
  while (true) {
    const double t_next = t + rng.exponential(total_rate);
    while (next_boundary < boundaries.size() && boundaries[next_boundary] <= t_next) {
      cross_boundary(next_boundary, boundaries[next_boundary]);
      ++next_boundary;
    }
    if (next_boundary == boundaries.size()) break;
    t = t_next;
    ++est.events;

    const double pick = rng.uniform() * total_rate;
    if (pick < lambda_e) {
      ++source;
      const auto level = static_cast<double>(source);
      source_batch.set(t, level);
      source_window.set(t, level);
      average.set(t, level - static_cast<double>(counter_sum) * inv_n);
      if (cfg.trace) trace(t, 1, 0, 0);
    } else if (pick < lambda_e + lambda) {
      const auto j = static_cast<Vertex>(rng.below(n));
      raise(j, source, t);
      if (cfg.trace) trace(t, 2, 0, j + 1);
    } else {
      const Vertex i = active[rng.below(active.size())];
      const auto nb = g.neighbors(i);
      const Vertex j = nb[rng.below(nb.size())];
      raise(j, counter[i], t);
      if (cfg.trace) trace(t, 3, i + 1, j + 1);
    }
  }
  est.versions_generated = source;

  for (std::size_t s = 0; s < sets.size(); ++s) {
    const auto summary = summarize(sets[s].batch_means);
    est.sets.push_back({cfg.tracked_sets[s].to_string(), summary.mean, summary.std_error});
  }
  if (cfg.track_network_average) {
    const auto summary = summarize(average_batches);
    est.sets.push_back({"avg", summary.mean, summary.std_error});
  }
  if (!vertex.empty()) {
    source_window.flush(cfg.t_end);
    est.vertex_mean_age.resize(n);
    for (Vertex v = 0; v < n; ++v) {
      vertex[v].flush(cfg.t_end);
      est.vertex_mean_age[v] = (source_window.area - vertex[v].area) / window;
    }
  }
  return est;
}

SimEstimate average_network_age(const Graph& g, SimConfig cfg) {
  cfg.tracked_sets.clear();
  cfg.track_vertices = false;
  cfg.track_network_average = true;
  return simulate(g, cfg);
}

SimEstimate pool_estimates(const std::vector<SimEstimate>& runs) {
  if (runs.empty()) throw std::invalid_argument("pool_estimates: no runs");
  SimEstimate out;
  out.t_end = runs.front().t_end;
  const auto r = static_cast<double>(runs.size());
  out.sets = runs.front().sets;
  for (auto& s : out.sets) {
    s.mean_age = 0.0;
    s.batch_std = 0.0;
  }
  const bool vertices = !runs.front().vertex_mean_age.empty();
  if (vertices) out.vertex_mean_age.assign(runs.front().vertex_mean_age.size(), 0.0);
  for (const auto& run : runs) {
    if (run.sets.size() != out.sets.size()) throw std::invalid_argument("pool_estimates: mismatched runs");
    for (std::size_t k = 0; k < out.sets.size(); ++k) {
      if (run.sets[k].label != out.sets[k].label) {
        throw std::invalid_argument("pool_estimates: mismatched tracked sets");
      }
      out.sets[k].mean_age += run.sets[k].mean_age / r;
      out.sets[k].batch_std += run.sets[k].batch_std * run.sets[k].batch_std;
    }
    if (vertices) {
      for (std::size_t v = 0; v < out.vertex_mean_age.size(); ++v)
        out.vertex_mean_age[v] += run.vertex_mean_age[v] / r;
    }
    out.events += run.events;
    out.versions_generated += run.versions_generated;
  }
  for (auto& s : out.sets) s.batch_std = std::sqrt(s.batch_std) / r;
  return out;
}

}  // namespace gossip_age
