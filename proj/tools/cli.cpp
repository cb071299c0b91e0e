#include "cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gossip_age/gossip_age.hpp"
#include "json.hpp"

namespace gossip_age::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  std::string path;
  std::string topology;
  std::size_t n = 0;
  std::size_t left = 0;
  std::size_t degree = 3;
  double p = 0.5;
  std::uint64_t seed = 1;
};

void add_graph_options(CLI::App* app, GraphSource& src, const std::string& seed_flag) {
  app->add_option("--graph", src.path, "Edge-list file");
  app->add_option("--topology", src.topology,
                  "complete|empty|cycle|path|star|complete_bipartite|gnp|regular");
  app->add_option("--n", src.n, "Vertex count for --topology");
  app->add_option("--left", src.left, "Left part size for complete_bipartite");
  app->add_option("--d", src.degree, "Degree for regular");
  app->add_option("--p", src.p, "Edge probability for gnp");
  app->add_option(seed_flag, src.seed, "Generator seed for gnp and regular");
}

Graph load_graph(const GraphSource& src) {
  if (!src.path.empty() && !src.topology.empty()) throw UsageError("give either --graph or --topology, not both");
  if (!src.path.empty()) return read_edge_list_file(src.path);
  if (src.topology.empty()) throw UsageError("one of --graph or --topology is required");
  if (src.n == 0) throw UsageError("--topology needs --n");
  if (src.topology == "gnp") return gen_gnp(src.n, src.p, src.seed);
  if (src.topology == "regular") return gen_random_regular(src.n, src.degree, src.seed);
  return build_named(parse_topology(src.topology), {src.n, src.left});
}

void add_rate_options(CLI::App* app, GossipRates& rates) {
  app->add_option("--lambda-e", rates.source_rate, "Source self-update rate");
  app->add_option("--lambda", rates.gossip_rate, "Gossip rate");
}

// Flat JSON object whose keys are long flag names without the dashes.
// Keys already given on the command line are skipped.
void apply_config(CLI::App* app, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config file '" + path + "': " + e.what());
  }
  if (!doc.is_object()) throw UsageError("config file must hold a flat JSON object");
  auto scalar = [&](const nlohmann::json& v, const std::string& key) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number()) return v.dump();
    throw UsageError("config key '" + key + "' must be a string, number, boolean or array of those");
  };
  for (const auto& [key, value] : doc.items()) {
    CLI::Option* opt = key == "config" ? nullptr : app->get_option_no_throw("--" + key);
    if (opt == nullptr) throw UsageError("unknown config key '" + key + "'");
    if (opt->count() > 0) continue;
    std::vector<std::string> values;
    if (value.is_array()) {
      for (const auto& item : value) values.push_back(scalar(item, key));
    } else {
      values.push_back(scalar(value, key));
    }
    opt->add_result(values);
    try {
      opt->run_callback();
    } catch (const CLI::ParseError& e) {
      throw UsageError("config key '" + key + "': " + e.what());
    }
  }
}

// Writes to --out when given, otherwise to the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_.emplace(path);
      if (!*file_) throw UsageError("cannot open output file '" + path + "'");
    }
    stream_ = file_ ? &*file_ : &fallback;
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::optional<std::ofstream> file_;
  std::ostream* stream_;
};

struct Command {
  CLI::App* app;
  std::function<void(std::ostream&)> run;
};

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app("Version-age-of-information toolkit for gossip networks", "gossip-age");
  app.require_subcommand(1);
  std::string config_path;
  std::string out_path;
  std::vector<Command> commands;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "Flat JSON file of flag values; flags override it");
    sub->add_option("--out", out_path, "Output file (default stdout)");
  };

  // generate
  GraphSource gen_src;
  {
    auto* sub = app.add_subcommand("generate", "Write a named or random graph as an edge list");
    add_graph_options(sub, gen_src, "--seed");
    add_common(sub);
    commands.push_back({sub, [&](std::ostream& os) { write_edge_list(os, load_graph(gen_src)); }});
  }

  // exact
  GraphSource exact_src;
  GossipRates exact_rates;
  std::vector<std::string> exact_subsets;
  {
    auto* sub = app.add_subcommand("exact", "Exact version age of every vertex subset");
    add_graph_options(sub, exact_src, "--graph-seed");
    add_rate_options(sub, exact_rates);
    sub->add_option("--subset", exact_subsets, "Only emit these subsets, e.g. 1+3");
    add_common(sub);
    commands.push_back({sub, [&](std::ostream& os) {
                          const Graph g = load_graph(exact_src);
                          const auto table = solve_exact(g, exact_rates);
                          if (exact_subsets.empty()) {
                            table.write_csv(os);
                            return;
                          }
                          CsvWriter csv(os, {"subset_bitmask", "size", "age"});
                          for (const auto& text : exact_subsets) {
                            const auto s = VertexSet::parse(text, g.order());
                            csv.row(s.mask(), s.size(), table.age(s));
                          }
                        }});
  }

  // bipartite
  std::size_t bip_left = 0;
  std::size_t bip_right = 0;
  bool bip_sweep = false;
  std::vector<std::size_t> bip_grid;
  std::string bip_regime = "half";
  double bip_alpha = 0.5;
  {
    auto* sub = app.add_subcommand("bipartite", "Normalized ages u(i,j) on K_{L,R}");
    sub->add_option("--left", bip_left, "Left part size L");
    sub->add_option("--right", bip_right, "Right part size R");
    sub->add_flag("--sweep", bip_sweep, "Emit n,L,R,u01,u11,u10 over --n-grid");
    sub->add_option("--n-grid", bip_grid, "Sizes for --sweep")->delimiter(',');
    sub->add_option("--regime", bip_regime, "one|sqrt|power|half for --sweep");
    sub->add_option("--alpha", bip_alpha, "Exponent of the power regime");
    add_common(sub);
    commands.push_back({sub, [&](std::ostream& os) {
                          if (bip_sweep) {
                            if (bip_grid.empty()) throw UsageError("--sweep needs --n-grid");
                            CsvWriter csv(os, {"n", "L", "R", "u01", "u11", "u10"});
                            for (auto n : bip_grid) {
                              const auto left = regime_left_size(bip_regime, n, bip_alpha);
                              const auto c = bipartite_corner(left, n - left);
                              csv.row(c.n, c.left, c.right, c.u01, c.u11, c.u10);
                            }
                            return;
                          }
                          if (bip_left == 0 || bip_right == 0) throw UsageError("--left and --right are required");
                          if ((bip_left + 1) * (bip_right + 1) > 50'000'000) {
                            throw InfeasibleSize("bipartite: full grid too large; use --sweep");
                          }
                          const auto grid = bipartite_grid(bip_left, bip_right);
                          CsvWriter csv(os, {"i", "j", "u"});
                          for (std::size_t i = 0; i <= bip_left; ++i)
                            for (std::size_t j = 0; j <= bip_right; ++j)
                              if (i + j > 0) csv.row(i, j, grid.at(i, j));
                        }});
  }

  // clique
  std::size_t clique_n = 0;
  {
    auto* sub = app.add_subcommand("clique", "Normalized ages u(j) on K_n by subset size");
    sub->add_option("--n", clique_n, "Clique order");
    add_common(sub);
    commands.push_back({sub, [&](std::ostream& os) {
                          if (clique_n == 0) throw UsageError("--n is required");
                          const auto u = clique_age(clique_n);
                          CsvWriter csv(os, {"j", "u"});
                          for (std::size_t j = 1; j <= clique_n; ++j) csv.row(j, u[j - 1]);
                        }});
  }

  // simulate
  GraphSource sim_src;
  SimConfig sim_cfg;
  std::vector<std::string> sim_sets;
  bool sim_average = false;
  std::string sim_trace;
  {
    auto* sub = app.add_subcommand("simulate", "Monte Carlo time-averaged ages");
    add_graph_options(sub, sim_src, "--graph-seed");
    add_rate_options(sub, sim_cfg.rates);
    sub->add_option("--t-end", sim_cfg.t_end, "Simulated horizon");
    sub->add_option("--burn-in", sim_cfg.burn_in, "Discarded fraction of the horizon");
    sub->add_option("--batches", sim_cfg.batches, "Batch count for standard errors");
    sub->add_option("--seed", sim_cfg.seed, "Simulation seed");
    sub->add_option("--set", sim_sets, "Tracked set, e.g. 1+2 (repeatable)");
    sub->add_flag("--average", sim_average, "Track the network average (default when no --set)");
    sub->add_option("--trace", sim_trace, "Per-event CSV trace file");
    add_common(sub);
    commands.push_back({sub, [&](std::ostream& os) {
                          const Graph g = load_graph(sim_src);
                          for (const auto& text : sim_sets)
                            sim_cfg.tracked_sets.push_back(VertexSet::parse(text, g.order()));
                          sim_cfg.track_network_average = sim_average || sim_sets.empty();
                          std::optional<std::ofstream> trace;
                          if (!sim_trace.empty()) {
                            trace.emplace(sim_trace);
                            if (!*trace) throw UsageError("cannot open trace file '" + sim_trace + "'");
                            sim_cfg.trace = &*trace;
                          }
                          simulate(g, sim_cfg).write_csv(os);
                        }});
  }

  // bounds
  std::string bnd_formula;
  std::vector<std::size_t> bnd_grid;
  std::size_t bnd_left = 0;
  std::size_t bnd_right = 0;
  std::size_t bnd_d = 3;
  double bnd_cd = 0.1;
  double bnd_p = 0.0;
  std::size_t bnd_k = 1;
  double bnd_delta = 0.5;
  GossipRates bnd_rates;
  {
    auto* sub = app.add_subcommand("bounds", "Evaluate closed-form bounds over an n grid");
    sub->add_option("--formula", bnd_formula,
                    "bipartite_log|dreg|gnp_singleton|isolated_expectation|chernoff_tail|chernoff_union");
    sub->add_option("--n-grid", bnd_grid, "Sizes")->delimiter(',');
    sub->add_option("--left", bnd_left, "L for bipartite_log");
    sub->add_option("--right", bnd_right, "R for bipartite_log");
    sub->add_option("--d", bnd_d, "Degree for dreg");
    sub->add_option("--c-d", bnd_cd, "Expansion constant for dreg");
    sub->add_option("--p", bnd_p, "Edge probability");
    sub->add_option("--k", bnd_k, "Subset size for chernoff_tail");
    sub->add_option("--delta", bnd_delta, "Relative deviation for Chernoff bounds");
    add_rate_options(sub, bnd_rates);
    add_common(sub);
    commands.push_back({sub, [&](std::ostream& os) {
                          std::vector<BoundReport> reports;
                          const auto& f = bnd_formula;
                          if (f.empty()) throw UsageError("--formula is required");
                          if (f == "bipartite_log") {
                            if (bnd_left == 0 || bnd_right == 0) throw UsageError("--left and --right are required");
                            reports.push_back({f, bnd_left + bnd_right,
                                               {{"L", static_cast<double>(bnd_left)},
                                                {"R", static_cast<double>(bnd_right)}},
                                               bipartite_log_bound(bnd_left, bnd_right)});
                            write_bound_csv(os, reports);
                            return;
                          }
                          if (bnd_grid.empty()) throw UsageError("--n-grid is required");
                          for (auto n : bnd_grid) {
                            if (f == "dreg") {
                              const auto s = dreg_bound_sums(n, bnd_d, bnd_cd, bnd_rates.source_rate,
                                                             bnd_rates.gossip_rate);
                              const std::vector<std::pair<std::string, double>> params{
                                  {"d", static_cast<double>(bnd_d)}, {"c_d", bnd_cd}};
                              reports.push_back({"dreg_product", n, params, s.product_form});
                              reports.push_back({"dreg_harmonic", n, params, s.harmonic_form});
                            } else if (f == "gnp_singleton") {
                              const auto b = gnp_singleton_bound(n);
                              reports.push_back({"gnp_direct", n, {}, b.direct_sum});
                              reports.push_back({"gnp_closed_form", n, {}, b.closed_form});
                              reports.push_back({"gnp_digamma_terms", n, {}, b.digamma_terms});
                            } else if (f == "isolated_expectation") {
                              reports.push_back({f, n, {{"p", bnd_p}}, isolated_expectation(n, bnd_p)});
                            } else if (f == "chernoff_tail") {
                              reports.push_back({f, n,
                                                 {{"k", static_cast<double>(bnd_k)}, {"p", bnd_p}, {"delta", bnd_delta}},
                                                 chernoff_tail(bnd_k, n, bnd_p, bnd_delta)});
                            } else if (f == "chernoff_union") {
                              reports.push_back({f, n, {{"p", bnd_p}, {"delta", bnd_delta}},
                                                 chernoff_union_bound(n, bnd_p, bnd_delta)});
                            } else {
                              throw UsageError("unknown formula '" + f + "'");
                            }
                          }
                          write_bound_csv(os, reports);
                        }});
  }

  // expansion
  GraphSource exp_src;
  std::size_t exp_samples = 0;
  std::uint64_t exp_seed = 1;
  {
    auto* sub = app.add_subcommand("expansion", "Edge expansion: exact (n <= 24) or sampled");
    add_graph_options(sub, exp_src, "--graph-seed");
    sub->add_option("--samples", exp_samples, "Sampled subsets; 0 = exact enumeration");
    sub->add_option("--seed", exp_seed, "Sampling seed");
    add_common(sub);
    commands.push_back({sub, [&](std::ostream& os) {
                          const Graph g = load_graph(exp_src);
                          const bool exact = exp_samples == 0;
                          const auto r = exact ? cheeger_bruteforce(g) : sampled_expansion(g, exp_samples, exp_seed);
                          CsvWriter csv(os, {"method", "h", "boundary", "set_size", "argmin_set", "subsets_examined"});
                          csv.row(std::string(exact ? "exact" : "sampled"), r.h(), r.boundary, r.set_size,
                                  r.argmin_set.to_string(), r.subsets_examined);
                        }});
  }

  // experiment
  ExperimentSpec spec;
  std::string spec_kind;
  {
    auto* sub = app.add_subcommand("experiment", "Seeded experiment sweeps");
    sub->add_option("--kind", spec_kind,
                    "bipartite_scaling|clique_scaling|dreg_scaling|gnp_threshold|sim_vs_exact|"
                    "monotonicity_sweep|isolated_vertices");
    sub->add_option("--n-grid", spec.n_grid, "Increasing sizes")->delimiter(',');
    sub->add_option("--replications", spec.replications, "Replications per grid point");
    sub->add_option("--seed", spec.base_seed, "Base seed");
    add_rate_options(sub, spec.rates);
    sub->add_option("--regimes", spec.regimes, "Bipartite regimes")->delimiter(',');
    sub->add_option("--alpha", spec.alpha, "Exponent of the power regime");
    sub->add_option("--c-grid", spec.c_grid, "Multipliers c in p = c ln n / n")->delimiter(',');
    sub->add_option("--degree", spec.degree, "Degree for dreg_scaling");
    sub->add_option("--expansion-samples", spec.expansion_samples, "Sampled expansion probe per graph");
    sub->add_flag("--empty-control", spec.empty_control, "Add the edgeless control to dreg_scaling");
    sub->add_option("--d-exponent", spec.d_exponent, "Exponent d in p = d ln n / n");
    sub->add_option("--t-end", spec.t_end, "Simulation horizon (0 = kind default)");
    sub->add_option("--burn-in", spec.burn_in, "Discarded fraction of the horizon");
    sub->add_option("--batches", spec.batches, "Batch count");
    sub->add_option("--threads", spec.threads, "Worker threads (0 = hardware)");
    add_common(sub);
    commands.push_back({sub, [&](std::ostream& os) {
                          if (spec_kind.empty()) throw UsageError("--kind is required");
                          spec.kind = parse_experiment_kind(spec_kind);
                          spec.output_path = out_path;
                          run_experiment(spec, os);
                        }});
  }

  try {
    app.parse(argc, argv);
    for (auto& cmd : commands) {
      if (!cmd.app->parsed()) continue;
      if (!config_path.empty()) apply_config(cmd.app, config_path);
      Sink sink(out_path, out);
      cmd.run(sink.stream());
      sink.stream().flush();
      if (!sink.stream()) throw UsageError("write failed");
    }
    return kExitOk;
  } catch (const CLI::CallForHelp&) {
    const auto active = app.get_subcommands();
    out << (active.empty() ? app.help() : active.front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  } catch (const InfeasibleSize& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace gossip_age::cli
