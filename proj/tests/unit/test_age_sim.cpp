#include <cmath>
#include <stdexcept>
#include <sstream>
#include <string>

#include "doctest.h"
#include "gossip_age/age_exact.hpp"
#include "gossip_age/age_sim.hpp"
#include "gossip_age/graph.hpp"

using namespace gossip_age;

namespace {

SimConfig config(std::uint64_t seed, std::vector<VertexSet> sets) {
  SimConfig cfg;
  cfg.seed = seed;
  cfg.tracked_sets = std::move(sets);
  return cfg;
}

}  // namespace

TEST_CASE("simulated singleton ages match closed forms within 3%") {
  SUBCASE("edgeless, n = 5") {
    const auto est = simulate(empty_graph(5), config(1, {VertexSet{0}}));
    const auto& s = est.sets.front();
    CHECK(s.label == "1");
    CHECK(std::abs(s.mean_age - 5.0) / 5.0 < 0.03);
    CHECK(std::abs(s.mean_age - 5.0) <= 3 * s.batch_std + 1e-9);
  }
  SUBCASE("K_2") {
    const auto est = simulate(complete_graph(2), config(2, {VertexSet{0}}));
    CHECK(std::abs(est.sets.front().mean_age - 4.0 / 3.0) / (4.0 / 3.0) < 0.03);
  }
  SUBCASE("K_3") {
    const auto est = simulate(complete_graph(3), config(3, {VertexSet{0}}));
    CHECK(std::abs(est.sets.front().mean_age - 1.65) / 1.65 < 0.03);
  }
  SUBCASE("pairs use the freshest member") {
    const auto est = simulate(complete_graph(3), config(4, {VertexSet{0, 1}}));
    CHECK(est.sets.front().label == "1+2");
    CHECK(std::abs(est.sets.front().mean_age - 1.2) / 1.2 < 0.03);
  }
}

TEST_CASE("network average") {
  SUBCASE("edgeless graph averages to n") {
    SimConfig cfg;
    cfg.seed = 5;
    const auto est = average_network_age(empty_graph(6), cfg);
    REQUIRE(est.sets.size() == 1);
    CHECK(est.find("avg").mean_age == doctest::Approx(6.0).epsilon(0.03));
  }
  SUBCASE("star K_{1,2}") {
    SimConfig cfg;
    cfg.seed = 6;
    const double expected = (51.0 / 35.0 + 2 * 48.0 / 25.0) / 3.0;
    const auto est = average_network_age(complete_bipartite(1, 2), cfg);
    CHECK(std::abs(est.find("avg").mean_age - expected) / expected < 0.03);
  }
  SUBCASE("vertex-transitive C_4 matches a singleton") {
    auto cfg = config(7, {VertexSet{2}});
    cfg.track_network_average = true;
    const auto est = simulate(cycle_graph(4), cfg);
    const auto& one = est.find("3");
    const auto& avg = est.find("avg");
    const double noise = std::hypot(one.batch_std, avg.batch_std);
    CHECK(std::abs(one.mean_age - avg.mean_age) <= 4 * noise);
  }
  SUBCASE("average of vertex means equals the tracked average") {
    auto cfg = config(8, {});
    cfg.track_network_average = true;
    cfg.track_vertices = true;
    cfg.t_end = 2e4;
    const auto g = path_graph(5);
    const auto est = simulate(g, cfg);
    REQUIRE(est.vertex_mean_age.size() == 5);
    double total = 0.0;
    for (double a : est.vertex_mean_age) total += a;
    CHECK(total / 5 == doctest::Approx(est.find("avg").mean_age).epsilon(1e-9));
  }
}

TEST_CASE("reproducibility") {
  auto cfg = config(42, {VertexSet{0}, VertexSet{1, 2}});
  cfg.t_end = 1e4;
  cfg.track_network_average = true;
  const auto g = cycle_graph(5);
  std::ostringstream a;
  std::ostringstream b;
  simulate(g, cfg).write_csv(a);
  simulate(g, cfg).write_csv(b);
  CHECK(a.str() == b.str());
  cfg.seed = 43;
  std::ostringstream c;
  simulate(g, cfg).write_csv(c);
  CHECK(a.str() != c.str());
}

TEST_CASE("event counts") {
  auto cfg = config(9, {VertexSet{0}});
  const auto est = simulate(complete_graph(4), cfg);
  CHECK(est.events >= est.versions_generated);
  // Source refreshes form a Poisson count with mean and variance lambda_e * t_end.
  const double mean = cfg.rates.source_rate * cfg.t_end;
  CHECK(std::abs(static_cast<double>(est.versions_generated) - mean) < 3 * std::sqrt(mean));
  // Total events: Poisson with rate lambda_e + lambda + 4 lambda.
  const double total = 6 * cfg.t_end;
  CHECK(std::abs(static_cast<double>(est.events) - total) < 4 * std::sqrt(total));
}

TEST_CASE("trace") {
  auto cfg = config(10, {VertexSet{0}});
  cfg.t_end = 200;
  std::ostringstream trace;
  cfg.trace = &trace;
  const auto est = simulate(empty_graph(3), cfg);

  std::istringstream in(trace.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,event_class,actor,target,source_counter");
  std::uint64_t rows = 0;
  std::uint64_t last_counter = 0;
  double last_t = 0.0;
  bool only_source_events = true;
  while (std::getline(in, line)) {
    ++rows;
    std::istringstream fields(line);
    std::string t, cls, actor, target, counter;
    std::getline(fields, t, ',');
    std::getline(fields, cls, ',');
    std::getline(fields, actor, ',');
    std::getline(fields, target, ',');
    std::getline(fields, counter, ',');
    CHECK(std::stod(t) >= last_t);
    last_t = std::stod(t);
    const auto c = std::stoull(counter);
    CHECK(c >= last_counter);
    last_counter = c;
    // Isolated nodes never gossip.
    if (cls == "3") only_source_events = false;
    if (cls == "2") CHECK(actor == "0");
  }
  CHECK(only_source_events);
  CHECK(rows == est.events);
  CHECK(last_counter == est.versions_generated);
}

TEST_CASE("estimate CSV") {
  auto cfg = config(11, {VertexSet{0}});
  cfg.t_end = 1e3;
  std::ostringstream out;
  simulate(complete_graph(2), cfg).write_csv(out);
  CHECK(out.str().rfind("set,mean_age,batch_std,events\n1,", 0) == 0);
}

TEST_CASE("configuration errors") {
  const auto g = complete_graph(3);
  auto cfg = config(1, {VertexSet{0}});
  SUBCASE("horizon") {
    cfg.t_end = 0;
    CHECK_THROWS_AS(simulate(g, cfg), std::invalid_argument);
  }
  SUBCASE("burn-in") {
    cfg.burn_in = 1.0;
    CHECK_THROWS_AS(simulate(g, cfg), std::invalid_argument);
  }
  SUBCASE("batches") {
    cfg.batches = 0;
    CHECK_THROWS_AS(simulate(g, cfg), std::invalid_argument);
  }
  SUBCASE("nothing tracked") {
    cfg.tracked_sets.clear();
    CHECK_THROWS_AS(simulate(g, cfg), std::invalid_argument);
  }
  SUBCASE("empty set") {
    cfg.tracked_sets = {VertexSet{}};
    CHECK_THROWS_AS(simulate(g, cfg), std::invalid_argument);
  }
  SUBCASE("set outside graph") {
    cfg.tracked_sets = {VertexSet{5}};
    CHECK_THROWS_AS(simulate(g, cfg), std::invalid_argument);
  }
}

TEST_CASE("pool_estimates") {
  SimEstimate a;
  a.sets = {{"1", 2.0, 0.3}};
  a.events = 10;
  a.versions_generated = 4;
  SimEstimate b;
  b.sets = {{"1", 4.0, 0.4}};
  b.events = 20;
  b.versions_generated = 6;
  const auto pooled = pool_estimates({a, b});
  CHECK(pooled.sets.front().mean_age == 3.0);
  CHECK(pooled.sets.front().batch_std == doctest::Approx(0.25));
  CHECK(pooled.events == 30);
  CHECK_THROWS_AS(pool_estimates({}), std::invalid_argument);
}
