#include <bit>
#include <cmath>
#include <stdexcept>
#include <set>
#include <sstream>

#include "doctest.h"
#include "gossip_age/age_exact.hpp"
#include "gossip_age/age_structured.hpp"
#include "gossip_age/error.hpp"
#include "gossip_age/experiments.hpp"
#include "gossip_age/generators.hpp"
#include "oracles.hpp"

using namespace gossip_age;

namespace {

std::set<Vertex> as_std_set(std::uint32_t mask) {
  std::set<Vertex> s;
  for (Vertex v = 0; v < 32; ++v)
    if (mask & (std::uint32_t{1} << v)) s.insert(v);
  return s;
}

double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST_CASE("hand-unrolled values") {
  const GossipRates unit;
  CHECK(std::abs(solve_exact(complete_graph(2), unit).age(VertexSet{0}) - 4.0 / 3.0) < 1e-12);
  const auto k3 = solve_exact(complete_graph(3), unit);
  CHECK(std::abs(k3.age(VertexSet{0}) - 33.0 / 20.0) < 1e-12);
  CHECK(std::abs(k3.age(VertexSet{0, 1}) - 6.0 / 5.0) < 1e-12);

  const auto star = solve_exact(complete_bipartite(1, 2), unit);
  CHECK(std::abs(star.age(VertexSet{1}) - 48.0 / 25.0) < 1e-12);
  CHECK(std::abs(star.age(VertexSet{0}) - 51.0 / 35.0) < 1e-12);
  CHECK(std::abs(star.age(VertexSet{0, 1}) - 6.0 / 5.0) < 1e-12);
}

TEST_CASE("full set equals lambda_e / lambda exactly") {
  const GossipRates rates{2.5, 0.5};
  for (auto g : {complete_graph(5), empty_graph(4), cycle_graph(6)}) {
    const auto t = solve_exact(g, rates);
    CHECK(t.age(t.full_mask()) == 2.5 / 0.5);
  }
}

TEST_CASE("edgeless graph gives n lambda_e / (lambda |S|)") {
  const GossipRates rates{1.0, 2.0};
  const auto t = solve_exact(empty_graph(6), rates);
  for (std::uint32_t mask = 1; mask <= t.full_mask(); ++mask) {
    const double k = std::popcount(mask);
    CHECK(t.age(mask) == doctest::Approx(6.0 / (2.0 * k)).epsilon(1e-14));
  }
}

TEST_CASE("solve_exact matches the memoized set recursion") {
  const GossipRates rates{1.3, 0.7};
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const std::size_t n = 2 + seed % 7;
    auto g = gen_gnp(n, 0.45, seed);
    const auto table = solve_exact(g, rates);
    oracle::RecursiveAge ref(g, rates.source_rate, rates.gossip_rate);
    for (std::uint32_t mask = 1; mask <= table.full_mask(); ++mask) {
      CHECK(rel_err(table.age(mask), ref(as_std_set(mask))) < 1e-12);
    }
  }
}

TEST_CASE("superset monotonicity inside one table") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = gen_gnp(7, 0.4, seed);
    const auto t = solve_exact(g, {});
    for (std::uint32_t mask = 1; mask <= t.full_mask(); ++mask)
      for (Vertex i = 0; i < 7; ++i)
        CHECK(t.age(mask | (1u << i)) <= t.age(mask) + 1e-12);
  }
}

TEST_CASE("scale law") {
  auto g = cycle_graph(5);
  const auto base = solve_exact(g, {1.0, 1.0});
  const auto doubled_source = solve_exact(g, {2.0, 1.0});
  const auto both_scaled = solve_exact(g, {3.0, 3.0});
  for (std::uint32_t mask = 1; mask <= base.full_mask(); ++mask) {
    CHECK(rel_err(doubled_source.age(mask), 2 * base.age(mask)) < 1e-12);
    CHECK(rel_err(both_scaled.age(mask), base.age(mask)) < 1e-12);
  }
}

TEST_CASE("solve_exact limits and rate validation") {
  CHECK_THROWS_AS(solve_exact(empty_graph(21), {}), InfeasibleSize);
  CHECK_THROWS_AS(solve_exact(complete_graph(3), {0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(solve_exact(complete_graph(3), {1.0, -1.0}), std::invalid_argument);
  CHECK_THROWS_AS(solve_exact(complete_graph(3), {}).age(0u), std::out_of_range);
  CHECK_THROWS_AS(solve_exact(complete_graph(3), {}).age(VertexSet{3}), std::out_of_range);
}

TEST_CASE("subset table CSV") {
  std::ostringstream out;
  solve_exact(complete_graph(2), {}).write_csv(out);
  CHECK(out.str() == "subset_bitmask,size,age\n1,1,1.3333333333333333\n2,1,1.3333333333333333\n3,2,1\n");
}

TEST_CASE("identity residual") {
  SUBCASE("vanishes on solver output") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const std::size_t n = 2 + seed % 9;
      auto g = gen_gnp(n, 0.35, seed);
      const GossipRates rates{0.5 + seed % 3, 1.0 + seed % 2};
      const auto t = solve_exact(g, rates);
      for (std::uint32_t mask = 1; mask <= t.full_mask(); ++mask)
        CHECK(identity_residual(g, rates, t, VertexSet::from_mask(mask)) <= 1e-10 * rates.source_rate);
    }
  }
  SUBCASE("full set") {
    const auto g = complete_graph(4);
    const GossipRates rates{3.0, 2.0};
    const auto t = solve_exact(g, rates);
    CHECK(identity_residual(g, rates, t, VertexSet::all(4)) == 0.0);
  }
  SUBCASE("perturbing v({1}) on K_2 by one gives 3/2") {
    const auto g = complete_graph(2);
    const auto t = solve_exact(g, {});
    const auto bumped = t.with_age(VertexSet{0}, t.age(VertexSet{0}) + 1.0);
    CHECK(identity_residual(g, {}, bumped, VertexSet{0}) == doctest::Approx(1.5).epsilon(1e-12));
  }
}

TEST_CASE("monotonicity_check") {
  SUBCASE("edgeless graph") {
    const auto r = monotonicity_check(empty_graph(4), {});
    CHECK(r.holds);
    CHECK(r.candidates == 6);
  }
  SUBCASE("cliques have no candidates") {
    const auto r = monotonicity_check(complete_graph(5), {});
    CHECK(r.holds);
    CHECK(r.candidates == 0);
    CHECK_FALSE(r.witness_edge.has_value());
  }
  SUBCASE("adding an edge can raise an age when rates split by degree") {
    // Edge {1,2} plus isolated 3. Joining 3 to 1 halves 1's push rate toward 2.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> e{{1, 2}};
    const auto g = from_labeled_edges(3, e);
    const auto before = solve_exact(g, {});
    const auto after = solve_exact(g.with_edge(0, 2), {});
    CHECK(before.age(VertexSet{1}) == doctest::Approx(1.875).epsilon(1e-14));
    CHECK(after.age(VertexSet{1}) == doctest::Approx(1.92).epsilon(1e-14));

    const auto r = monotonicity_check(g, {});
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness_edge.has_value());
    CHECK(r.worst_violation > 0.04);
    const auto bigger = solve_exact(g.with_edge(r.witness_edge->u, r.witness_edge->v), {});
    CHECK(bigger.age(r.witness_set) - before.age(r.witness_set) == doctest::Approx(r.worst_violation));
  }
  SUBCASE("exhaustive violation counts on small labeled graphs") {
    // (graph, addable edge) pairs with some S where the age rises.
    auto count_for = [](std::size_t n) {
      std::size_t violating_pairs = 0;
      const std::size_t pairs = n * (n - 1) / 2;
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
        const auto g = graph_from_pair_mask(n, code);
        const auto base = solve_exact(g, {});
        for (Vertex u = 0; u < n; ++u)
          for (Vertex v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            const auto added = solve_exact(g.with_edge(u, v), {});
            bool rises = false;
            for (std::uint32_t m = 1; m <= base.full_mask() && !rises; ++m)
              rises = added.age(m) > base.age(m) + kMonotonicityTolerance;
            if (rises) ++violating_pairs;
          }
      }
      return violating_pairs;
    };
    CHECK(count_for(3) == 9);
    CHECK(count_for(4) == 168);
  }
  SUBCASE("size limit") { CHECK_THROWS_AS(monotonicity_check(empty_graph(13), {}), InfeasibleSize); }
}

TEST_CASE("corollary_bounds_check") {
  SUBCASE("K_2") {
    const auto r = corollary_bounds_check(solve_exact(complete_graph(2), {}), {});
    CHECK(r.holds);
    CHECK(r.lower == doctest::Approx(4.0 / 3.0));
    CHECK(r.upper == 2.0);
  }
  SUBCASE("edgeless K3 complement") {
    const auto r = corollary_bounds_check(solve_exact(empty_graph(3), {}), {});
    CHECK(r.holds);
    CHECK(r.lower == doctest::Approx(33.0 / 20.0));
    CHECK(r.max_singleton == doctest::Approx(3.0));
  }
  SUBCASE("star center sits below the clique value") {
    const auto r = corollary_bounds_check(solve_exact(complete_bipartite(1, 2), {}), {});
    CHECK_FALSE(r.holds);
    CHECK(r.min_singleton == doctest::Approx(51.0 / 35.0));
    CHECK(r.min_singleton < r.lower);
  }
  SUBCASE("upper bound holds on every graph with 4 vertices") {
    for (std::uint64_t code = 0; code < 64; ++code) {
      const auto r = corollary_bounds_check(solve_exact(graph_from_pair_mask(4, code), {}), {});
      CHECK(r.max_singleton <= r.upper * (1 + 1e-12));
    }
  }
  SUBCASE("rates scale the bounds") {
    const GossipRates rates{2.0, 1.0};
    const auto r = corollary_bounds_check(solve_exact(complete_graph(3), rates), rates);
    CHECK(r.holds);
    CHECK(r.upper == 6.0);
    CHECK(r.lower == doctest::Approx(3.3));
  }
}
