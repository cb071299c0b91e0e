#include <cmath>
#include <stdexcept>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "gossip_age/age_structured.hpp"
#include "gossip_age/bounds.hpp"
#include "gossip_age/digamma.hpp"
#include "oracles.hpp"

using namespace gossip_age;

namespace {

const double kGamma = oracle::euler_gamma_oracle();

}  // namespace

TEST_CASE("Euler's constant oracle") { CHECK(std::abs(kGamma - kEulerGamma) < 1e-13); }

TEST_CASE("digamma against the series") {
  CHECK(std::abs(digamma(1.0) - oracle::digamma_series_oracle(1.0, kGamma)) < 1e-10);
  CHECK(std::abs(digamma(1.0) + kGamma) < 1e-10);
  CHECK(std::abs(digamma(2.0) - (1.0 - kGamma)) < 1e-10);
  CHECK(std::abs(digamma(0.5) - (-kGamma - 2 * std::numbers::ln2)) < 1e-10);
  for (double x : {0.3, 0.75, 1.5, 3.7, 9.99, 10.01, 25.5, 100.0}) {
    CAPTURE(x);
    CHECK(std::abs(digamma(x) - oracle::digamma_series_oracle(x, kGamma)) < 1e-10);
  }
  CHECK(std::abs(oracle::digamma_series_oracle(1001.0, kGamma) - std::log(1000.0)) < 1e-3);
  CHECK(std::abs(digamma(1001.0) - std::log(1000.0)) < 1e-3);
}

TEST_CASE("digamma recurrence on the half-step grid") {
  for (int k = 1; k <= 200; ++k) {
    const double x = 0.5 * k;
    CAPTURE(x);
    CHECK(std::abs(digamma(x + 1) - digamma(x) - 1.0 / x) < 1e-10);
  }
}

TEST_CASE("digamma reflection") {
  for (int k = -99; k <= 99; ++k) {
    if (k % 5 == 0) continue;  // integers and half-integers
    const double x = 0.1 * k;
    CAPTURE(x);
    const double cot = std::cos(std::numbers::pi * x) / std::sin(std::numbers::pi * x);
    CHECK(std::abs(digamma(1 - x) - digamma(x) - std::numbers::pi * cot) < 1e-8);
  }
}

TEST_CASE("digamma range and poles") {
  CHECK(std::abs(digamma(1e6) - (std::log(1e6) - 0.5e-6)) < 1e-10);
  CHECK(std::abs(digamma(-1e6 + 0.5) - digamma(1e6 + 0.5)) < 1e-10);
  CHECK(std::abs(digamma(-0.5) - (digamma(0.5) + 2.0)) < 1e-10);
  CHECK_THROWS_AS(digamma(0.0), std::domain_error);
  CHECK_THROWS_AS(digamma(-3.0), std::domain_error);
  CHECK_THROWS_AS(digamma(NAN), std::domain_error);
  CHECK_THROWS_AS(digamma(INFINITY), std::domain_error);
}

TEST_CASE("bipartite log bound") {
  CHECK(bipartite_log_bound(2, 4) == doctest::Approx(4 * std::numbers::ln2));
  CHECK(bipartite_log_bound(10, 10) == doctest::Approx(10 * std::log(10.0)));
  CHECK(bipartite_log_bound(3, 50) == doctest::Approx(3 * std::log(50.0)));
  CHECK_THROWS_AS(bipartite_log_bound(1, 5), std::invalid_argument);
  // K_{2,2} exceeds the bound: u(1,1) = 10/7 > 2 ln 2.
  CHECK(bipartite_grid(2, 2).at(1, 1) == doctest::Approx(10.0 / 7.0).epsilon(1e-14));
  CHECK(bipartite_grid(2, 2).at(1, 1) > bipartite_log_bound(2, 2));
  for (std::size_t left = 2; left <= 24; ++left)
    for (std::size_t right = 2; right <= 24; ++right) {
      if (left == 2 && right == 2) continue;
      CAPTURE(left);
      CAPTURE(right);
      CHECK(bipartite_grid(left, right).at(1, 1) <= bipartite_log_bound(left, right));
    }
}

TEST_CASE("d-regular bound sums") {
  SUBCASE("n = 100") {
    double h51 = 0.0;
    for (int i = 1; i <= 51; ++i) h51 += 1.0 / i;
    const auto s = dreg_bound_sums(100, 3, 0.1, 1, 1);
    CHECK(s.harmonic_form == doctest::Approx(10 * h51).epsilon(1e-12));
    CHECK(s.harmonic_form == doctest::Approx(45.2).epsilon(2e-3));
  }
  SUBCASE("n = 2") { CHECK(dreg_bound_sums(2, 1, 0.2, 1, 1).harmonic_form == doctest::Approx(1.5 / 0.2)); }
  SUBCASE("rates scale both forms") {
    const auto a = dreg_bound_sums(50, 3, 0.1, 1, 1);
    const auto b = dreg_bound_sums(50, 3, 0.1, 3, 2);
    CHECK(b.harmonic_form == doctest::Approx(1.5 * a.harmonic_form));
    CHECK(b.product_form == doctest::Approx(1.5 * a.product_form));
  }
  SUBCASE("product form never exceeds the harmonic form") {
    for (std::size_t n : {10u, 100u, 1000u})
      for (double c : {0.05, 0.1, 0.3}) {
        const auto s = dreg_bound_sums(n, 3, c, 1, 1);
        CHECK(s.product_form > 0);
        CHECK(s.product_form <= s.harmonic_form);
      }
  }
  SUBCASE("domain") {
    CHECK_THROWS_AS(dreg_bound_sums(10, 3, 0.5, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(dreg_bound_sums(10, 3, 0.0, 1, 1), std::invalid_argument);
  }
}

TEST_CASE("G(n,p) singleton bound") {
  SUBCASE("n = 10 direct sum") {
    double sum = 0.0;
    for (int i = 1; i <= 10; ++i) sum += 1.0 / (i * (10 - i + 1.0 / 3.0));
    CHECK(gnp_singleton_bound(10).direct_sum == doctest::Approx(30 * sum).epsilon(1e-14));
  }
  SUBCASE("closed form reproduces the sum") {
    for (std::size_t n : {2u, 3u, 10u, 77u, 1000u, 65536u}) {
      const auto b = gnp_singleton_bound(n);
      CAPTURE(n);
      CHECK(std::abs(b.closed_form - b.direct_sum) <= 1e-10 * b.direct_sum);
    }
  }
  SUBCASE("digamma terms track the log part") {
    // psi(1 - (n + 1/3)) = psi(n + 1/3) + pi cot(pi (n + 1/3)) by reflection.
    for (std::size_t n : {10u, 100u, 1000u}) {
      const double x = static_cast<double>(n) + 1.0 / 3.0;
      const double expected = digamma(x) + std::numbers::pi / std::tan(std::numbers::pi * x) +
                              digamma(static_cast<double>(n) + 1);
      CHECK(gnp_singleton_bound(n).digamma_terms == doctest::Approx(expected).epsilon(1e-12));
    }
  }
  SUBCASE("ratio to ln n and monotonicity") {
    for (std::size_t n = 64; n <= 65536; n *= 2) {
      const double r = gnp_singleton_bound(n).direct_sum / std::log(static_cast<double>(n));
      CHECK(r >= 3.0);
      CHECK(r <= 9.0);
      if (n <= 8192) CHECK(gnp_singleton_bound(2 * n).direct_sum > gnp_singleton_bound(n).direct_sum);
    }
  }
  CHECK_THROWS_AS(gnp_singleton_bound(1), std::invalid_argument);
}

TEST_CASE("isolated vertex expectation") {
  CHECK(isolated_expectation(50, 0.0) == 50.0);
  CHECK(isolated_expectation(50, 1.0) == 0.0);
  CHECK(isolated_expectation(1, 1.0) == 1.0);
  CHECK(isolated_expectation(100, 0.05) == doctest::Approx(0.622).epsilon(1e-3));
  double prev = 100.0;
  for (int k = 1; k <= 20; ++k) {
    const double mu = isolated_expectation(100, 0.05 * k);
    CHECK(mu >= 0.0);
    CHECK(mu <= prev);
    prev = mu;
  }
  CHECK_THROWS_AS(isolated_expectation(10, 1.5), std::invalid_argument);
}

TEST_CASE("isolated vertex concentration") {
  SUBCASE("n = 2000, d = 0.75") {
    const auto r = isolated_concentration(2000, 0.75, 200, 3);
    CHECK(r.counts.size() == 200);
    CHECK(r.p == doctest::Approx(0.75 * std::log(2000.0) / 2000));
    CHECK(r.mu == doctest::Approx(isolated_expectation(2000, r.p)));
    CHECK(std::abs(r.empirical_mean - r.mu) <= 3 * r.standard_error);
    CHECK(r.inside_fraction >= 0.95);
  }
  SUBCASE("reproducible") {
    CHECK(isolated_concentration(300, 0.6, 10, 4).counts == isolated_concentration(300, 0.6, 10, 4).counts);
  }
  SUBCASE("domain") {
    CHECK_THROWS_AS(isolated_concentration(2000, 1.0, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(isolated_concentration(2000, 0.5, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(isolated_concentration(2000, 0.9, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(isolated_concentration(1, 0.9, 10, 1), std::invalid_argument);
  }
}

TEST_CASE("Chernoff tails") {
  CHECK(chernoff_tail(3, 10, 0.0, 0.5) == 3.0);
  CHECK(chernoff_tail(5, 10, 0.5, 0.5) == doctest::Approx(3 * std::exp(-0.25 * 25 * 0.5 / 8)));

  // 30 ln n / (delta^2 n) with delta = 1/3 exceeds 1 at n = 2000, so p is capped at 1.
  const double p_nominal = 30 * std::log(2000.0) / ((1.0 / 9.0) * 2000);
  REQUIRE(p_nominal > 1.0);
  CHECK(chernoff_tail(1000, 2000, 1.0, 1.0 / 3.0) < 1e-12);
  CHECK(chernoff_union_bound(2000, 1.0, 1.0 / 3.0) < 0.01);

  const double p_half = 30 * std::log(2000.0) / (0.25 * 2000);
  CHECK(chernoff_tail(1000, 2000, p_half, 0.5) < 1e-12);
  CHECK(chernoff_union_bound(2000, p_half, 0.5) < 0.01);

  // Direct summation agrees where the terms are representable.
  double direct = 0.0;
  for (int k = 1; k <= 10; ++k) {
    double binom = 1.0;
    for (int j = 1; j <= k; ++j) binom = binom * (20 - k + j) / j;
    direct += binom * std::exp(-0.25 * k * (20 - k) * 0.3 / 8);
  }
  CHECK(chernoff_union_bound(20, 0.3, 0.5) == doctest::Approx(3 * direct).epsilon(1e-12));

  CHECK_THROWS_AS(chernoff_tail(0, 10, 0.5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(chernoff_tail(6, 10, 0.5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(chernoff_tail(2, 10, 1.2, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(chernoff_tail(2, 10, 0.5, 1.0), std::invalid_argument);
}

TEST_CASE("bound sweep CSV") {
  std::ostringstream out;
  write_bound_csv(out, {{"bipartite_log", std::nullopt, {{"L", 2}, {"R", 4}}, 2.5},
                        {"bipartite_log", 7, {{"L", 3}, {"R", 4}}, 0.125}});
  CHECK(out.str() == "formula_id,n,L,R,value\nbipartite_log,,2,4,2.5\nbipartite_log,7,3,4,0.125\n");
}
