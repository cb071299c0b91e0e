#include "gossip_age/bounds.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "gossip_age/csv.hpp"
#include "gossip_age/digamma.hpp"
#include "gossip_age/generators.hpp"
#include "gossip_age/rng.hpp"
#include "gossip_age/structure.hpp"

namespace gossip_age {
namespace {

void require_probability(double p, const char* who) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument(std::string(who) + ": p must lie in [0, 1]");
}

void require_delta(double delta, const char* who) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument(std::string(who) + ": delta must lie in (0, 1)");
  }
}

}  // namespace

double bipartite_log_bound(std::size_t left, std::size_t right) {
  if (left < 2 || right < 2) throw std::invalid_argument("bipartite_log_bound: L and R must be >= 2");
  const auto L = static_cast<double>(left);
  const auto R = static_cast<double>(right);
  return std::min(R * std::log(L), L * std::log(R));
}

DregBoundSums dreg_bound_sums(std::size_t n, std::size_t d, double c_d, double lambda_e,
                              double lambda) {
  if (!(c_d > 0.0 && c_d < 0.5)) throw std::invalid_argument("dreg_bound_sums: c_d must lie in (0, 1/2)");
  if (n < 2) throw std::invalid_argument("dreg_bound_sums: n must be >= 2");
  if (d < 1) throw std::invalid_argument("dreg_bound_sums: d must be >= 1");
  if (!(lambda_e > 0.0) || !(lambda > 0.0)) throw std::invalid_argument("dreg_bound_sums: rates must be positive");
  const auto N = static_cast<double>(n);
  double product = 1.0;
  double product_sum = 1.0;
  double harmonic_sum = 1.0;
  for (std::size_t i = 1; i <= n / 2; ++i) {
    const auto J = static_cast<double>(i);
    product *= c_d * J / ((J + 1.0) / N + c_d * (J + 1.0));
    product_sum += product;
    harmonic_sum += 1.0 / (J + 1.0);
  }
  const double ratio = lambda_e / lambda;
  return {ratio / (c_d + 1.0 / N) * product_sum, ratio / c_d * harmonic_sum};
}

GnpSingletonBound gnp_singleton_bound(std::size_t n) {
  if (n < 2) throw std::invalid_argument("gnp_singleton_bound: n must be >= 2");
  const auto N = static_cast<double>(n);
  const double shifted = N + 1.0 / 3.0;
  double sum = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto I = static_cast<double>(i);
    sum += 1.0 / (I * (shifted - I));
  }
  GnpSingletonBound out;
  out.direct_sum = 3.0 * N * sum;
  out.digamma_terms = digamma(1.0 - shifted) + digamma(N + 1.0);
  out.closed_form = 3.0 * N / shifted *
                    (digamma(N + 1.0) + kEulerGamma + digamma(shifted) - digamma(1.0 / 3.0));
  return out;
}

double isolated_expectation(std::size_t n, double p) {
  require_probability(p, "isolated_expectation");
  return static_cast<double>(n) * std::pow(1.0 - p, static_cast<double>(n) - 1.0);
}

IsolatedConcentration isolated_concentration(std::size_t n, double d_exponent,
                                             std::size_t samples, std::uint64_t seed) {
  if (!(d_exponent > 0.5 && d_exponent < 1.0)) {
    throw std::invalid_argument("isolated_concentration: exponent d must lie in (1/2, 1)");
  }
  if (n < 2) throw std::invalid_argument("isolated_concentration: n must be >= 2");
  if (samples < 2) throw std::invalid_argument("isolated_concentration: need at least 2 samples");
  const auto N = static_cast<double>(n);
  IsolatedConcentration out;
  out.p = d_exponent * std::log(N) / N;
  if (!(out.p < 1.0)) throw std::invalid_argument("isolated_concentration: p = d ln n / n must be < 1");
  out.mu = isolated_expectation(n, out.p);
  out.band = std::pow(N, d_exponent);

  out.counts.reserve(samples);
  double sum = 0.0;
  std::size_t inside = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto g = gen_gnp(n, out.p, derive_seed(seed, s));
    const auto count = structure_report(g).isolated_count;
    out.counts.push_back(count);
    sum += static_cast<double>(count);
    if (std::abs(static_cast<double>(count) - out.mu) < out.band) ++inside;
  }
  const auto S = static_cast<double>(samples);
  out.empirical_mean = sum / S;
  double ss = 0.0;
  for (auto c : out.counts) {
    const double dev = static_cast<double>(c) - out.empirical_mean;
    ss += dev * dev;
  }
  out.standard_error = std::sqrt(ss / (S - 1.0) / S);
  out.inside_fraction = static_cast<double>(inside) / S;
  return out;
}

double chernoff_tail(std::size_t k, std::size_t n, double p, double delta) {
  require_probability(p, "chernoff_tail");
  require_delta(delta, "chernoff_tail");
  if (k < 1 || 2 * k > n) throw std::invalid_argument("chernoff_tail: need 1 <= k <= n/2");
  const double alpha_sq =
      delta * delta * static_cast<double>(k) * static_cast<double>(n - k) * p;
  return 3.0 * std::exp(-alpha_sq / 8.0);
}

double chernoff_union_bound(std::size_t n, double p, double delta) {
  require_probability(p, "chernoff_union_bound");
  require_delta(delta, "chernoff_union_bound");
  if (n < 2) throw std::invalid_argument("chernoff_union_bound: n must be >= 2");
  const auto N = static_cast<double>(n);
  const double log_n_fact = std::lgamma(N + 1.0);
  double total = 0.0;
  for (std::size_t k = 1; k <= n / 2; ++k) {
    const auto K = static_cast<double>(k);
    const double log_binom = log_n_fact - std::lgamma(K + 1.0) - std::lgamma(N - K + 1.0);
    total += std::exp(log_binom - delta * delta * K * (N - K) * p / 8.0);
  }
  return 3.0 * total;
}

void write_bound_csv(std::ostream& out, const std::vector<BoundReport>& reports) {
  std::vector<std::string> header{"formula_id", "n"};
  if (!reports.empty())
    for (const auto& [name, _] : reports.front().params) header.push_back(name);
  header.push_back("value");
  for (const auto& h : header) {
    if (&h != &header.front()) out << ',';
    out << h;
  }
  out << '\n';
  for (const auto& r : reports) {
    if (r.params.size() + 3 != header.size()) {
      throw std::invalid_argument("write_bound_csv: reports have different parameter sets");
    }
    out << r.formula_id << ',';
    if (r.n) out << *r.n;
    for (const auto& [_, value] : r.params) out << ',' << format_double(value);
    out << ',' << format_double(r.value) << '\n';
  }
}

}  // namespace gossip_age
