#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gossip_age {

/// min{R ln L, L ln R}, an upper bound on u(1,1) for K_{L,R}. L, R >= 2.
double bipartite_log_bound(std::size_t left, std::size_t right);

struct DregBoundSums {
  /// (lambda_e/lambda) / (c_d + 1/n) * (1 + sum_{i<=n/2} prod_{j<=i} c_d j / ((j+1)/n + c_d (j+1)))
  double product_form = 0.0;
  /// lambda_e / (c_d lambda) * (1 + sum_{i<=n/2} 1/(i+1))
  double harmonic_form = 0.0;
};

/// Small-subset part of the d-regular age bound after unrolling with
/// expansion constant c_d in (0, 1/2). Uses floor(n/2) terms.
DregBoundSums dreg_bound_sums(std::size_t n, std::size_t d, double c_d, double lambda_e,
                              double lambda);

struct GnpSingletonBound {
  /// 3n sum_{i=1}^{n} 1 / (i (n - i + 1/3)); the canonical value.
  double direct_sum = 0.0;
  /// psi(1 - (n + 1/3)) + psi(n + 1), the variable part of the digamma form.
  double digamma_terms = 0.0;
  /// Exact evaluation of direct_sum through digamma:
  /// 3n/(n+1/3) [psi(n+1) + gamma + psi(n+1/3) - psi(1/3)].
  double closed_form = 0.0;
};

/// Singleton age bound for dense G(n,p), n >= 2.
GnpSingletonBound gnp_singleton_bound(std::size_t n);

/// n (1 - p)^(n - 1), the exact expected number of isolated vertices.
double isolated_expectation(std::size_t n, double p);

struct IsolatedConcentration {
  double p = 0.0;
  double mu = 0.0;
  double empirical_mean = 0.0;
  double standard_error = 0.0;  // sample std / sqrt(samples)
  double band = 0.0;            // n^d
  double inside_fraction = 0.0; // samples with |X - mu| < band
  std::vector<std::size_t> counts;
};

/// Samples G(n, d ln n / n) `samples` times and counts isolated vertices.
/// Requires 1/2 < d < 1, p < 1 and samples >= 2.
IsolatedConcentration isolated_concentration(std::size_t n, double d_exponent,
                                             std::size_t samples, std::uint64_t seed);

/// 3 exp(-alpha^2 / 8) with alpha = delta sqrt(k (n - k) p).
double chernoff_tail(std::size_t k, std::size_t n, double p, double delta);

/// 3 sum_{k=1}^{n/2} C(n,k) exp(-delta^2 k (n-k) p / 8), summed in the log domain.
double chernoff_union_bound(std::size_t n, double p, double delta);

/// One evaluated bound, for sweep export.
struct BoundReport {
  std::string formula_id;
  std::optional<std::size_t> n;
  std::vector<std::pair<std::string, double>> params;
  double value = 0.0;
};

/// CSV `formula_id,n,<param names>...,value`. All reports must share the
/// same parameter names.
void write_bound_csv(std::ostream& out, const std::vector<BoundReport>& reports);

}  // namespace gossip_age
