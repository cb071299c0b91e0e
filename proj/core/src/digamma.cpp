#include "gossip_age/digamma.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gossip_age {
namespace {

// cot(pi x) via x mod 1, so large |x| loses no precision.
double cot_pi(double x) {
  double r = x - std::floor(x);  // exact in binary floating point
  if (r > 0.5) return -1.0 / std::tan(std::numbers::pi * (1.0 - r));
  return 1.0 / std::tan(std::numbers::pi * r);
}

double digamma_positive(double x) {
  double shift = 0.0;
  while (x < 10.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  // ln x - 1/(2x) - sum B_2k / (2k x^2k), truncated after x^-14.
  const double inv = 1.0 / x;
  const double z = inv * inv;
  const double tail =
      z * (1.0 / 12 -
           z * (1.0 / 120 -
                z * (1.0 / 252 -
                     z * (1.0 / 240 - z * (1.0 / 132 - z * (691.0 / 32760 - z * (1.0 / 12)))))));
  return shift + std::log(x) - 0.5 * inv - tail;
}

}  // namespace

double digamma(double x) {
  if (!std::isfinite(x)) throw std::domain_error("digamma: argument must be finite");
  if (x <= 0.0 && x == std::floor(x)) throw std::domain_error("digamma: pole at non-positive integer");
  if (x < 0.0) {
    // psi(x) = psi(1 - x) - pi cot(pi x)
    return digamma_positive(1.0 - x) - std::numbers::pi * cot_pi(x);
  }
  return digamma_positive(x);
}

}  // namespace gossip_age
