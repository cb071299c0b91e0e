#pragma once

namespace gossip_age {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// Digamma psi(x) for finite x that is not a non-positive integer.
/// Negative arguments go through the reflection formula with an exact
/// argument reduction for cot(pi x); positive arguments are shifted up to
/// x >= 10 with psi(x) = psi(x+1) - 1/x and finished with the asymptotic
/// expansion. Throws std::domain_error at poles and on non-finite input.
double digamma(double x);

}  // namespace gossip_age
