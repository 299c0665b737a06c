#pragma once

#include <cstddef>

namespace granger {

/// Degrees of freedom of an F distribution. Both must be >= 1.
struct FParams {
    std::size_t d1 = 1;
    std::size_t d2 = 1;
};

/// log Gamma(x) for x > 0 via the Lanczos approximation (g = 7, 9 terms).
double log_gamma(double x);

/// Iteration cap of the incomplete-beta continued fraction.
inline constexpr int kBetaMaxIterations = 300;

/**
 * Regularized incomplete beta function I_x(a, b).
 *
 * Modified Lentz evaluation of the continued fraction, switching to
 * 1 - I_{1-x}(b, a) when x > (a + 1) / (a + b + 2). Throws InvalidArgument
 * outside the domain and NonConvergence if kBetaMaxIterations is exhausted.
 */
double regularized_incomplete_beta(double x, double a, double b);

/// P(F > stat) for F ~ F(d1, d2). Throws InvalidStatistic on negative or non-finite input.
double f_sf(double stat, FParams params);

/// P(F <= stat); the complement of f_sf evaluated through the beta symmetry.
double f_cdf(double stat, FParams params);

}  // namespace granger
