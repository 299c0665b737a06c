#pragma once

#include "granger/series_store.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace granger {

/**
 * SplitMix64 generator (Steele, Lea & Flood 2014).
 *
 * The state advances by 0x9E3779B97F4A7C15 and each output is the standard
 * 30/27/31 xor-shift-multiply finaliser. Uniforms take the top 53 bits.
 * Gaussians use the Box-Muller transform on (1 - u1, u2) and return both
 * members of each pair, cosine first.
 */
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept;
    /// Uniform on [0, 1).
    double uniform() noexcept;
    double gaussian() noexcept;

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/**
 * Bivariate VAR(p) generating process:
 *   y_t = a_y + sum_i own[0][i] y_{t-i} + sum_i cross[0][i] x_{t-i} + e_y
 *   x_t = a_x + sum_i own[1][i] x_{t-i} + sum_i cross[1][i] y_{t-i} + e_x
 * Index 0 is always the y equation; cross[0] carries x -> y.
 */
struct VarSpec {
    std::size_t p = 1;
    std::array<double, 2> intercepts = {0.0, 0.0};
    std::array<std::vector<double>, 2> own_coeffs = {std::vector<double>{0.0}, std::vector<double>{0.0}};
    std::array<std::vector<double>, 2> cross_coeffs = {std::vector<double>{0.0}, std::vector<double>{0.0}};
    std::array<double, 2> noise_sd = {1.0, 1.0};
    double noise_corr = 0.0;
    std::size_t T = 200;
    std::uint64_t seed = 42;
    std::size_t burn_in = 100;
};

/// Largest eigenvalue modulus of the 2p x 2p companion matrix.
double spectral_radius(const VarSpec& spec);

/// Throws InvalidArgument for malformed specs and NonStationarySpec when the
/// spectral radius is not below 1 - 1e-9.
void validate(const VarSpec& spec);

/**
 * Simulate T observations after burn_in, starting from zero initial values.
 * Returns columns "x" then "y". Noise pair per step: e_y = sd_y z1 and
 * e_x = sd_x (rho z1 + sqrt(1 - rho^2) z2) from two consecutive gaussians.
 */
SeriesTable simulate(const VarSpec& spec);

enum class Direction { XtoY, YtoX };

/**
 * Fraction of `replications` simulated datasets (seeds seed, seed + 1, ...)
 * in which the chosen direction has p < alpha at `lag`. alpha may be 0.
 * Replications are spread over `threads` workers (0 = hardware concurrency)
 * without changing the result.
 */
double rejection_rate(const VarSpec& spec, std::size_t replications, std::size_t lag, double alpha,
                      Direction direction, std::size_t threads = 1);

}  // namespace granger
