#include "granger/var_sim.hpp"

#include "granger/error.hpp"
#include "granger/granger_core.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

namespace granger {

std::uint64_t SplitMix64::next() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double SplitMix64::uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double SplitMix64::gaussian() noexcept {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

double spectral_radius(const VarSpec& spec) {
    const auto p = static_cast<Eigen::Index>(spec.p);
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(2 * p, 2 * p);
    // State ordering (y_t, x_t, y_{t-1}, x_{t-1}, ...).
    for (Eigen::Index i = 0; i < p; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        companion(0, 2 * i) = spec.own_coeffs[0][idx];
        companion(0, 2 * i + 1) = spec.cross_coeffs[0][idx];
        companion(1, 2 * i) = spec.cross_coeffs[1][idx];
        companion(1, 2 * i + 1) = spec.own_coeffs[1][idx];
    }
    for (Eigen::Index i = 2; i < 2 * p; ++i) companion(i, i - 2) = 1.0;
    const Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
    return solver.eigenvalues().cwiseAbs().maxCoeff();
}

void validate(const VarSpec& spec) {
    if (spec.p < 1) throw Error(ErrorKind::InvalidLag, "VAR order must be at least 1");
    for (int eq = 0; eq < 2; ++eq) {
        if (spec.own_coeffs[eq].size() != spec.p || spec.cross_coeffs[eq].size() != spec.p) {
            throw Error(ErrorKind::InvalidArgument, "each coefficient vector must have p entries");
        }
        if (!(spec.noise_sd[eq] > 0.0) || !std::isfinite(spec.noise_sd[eq])) {
            throw Error(ErrorKind::InvalidArgument, "noise standard deviations must be positive");
        }
    }
    if (!(spec.noise_corr > -1.0 && spec.noise_corr < 1.0)) {
        throw Error(ErrorKind::InvalidArgument, "noise correlation must lie in (-1, 1)");
    }
    if (spec.T < 1) throw Error(ErrorKind::InvalidArgument, "T must be at least 1");
    const double radius = spectral_radius(spec);
    if (!(radius < 1.0 - 1e-9)) {
        throw Error(ErrorKind::NonStationarySpec,
                    "VAR spec is not stationary: companion spectral radius " + std::to_string(radius));
    }
}

SeriesTable simulate(const VarSpec& spec) {
    validate(spec);
    const std::size_t p = spec.p;
    const std::size_t steps = spec.burn_in + spec.T;
    const double mix = std::sqrt(1.0 - spec.noise_corr * spec.noise_corr);
    // Leading p zeros are the initial conditions.
    std::vector<double> y(p + steps, 0.0);
    std::vector<double> x(p + steps, 0.0);
    SplitMix64 rng(spec.seed);
    for (std::size_t t = p; t < p + steps; ++t) {
        const double z1 = rng.gaussian();
        const double z2 = rng.gaussian();
        double yt = spec.intercepts[0] + spec.noise_sd[0] * z1;
        double xt = spec.intercepts[1] + spec.noise_sd[1] * (spec.noise_corr * z1 + mix * z2);
        for (std::size_t i = 1; i <= p; ++i) {
            yt += spec.own_coeffs[0][i - 1] * y[t - i] + spec.cross_coeffs[0][i - 1] * x[t - i];
            xt += spec.own_coeffs[1][i - 1] * x[t - i] + spec.cross_coeffs[1][i - 1] * y[t - i];
        }
        y[t] = yt;
        x[t] = xt;
    }
    const auto first = static_cast<std::ptrdiff_t>(p + spec.burn_in);
    return SeriesTable({"x", "y"}, {std::vector<double>(x.begin() + first, x.end()),
                                    std::vector<double>(y.begin() + first, y.end())});
}

double rejection_rate(const VarSpec& spec, std::size_t replications, std::size_t lag, double alpha,
                      Direction direction, std::size_t threads) {
    if (replications < 1) throw Error(ErrorKind::InvalidArgument, "replications must be at least 1");
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw Error(ErrorKind::InvalidArgument, "alpha must be in [0, 1]");
    validate(spec);

    std::size_t workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
    workers = std::min(workers, replications);
    std::vector<char> rejected(replications, 0);
    std::vector<std::exception_ptr> errors(workers);
    auto run = [&](std::size_t offset) {
        try {
            for (std::size_t r = offset; r < replications; r += workers) {
                VarSpec replica = spec;
                replica.seed = spec.seed + r;
                const SeriesTable data = simulate(replica);
                const auto x = data.column("x");
                const auto y = data.column("y");
                const DirectionalTest test = direction == Direction::XtoY
                                                 ? directional_test(x, y, lag, "x", "y")
                                                 : directional_test(y, x, lag, "y", "x");
                rejected[r] = test.p_value < alpha ? 1 : 0;
            }
        } catch (...) {
            errors[offset] = std::current_exception();
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    const auto hits = std::count(rejected.begin(), rejected.end(), char{1});
    return static_cast<double>(hits) / static_cast<double>(replications);
}

}  // namespace granger
