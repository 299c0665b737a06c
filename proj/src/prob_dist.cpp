#include "granger/prob_dist.hpp"

#include "granger/error.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace granger {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

constexpr double kUnderflow = 1e-300;

double log_beta(double a, double b) { return log_gamma(a) + log_gamma(b) - log_gamma(a + b); }

// Continued fraction for I_x(a, b); valid and fast for x < (a + 1) / (a + b + 2).
double beta_continued_fraction(double x, double a, double b) {
    constexpr double tiny = 1e-300;
    constexpr double eps = 1e-16;
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kBetaMaxIterations; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) <= eps) {
            return h;
        }
    }
    throw Error(ErrorKind::NonConvergence,
                "incomplete beta continued fraction did not converge (x = " + std::to_string(x) +
                    ", a = " + std::to_string(a) + ", b = " + std::to_string(b) + ")");
}

// I_x(a, b) with y = 1 - x supplied separately so callers can avoid cancellation.
double incomplete_beta(double x, double y, double a, double b) {
    if (x <= 0.0) return 0.0;
    if (y <= 0.0) return 1.0;
    const double log_front = a * std::log(x) + b * std::log(y) - log_beta(a, b);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return std::exp(log_front) * beta_continued_fraction(x, a, b) / a;
    }
    return 1.0 - std::exp(log_front) * beta_continued_fraction(y, b, a) / b;
}

double clamp_probability(double p) {
    if (!(p > kUnderflow)) return 0.0;
    return p > 1.0 ? 1.0 : p;
}

void check_f_arguments(double stat, FParams params) {
    if (!std::isfinite(stat) || stat < 0.0) {
        throw Error(ErrorKind::InvalidStatistic, "F statistic must be finite and non-negative");
    }
    if (params.d1 < 1 || params.d2 < 1) {
        throw Error(ErrorKind::InvalidArgument, "F degrees of freedom must be at least 1");
    }
}

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw Error(ErrorKind::InvalidArgument, "log_gamma requires a finite positive argument");
    }
    if (x < 0.5) {
        // Reflection: Gamma(x) Gamma(1 - x) = pi / sin(pi x).
        return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - log_gamma(1.0 - x);
    }
    const double z = x - 1.0;
    double sum = kLanczosCoefficients[0];
    for (std::size_t i = 1; i < kLanczosCoefficients.size(); ++i) {
        sum += kLanczosCoefficients[i] / (z + static_cast<double>(i));
    }
    const double t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(sum);
}

double regularized_incomplete_beta(double x, double a, double b) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw Error(ErrorKind::InvalidArgument, "incomplete beta requires 0 <= x <= 1");
    }
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
        throw Error(ErrorKind::InvalidArgument, "incomplete beta requires a, b > 0");
    }
    const double value = incomplete_beta(x, 1.0 - x, a, b);
    return value < 0.0 ? 0.0 : (value > 1.0 ? 1.0 : value);
}

double f_sf(double stat, FParams params) {
    check_f_arguments(stat, params);
    if (stat == 0.0) return 1.0;
    const double d1 = static_cast<double>(params.d1);
    const double d2 = static_cast<double>(params.d2);
    const double denom = d2 + d1 * stat;
    return clamp_probability(incomplete_beta(d2 / denom, d1 * stat / denom, d2 / 2.0, d1 / 2.0));
}

double f_cdf(double stat, FParams params) {
    check_f_arguments(stat, params);
    if (stat == 0.0) return 0.0;
    const double d1 = static_cast<double>(params.d1);
    const double d2 = static_cast<double>(params.d2);
    const double denom = d2 + d1 * stat;
    return clamp_probability(incomplete_beta(d1 * stat / denom, d2 / denom, d1 / 2.0, d2 / 2.0));
}

}  // namespace granger
