#include "granger/error.hpp"
#include "granger/ols_engine.hpp"
#include "test_support.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>

using namespace granger;
using granger::testing::kind_of;

namespace {

double norm(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

LagDesign manual_design(const oracle::Rows& rows, std::vector<double> response) {
    LagDesign d;
    d.lag = 1;
    d.response = std::move(response);
    d.predictors = Matrix(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) d.predictors(r, c) = rows[r][c];
    }
    return d;
}


}  // namespace

TEST_CASE("restricted design is a hand-constructible shift") {
    const std::vector<double> y{1, 2, 3, 4, 5};
    const LagDesign d = build_lag_design(y, std::nullopt, 1);
    CHECK(d.response == std::vector<double>{2, 3, 4, 5});
    REQUIRE(d.predictors.rows() == 4);
    REQUIRE(d.predictors.cols() == 2);
    for (std::size_t t = 0; t < 4; ++t) {
        CHECK(d.predictors(t, 0) == 1.0);
        CHECK(d.predictors(t, 1) == static_cast<double>(t + 1));
    }
}

TEST_CASE("unrestricted column order is intercept, own lags, other lags") {
    const std::vector<double> y{10, 11, 12, 13, 14, 15, 16, 17};
    const std::vector<double> x{20, 21, 22, 23, 24, 25, 26, 27};
    const LagDesign d = build_lag_design(y, x, 2);
    CHECK(d.n_eff() == 6);
    CHECK(d.n_params() == 5);
    // Row 0 is observation 2.
    CHECK(d.response[0] == 12.0);
    CHECK(d.predictors(0, 1) == 11.0);
    CHECK(d.predictors(0, 2) == 10.0);
    CHECK(d.predictors(0, 3) == 21.0);
    CHECK(d.predictors(0, 4) == 20.0);
}

TEST_CASE("84 observations at lag 2 give 82 rows and 5 parameters") {
    std::vector<double> y(84), x(84);
    for (std::size_t i = 0; i < 84; ++i) {
        y[i] = std::sin(0.3 * i);
        x[i] = std::cos(0.7 * i);
    }
    const LagDesign d = build_lag_design(y, x, 2);
    CHECK(d.n_eff() == 82);
    CHECK(d.n_params() == 5);
}

TEST_CASE("design errors") {
    const std::vector<double> five{1, 2, 3, 4, 5};
    const std::vector<double> four{1, 2, 3, 4};
    CHECK(kind_of([&] { build_lag_design(five, five, 2); }) == ErrorKind::InsufficientData);
    CHECK(kind_of([&] { build_lag_design(five, std::nullopt, 0); }) == ErrorKind::InvalidLag);
    CHECK(kind_of([&] { build_lag_design(five, four, 1); }) == ErrorKind::LengthMismatch);
    // T - p must be strictly greater than m.
    CHECK(kind_of([&] { build_lag_design(four, std::nullopt, 2); }) == ErrorKind::InsufficientData);
    CHECK_NOTHROW(build_lag_design(five, std::nullopt, 1));
}

TEST_CASE("exact interpolation recovers the coefficients") {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> dist;
    oracle::Rows rows;
    const std::vector<double> truth{0.5, -1.25, 2.0, 0.75};
    std::vector<double> response;
    for (int r = 0; r < 30; ++r) {
        std::vector<double> row{1.0, dist(rng), dist(rng), dist(rng)};
        double v = 0.0;
        for (std::size_t c = 0; c < 4; ++c) v += row[c] * truth[c];
        rows.push_back(row);
        response.push_back(v);
    }
    const VarFit fit = fit_ols(manual_design(rows, response));
    for (std::size_t c = 0; c < 4; ++c) CHECK(fit.coefficients[c] == doctest::Approx(truth[c]).epsilon(1e-10));
    const double yy = norm(response) * norm(response);
    CHECK(fit.rss <= 1e-18 * yy);
}

TEST_CASE("constant regressor is RankDeficient") {
    std::vector<double> y(40), x(40, 3.0);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = std::sin(1.3 * i) + 0.1 * i;
    CHECK(kind_of([&] { fit_ols(build_lag_design(y, x, 1)); }) == ErrorKind::RankDeficient);
}

TEST_CASE("random 50x4 design matches the extended-precision normal-equation oracle") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> dist;
    for (int trial = 0; trial < 20; ++trial) {
        oracle::Rows rows;
        std::vector<double> response;
        for (int r = 0; r < 50; ++r) {
            rows.push_back({1.0, dist(rng), 3.0 * dist(rng), dist(rng) - 2.0});
            response.push_back(dist(rng) + rows.back()[1]);
        }
        const VarFit fit = fit_ols(manual_design(rows, response));
        const auto ref = oracle::normal_equations(rows, response);
        for (std::size_t c = 0; c < 4; ++c) {
            CHECK(oracle::relative_difference(fit.coefficients[c], ref.coefficients[c]) <= 1e-8);
        }
        CHECK(oracle::relative_difference(fit.rss, ref.rss) <= 1e-8);
    }
}

TEST_CASE("fit invariants: rss, residual orthogonality, sigma2") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t T = 20 + rng() % 80;
        const std::size_t p = 1 + rng() % 4;
        auto x = oracle::gaussian_series(rng, T);
        auto y = oracle::ar1(rng, T, 0.4, &x, 0.3);
        if (T - p <= 1 + 2 * p) continue;
        const LagDesign d = build_lag_design(y, x, p);
        const VarFit fit = fit_ols(d);
        CHECK(fit.rss >= 0.0);
        const double r2 = norm(fit.residuals) * norm(fit.residuals);
        CHECK(std::abs(fit.rss - r2) <= 1e-12 * r2);
        CHECK(fit.sigma2 == doctest::Approx(fit.rss / static_cast<double>(d.n_eff())));
        const double rn = norm(fit.residuals);
        for (std::size_t c = 0; c < d.n_params(); ++c) {
            const auto col = d.predictors.column(c);
            double dot = 0.0;
            for (std::size_t t = 0; t < col.size(); ++t) dot += col[t] * fit.residuals[t];
            CHECK(std::abs(dot) <= 1e-8 * norm(col) * rn);
        }
    }
}

TEST_CASE("property: restricted rss >= unrestricted rss") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t T = 15 + rng() % 100;
        const std::size_t p = 1 + rng() % 4;
        if (T - p <= 1 + 2 * p) continue;
        auto x = oracle::gaussian_series(rng, T);
        auto y = oracle::gaussian_series(rng, T);
        const double rr = fit_ols(build_lag_design(y, std::nullopt, p)).rss;
        const double ru = fit_ols(build_lag_design(y, x, p)).rss;
        CHECK(rr >= ru * (1.0 - 1e-12));
    }
}

TEST_CASE("property: affine transform of x leaves unrestricted rss unchanged") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> coef(-5.0, 5.0);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t T = 40 + rng() % 60;
        const std::size_t p = 1 + rng() % 3;
        auto x = oracle::gaussian_series(rng, T);
        auto y = oracle::ar1(rng, T, 0.5, &x, 0.5);
        double a = coef(rng);
        if (std::abs(a) < 0.1) a = 0.5;
        const double b = coef(rng) * 10.0;
        std::vector<double> xt(T);
        for (std::size_t i = 0; i < T; ++i) xt[i] = a * x[i] + b;
        const double base = fit_ols(build_lag_design(y, x, p)).rss;
        const double moved = fit_ols(build_lag_design(y, xt, p)).rss;
        CHECK(oracle::relative_difference(base, moved) <= 1e-8);
    }
}

TEST_CASE("restricted and unrestricted designs share byte-identical responses") {
    std::mt19937_64 rng(13);
    auto x = oracle::gaussian_series(rng, 64);
    auto y = oracle::gaussian_series(rng, 64);
    for (std::size_t p = 1; p <= 5; ++p) {
        const LagDesign r = build_lag_design(y, std::nullopt, p);
        const LagDesign u = build_lag_design(y, x, p);
        REQUIRE(r.response.size() == u.response.size());
        CHECK(std::memcmp(r.response.data(), u.response.data(), r.response.size() * sizeof(double)) == 0);
    }
}
