#pragma once

#include "granger/series_store.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace granger {

/**
 * Sample size used in the F denominator degrees of freedom.
 * Effective: (T - lag) - 2 lag - 1, the residual df of the fitted equation.
 * Raw: T - 2 lag - 1, with T the untruncated series length.
 */
enum class DfConvention { Effective, Raw };

/// One direction of the test: does `cause` help predict `effect`?
struct DirectionalTest {
    double statistic = 0.0;
    double p_value = 1.0;
    double rss_restricted = 0.0;
    double rss_unrestricted = 0.0;
    std::size_t df_numerator = 0;
    std::size_t df_denominator = 0;
    std::size_t n_eff = 0;
};

/**
 * F-test of `cause` -> `effect` at the given lag.
 *
 * Restricted and unrestricted equations are fit on the same T - lag rows.
 * F = ((RSS_R - RSS_U) / lag) / (RSS_U / df2), referred to F(lag, df2), with
 * df2 given by `convention`.
 *
 * Throws LengthMismatch, InvalidLag, InsufficientData, ConstantSeries (with
 * `cause_name` / `effect_name` in the message) or PerfectFit when RSS_U is
 * zero up to rounding.
 */
DirectionalTest directional_test(std::span<const double> cause, std::span<const double> effect,
                                 std::size_t lag, std::string_view cause_name = "x",
                                 std::string_view effect_name = "y",
                                 DfConvention convention = DfConvention::Effective);

/// Components of a bidirectional test.
struct GrangerResult {
    std::string x_name;
    std::string y_name;
    std::size_t lag = 1;
    double alpha = 0.05;
    std::size_t n = 0;  // raw observation count T
    bool x_causes_y = false;
    bool y_causes_x = false;
    double p_value_xy = 1.0;
    double p_value_yx = 1.0;
    double test_statistic_xy = 0.0;
    double test_statistic_yx = 0.0;
};

struct GrangerOptions {
    std::size_t lag = 1;
    double alpha = 0.05;
    std::string test = "F";
    std::string x_name = "x";
    std::string y_name = "y";
    DfConvention df_convention = DfConvention::Effective;
};

/// Throws InvalidArgument unless 0 < alpha < 1.
void check_alpha(double alpha);

/// Strict rule: p == alpha is not significant.
inline bool is_significant(double p_value, double alpha) noexcept { return p_value < alpha; }

/// Tests x -> y and y -> x. Only test == "F" is supported (else UnsupportedTest).
GrangerResult granger_causality_test(std::span<const double> x, std::span<const double> y,
                                     const GrangerOptions& options = {});

/// Column-name form; the names in `options` are replaced by `x` and `y`.
GrangerResult granger_causality_test(const SeriesTable& table, std::string_view x, std::string_view y,
                                     GrangerOptions options = {});

struct TidyRow {
    std::string direction;
    std::string cause;
    std::string effect;
    double statistic = 0.0;
    double p_value = 1.0;
    bool significant = false;

    friend bool operator==(const TidyRow&, const TidyRow&) = default;
};

struct GlanceRow {
    std::size_t lag = 1;
    double alpha = 0.05;
    std::size_t n = 0;
    std::string x_name;
    std::string y_name;

    friend bool operator==(const GlanceRow&, const GlanceRow&) = default;
};

/// Two rows: x -> y first, then y -> x.
std::vector<TidyRow> tidy(const GrangerResult& result);

GlanceRow glance(const GrangerResult& result);

}  // namespace granger
