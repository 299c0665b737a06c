#include "granger/granger_core.hpp"

#include "granger/error.hpp"
#include "granger/ols_engine.hpp"
#include "granger/prob_dist.hpp"

#include <algorithm>
#include <cmath>

namespace granger {

namespace {

bool constant_on(std::span<const double> values) {
    return std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) == values.end();
}

// The lag columns span observations 0..T-2 and the response T-lag..T-1 rows;
// a series constant on either window cannot be tested.
void check_not_constant(std::span<const double> series, std::size_t lag, std::string_view name) {
    const auto lagged = series.first(series.size() - 1);
    const auto response = series.subspan(lag);
    if (constant_on(lagged) || constant_on(response)) {
        throw Error(ErrorKind::ConstantSeries, "series '" + std::string(name) +
                                                   "' is constant over the effective sample");
    }
}

constexpr double kPerfectFitRatio = 1e-24;

double centered_sum_of_squares(std::span<const double> values) {
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    return ss;
}

}  // namespace

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw Error(ErrorKind::InvalidArgument, "alpha must lie strictly between 0 and 1");
    }
}

DirectionalTest directional_test(std::span<const double> cause, std::span<const double> effect,
                                 std::size_t lag, std::string_view cause_name,
                                 std::string_view effect_name, DfConvention convention) {
    if (cause.size() != effect.size()) {
        throw Error(ErrorKind::LengthMismatch, "series '" + std::string(cause_name) + "' and '" +
                                                   std::string(effect_name) + "' differ in length");
    }
    if (lag < 1) {
        throw Error(ErrorKind::InvalidLag, "lag order must be at least 1");
    }
    const std::size_t total = effect.size();
    if (total <= 3 * lag + 1) {
        throw Error(ErrorKind::InsufficientData,
                    "insufficient data for lag " + std::to_string(lag) + ": T = " + std::to_string(total) +
                        " but T - lag must exceed 1 + 2 lag = " + std::to_string(1 + 2 * lag));
    }
    check_not_constant(effect, lag, effect_name);
    check_not_constant(cause, lag, cause_name);

    const VarFit restricted = fit_ols(build_lag_design(effect, std::nullopt, lag));
    const VarFit unrestricted = fit_ols(build_lag_design(effect, cause, lag));

    DirectionalTest out;
    out.n_eff = unrestricted.n_eff;
    out.df_numerator = lag;
    out.df_denominator = convention == DfConvention::Effective ? unrestricted.n_eff - unrestricted.n_params
                                                               : total - 2 * lag - 1;
    out.rss_restricted = restricted.rss;
    out.rss_unrestricted = unrestricted.rss;
    // Exact fits leave only rounding noise, of order eps^2 times the response
    // variation; anything below 1e-24 of it is treated as a perfect fit.
    if (!(unrestricted.rss > kPerfectFitRatio * centered_sum_of_squares(effect.subspan(lag)))) {
        throw Error(ErrorKind::PerfectFit, "unrestricted model for '" + std::string(effect_name) +
                                               "' fits exactly; F statistic undefined");
    }
    // Nested models: RSS_R >= RSS_U in exact arithmetic; rounding can produce a
    // tiny negative difference when the cause adds nothing.
    const double gain = std::max(0.0, restricted.rss - unrestricted.rss);
    out.statistic = (gain / static_cast<double>(out.df_numerator)) /
                    (unrestricted.rss / static_cast<double>(out.df_denominator));
    out.p_value = f_sf(out.statistic, FParams{out.df_numerator, out.df_denominator});
    return out;
}

GrangerResult granger_causality_test(std::span<const double> x, std::span<const double> y,
                                     const GrangerOptions& options) {
    if (options.test != "F") {
        throw Error(ErrorKind::UnsupportedTest,
                    "unsupported test '" + options.test + "'; only \"F\" is available");
    }
    check_alpha(options.alpha);
    const DirectionalTest xy = directional_test(x, y, options.lag, options.x_name, options.y_name,
                                               options.df_convention);
    const DirectionalTest yx = directional_test(y, x, options.lag, options.y_name, options.x_name,
                                               options.df_convention);

    GrangerResult result;
    result.x_name = options.x_name;
    result.y_name = options.y_name;
    result.lag = options.lag;
    result.alpha = options.alpha;
    result.n = x.size();
    result.test_statistic_xy = xy.statistic;
    result.test_statistic_yx = yx.statistic;
    result.p_value_xy = xy.p_value;
    result.p_value_yx = yx.p_value;
    result.x_causes_y = is_significant(xy.p_value, options.alpha);
    result.y_causes_x = is_significant(yx.p_value, options.alpha);
    return result;
}

GrangerResult granger_causality_test(const SeriesTable& table, std::string_view x, std::string_view y,
                                     GrangerOptions options) {
    options.x_name = std::string(x);
    options.y_name = std::string(y);
    return granger_causality_test(table.column(x), table.column(y), options);
}

std::vector<TidyRow> tidy(const GrangerResult& result) {
    return {
        TidyRow{result.x_name + " -> " + result.y_name, result.x_name, result.y_name,
                result.test_statistic_xy, result.p_value_xy, result.x_causes_y},
        TidyRow{result.y_name + " -> " + result.x_name, result.y_name, result.x_name,
                result.test_statistic_yx, result.p_value_yx, result.y_causes_x},
    };
}

GlanceRow glance(const GrangerResult& result) {
    return GlanceRow{result.lag, result.alpha, result.n, result.x_name, result.y_name};
}

}  // namespace granger
