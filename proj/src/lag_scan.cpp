#include "granger/lag_scan.hpp"

#include "granger/error.hpp"
#include "granger/granger_core.hpp"
#include "granger/ols_engine.hpp"

#include <algorithm>
#include <cmath>

namespace granger {

namespace {

// Residual variances below this fraction of the response variance are rounding
// noise from an exactly determined equation.
constexpr double kSingularRatio = 1e-24;

double centered_mean_square(std::span<const double> values) {
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    return ss / static_cast<double>(values.size());
}

}  // namespace

InformationCriteria information_criteria(std::span<const double> x, std::span<const double> y,
                                         std::size_t lag) {
    const VarFit fit_y = fit_ols(build_lag_design(y, x, lag));
    const VarFit fit_x = fit_ols(build_lag_design(x, y, lag));
    const std::size_t n = fit_y.n_eff;
    const double nd = static_cast<double>(n);

    double s11 = 0.0, s12 = 0.0, s22 = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        s11 += fit_y.residuals[t] * fit_y.residuals[t];
        s12 += fit_y.residuals[t] * fit_x.residuals[t];
        s22 += fit_x.residuals[t] * fit_x.residuals[t];
    }
    s11 /= nd;
    s12 /= nd;
    s22 /= nd;
    // Cholesky of the 2 x 2 covariance: det = l11^2 * l22^2.
    const double schur = s11 > 0.0 ? s22 - s12 * s12 / s11 : 0.0;
    const double floor_y = kSingularRatio * centered_mean_square(y.subspan(lag));
    const double floor_x = kSingularRatio * centered_mean_square(x.subspan(lag));
    if (!(s11 > floor_y) || !(schur > floor_x) || !(s11 * schur > 1e-300)) {
        throw Error(ErrorKind::SingularCovariance,
                    "residual covariance is singular at lag " + std::to_string(lag));
    }
    constexpr double k2 = 4.0;  // K^2 with K = 2 variables
    InformationCriteria ic;
    ic.n_eff = n;
    ic.log_det_sigma = std::log(s11) + std::log(schur);
    const double p = static_cast<double>(lag);
    ic.aic = ic.log_det_sigma + 2.0 * p * k2 / nd;
    ic.bic = ic.log_det_sigma + p * k2 * std::log(nd) / nd;
    return ic;
}

const LagRow& LagScanResult::row_for(std::size_t lag) const {
    for (const auto& row : per_lag) {
        if (row.lag == lag) return row;
    }
    throw Error(ErrorKind::InvalidLag, "lag " + std::to_string(lag) + " was not scanned");
}

LagScanResult granger_lag_select(std::span<const double> x, std::span<const double> y,
                                 const LagScanOptions& options) {
    if (options.lags.empty()) {
        throw Error(ErrorKind::InvalidLag, "at least one lag order is required");
    }
    for (std::size_t i = 0; i < options.lags.size(); ++i) {
        if (options.lags[i] < 1) throw Error(ErrorKind::InvalidLag, "lag orders must be at least 1");
        if (i > 0 && options.lags[i] <= options.lags[i - 1]) {
            throw Error(ErrorKind::InvalidLag, "lag orders must be strictly increasing");
        }
    }
    if (x.size() != y.size()) {
        throw Error(ErrorKind::LengthMismatch, "series '" + options.x_name + "' and '" + options.y_name +
                                                   "' differ in length");
    }
    const std::size_t largest = options.lags.back();
    if (x.size() <= 3 * largest + 1) {
        throw Error(ErrorKind::InsufficientData,
                    "insufficient data for lag " + std::to_string(largest) + ": T = " +
                        std::to_string(x.size()) + " needs T > " + std::to_string(3 * largest + 1));
    }

    GrangerOptions test_options;
    test_options.alpha = options.alpha;
    test_options.test = options.test;
    test_options.x_name = options.x_name;
    test_options.y_name = options.y_name;
    test_options.df_convention = options.df_convention;

    LagScanResult result;
    result.x_name = options.x_name;
    result.y_name = options.y_name;
    result.lags = options.lags;
    result.alpha = options.alpha;
    result.n = x.size();
    for (std::size_t lag : options.lags) {
        test_options.lag = lag;
        const GrangerResult test = granger_causality_test(x, y, test_options);
        const InformationCriteria ic = information_criteria(x, y, lag);
        result.per_lag.push_back(LagRow{lag, test.test_statistic_xy, test.p_value_xy, test.x_causes_y,
                                        test.test_statistic_yx, test.p_value_yx, test.y_causes_x,
                                        ic.aic, ic.bic});
    }

    const LagRow* best_xy = &result.per_lag.front();
    const LagRow* best_yx = &result.per_lag.front();
    for (const auto& row : result.per_lag) {
        if (row.p_value_xy < best_xy->p_value_xy) best_xy = &row;
        if (row.p_value_yx < best_yx->p_value_yx) best_yx = &row;
        result.significant_count_xy += row.significant_xy ? 1 : 0;
        result.significant_count_yx += row.significant_yx ? 1 : 0;
    }
    result.best_lag_xy = best_xy->lag;
    result.best_lag_yx = best_yx->lag;
    return result;
}

LagScanResult granger_lag_select(const SeriesTable& table, std::string_view x, std::string_view y,
                                 LagScanOptions options) {
    options.x_name = std::string(x);
    options.y_name = std::string(y);
    return granger_lag_select(table.column(x), table.column(y), options);
}

}  // namespace granger
