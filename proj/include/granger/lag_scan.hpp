#pragma once

#include "granger/granger_core.hpp"
#include "granger/series_store.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace granger {

struct InformationCriteria {
    double aic = 0.0;
    double bic = 0.0;
    double log_det_sigma = 0.0;
    std::size_t n_eff = 0;
};

/**
 * AIC and BIC of the bivariate VAR(p) fit to (x, y).
 *
 * Both unrestricted equations are fit on the common T - p rows; Sigma is the
 * 2 x 2 residual covariance with divisor N = T - p, and
 *   AIC = log det Sigma + 2 p K^2 / N,  BIC = log det Sigma + p K^2 log(N) / N,
 * with K = 2. Throws SingularCovariance when det Sigma is not positive.
 */
InformationCriteria information_criteria(std::span<const double> x, std::span<const double> y,
                                         std::size_t lag);

struct LagRow {
    std::size_t lag = 1;
    double statistic_xy = 0.0;
    double p_value_xy = 1.0;
    bool significant_xy = false;
    double statistic_yx = 0.0;
    double p_value_yx = 1.0;
    bool significant_yx = false;
    double aic = 0.0;
    double bic = 0.0;
};

struct LagScanResult {
    std::string x_name;
    std::string y_name;
    std::vector<std::size_t> lags;
    std::vector<LagRow> per_lag;
    double alpha = 0.05;
    std::size_t n = 0;
    std::size_t best_lag_xy = 1;
    std::size_t best_lag_yx = 1;
    std::size_t significant_count_xy = 0;
    std::size_t significant_count_yx = 0;

    const LagRow& row_for(std::size_t lag) const;
};

struct LagScanOptions {
    std::vector<std::size_t> lags = {1, 2, 3, 4};
    double alpha = 0.05;
    std::string test = "F";
    std::string x_name = "x";
    std::string y_name = "y";
    DfConvention df_convention = DfConvention::Effective;
};

/// Per-lag bidirectional tests plus AIC/BIC. Best lags minimise p; ties go to the smaller lag.
LagScanResult granger_lag_select(std::span<const double> x, std::span<const double> y,
                                 const LagScanOptions& options = {});

LagScanResult granger_lag_select(const SeriesTable& table, std::string_view x, std::string_view y,
                                 LagScanOptions options = {});

}  // namespace granger
