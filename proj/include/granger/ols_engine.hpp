#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace granger {

/// Dense column-major matrix; just enough for least-squares designs.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t r, std::size_t c) { return data_[c * rows_ + r]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[c * rows_ + r]; }

    std::span<double> column(std::size_t c) { return {data_.data() + c * rows_, rows_}; }
    std::span<const double> column(std::size_t c) const { return {data_.data() + c * rows_, rows_}; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/**
 * Response and predictors for one lagged regression equation.
 *
 * Row t holds observation t + lag of the raw series. Predictor columns are,
 * in order: intercept, own lags 1..p, then (unrestricted only) the other
 * series' lags 1..p.
 */
struct LagDesign {
    std::vector<double> response;
    Matrix predictors;
    std::size_t lag = 0;

    std::size_t n_eff() const noexcept { return response.size(); }
    std::size_t n_params() const noexcept { return predictors.cols(); }
};

/**
 * Build the design for regressing `y` on its own lags, plus the lags of `x`
 * when given.
 *
 * Throws InvalidLag when lag < 1, LengthMismatch when the series differ in
 * length, and InsufficientData unless T - lag > number of predictors.
 */
LagDesign build_lag_design(std::span<const double> y, std::optional<std::span<const double>> x,
                           std::size_t lag);

/// One fitted least-squares equation.
struct VarFit {
    std::vector<double> coefficients;
    std::vector<double> residuals;
    double rss = 0.0;
    double sigma2 = 0.0;  // rss / n_eff
    std::size_t n_eff = 0;
    std::size_t n_params = 0;
};

/// Relative pivot threshold below which a design is treated as rank deficient.
inline constexpr double kRankTolerance = 1e-10;

/**
 * Least-squares fit by Householder QR (no column pivoting).
 *
 * Residuals are formed as Q applied to the trailing part of Q^T y, which keeps
 * them orthogonal to the predictor columns to rounding. Throws RankDeficient
 * naming the first column whose |R_kk| falls below kRankTolerance times the
 * largest |R_jj|.
 */
VarFit fit_ols(const LagDesign& design);

}  // namespace granger
