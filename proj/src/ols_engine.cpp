#include "granger/ols_engine.hpp"

#include "granger/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace granger {

LagDesign build_lag_design(std::span<const double> y, std::optional<std::span<const double>> x,
                           std::size_t lag) {
    if (lag < 1) {
        throw Error(ErrorKind::InvalidLag, "lag order must be at least 1");
    }
    if (x && x->size() != y.size()) {
        throw Error(ErrorKind::LengthMismatch, "series lengths differ (" + std::to_string(y.size()) +
                                                   " vs " + std::to_string(x->size()) + ")");
    }
    const std::size_t total = y.size();
    const std::size_t params = 1 + lag * (x ? 2 : 1);
    if (total <= lag || total - lag <= params) {
        throw Error(ErrorKind::InsufficientData,
                    "insufficient data: T = " + std::to_string(total) + ", lag = " + std::to_string(lag) +
                        ", " + std::to_string(params) + " parameters need T - lag > " +
                        std::to_string(params));
    }

    const std::size_t rows = total - lag;
    LagDesign design;
    design.lag = lag;
    design.response.assign(y.begin() + static_cast<std::ptrdiff_t>(lag), y.end());
    design.predictors = Matrix(rows, params);
    auto& X = design.predictors;
    for (std::size_t t = 0; t < rows; ++t) {
        X(t, 0) = 1.0;
        for (std::size_t i = 1; i <= lag; ++i) {
            X(t, i) = y[t + lag - i];
            if (x) {
                X(t, lag + i) = (*x)[t + lag - i];
            }
        }
    }
    return design;
}

VarFit fit_ols(const LagDesign& design) {
    const std::size_t n = design.n_eff();
    const std::size_t m = design.n_params();
    Matrix qr = design.predictors;
    std::vector<double> qty = design.response;
    // Householder vector k occupies rows k..n-1 of column k of `qr`; its
    // leading entry is also kept in head[k] since R_kk lives in diag[k].
    std::vector<double> diag(m, 0.0);
    std::vector<double> head(m, 0.0);

    for (std::size_t k = 0; k < m; ++k) {
        auto col = qr.column(k);
        double scale = 0.0;
        for (std::size_t i = k; i < n; ++i) scale = std::max(scale, std::abs(col[i]));
        if (scale == 0.0) {
            diag[k] = 0.0;
            head[k] = 0.0;
            continue;
        }
        double norm2 = 0.0;
        for (std::size_t i = k; i < n; ++i) {
            const double v = col[i] / scale;
            norm2 += v * v;
        }
        double alpha = scale * std::sqrt(norm2);
        if (col[k] > 0.0) alpha = -alpha;
        // v = a_k - alpha e_k, stored in place; R_kk = alpha.
        head[k] = col[k] - alpha;
        col[k] = head[k];
        // H = I - beta v v^T with ||v||^2 = 2 alpha (alpha - a_kk).
        const double beta = 1.0 / (-alpha * head[k]);
        for (std::size_t j = k + 1; j < m; ++j) {
            auto other = qr.column(j);
            double dot = 0.0;
            for (std::size_t i = k; i < n; ++i) dot += col[i] * other[i];
            const double f = dot * beta;
            for (std::size_t i = k; i < n; ++i) other[i] -= f * col[i];
        }
        double dot = 0.0;
        for (std::size_t i = k; i < n; ++i) dot += col[i] * qty[i];
        const double f = dot * beta;
        for (std::size_t i = k; i < n; ++i) qty[i] -= f * col[i];
        diag[k] = alpha;
    }

    double largest = 0.0;
    for (double d : diag) largest = std::max(largest, std::abs(d));
    for (std::size_t k = 0; k < m; ++k) {
        if (!(std::abs(diag[k]) > kRankTolerance * largest)) {
            throw Error(ErrorKind::RankDeficient,
                        "design matrix is rank deficient at column " + std::to_string(k) +
                            " (constant or collinear series)");
        }
    }

    VarFit fit;
    fit.n_eff = n;
    fit.n_params = m;
    fit.coefficients.assign(m, 0.0);
    for (std::size_t kk = m; kk-- > 0;) {
        double s = qty[kk];
        for (std::size_t j = kk + 1; j < m; ++j) s -= qr(kk, j) * fit.coefficients[j];
        fit.coefficients[kk] = s / diag[kk];
    }

    // residuals = Q [0; (Q^T y)_{m..n-1}], applying H_{m-1} ... H_0 in reverse.
    std::vector<double> resid(n, 0.0);
    std::copy(qty.begin() + static_cast<std::ptrdiff_t>(m), qty.end(),
              resid.begin() + static_cast<std::ptrdiff_t>(m));
    for (std::size_t k = m; k-- > 0;) {
        if (head[k] == 0.0) continue;
        const auto col = qr.column(k);
        const double beta = 1.0 / (-diag[k] * head[k]);
        double dot = 0.0;
        for (std::size_t i = k; i < n; ++i) dot += col[i] * resid[i];
        const double f = dot * beta;
        for (std::size_t i = k; i < n; ++i) resid[i] -= f * col[i];
    }
    double rss = 0.0;
    for (double r : resid) rss += r * r;
    fit.residuals = std::move(resid);
    fit.rss = rss;
    fit.sigma2 = rss / static_cast<double>(n);
    return fit;
}

}  // namespace granger
