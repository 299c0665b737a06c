#include "granger/search_engine.hpp"

#include "granger/error.hpp"
#include "granger/granger_core.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <thread>

namespace granger {

const char* to_string(Adjustment adjustment) noexcept {
    switch (adjustment) {
        case Adjustment::None: return "none";
        case Adjustment::Bonferroni: return "bonferroni";
        case Adjustment::BenjaminiHochberg: return "bh";
    }
    return "none";
}

Adjustment parse_adjustment(std::string_view text) {
    if (text == "none") return Adjustment::None;
    if (text == "bonferroni") return Adjustment::Bonferroni;
    if (text == "bh" || text == "BH" || text == "fdr") return Adjustment::BenjaminiHochberg;
    throw Error(ErrorKind::InvalidArgument, "unknown adjustment '" + std::string(text) +
                                                "' (expected none, bonferroni or bh)");
}

std::vector<double> adjust_pvalues(std::span<const double> pvalues, Adjustment method) {
    if (pvalues.empty()) {
        throw Error(ErrorKind::InvalidProbability, "cannot adjust an empty p-value list");
    }
    for (double p : pvalues) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw Error(ErrorKind::InvalidProbability, "p-values must lie in [0, 1]");
        }
    }
    const double m = static_cast<double>(pvalues.size());
    std::vector<double> out(pvalues.begin(), pvalues.end());
    switch (method) {
        case Adjustment::None:
            break;
        case Adjustment::Bonferroni:
            for (double& p : out) p = std::min(1.0, m * p);
            break;
        case Adjustment::BenjaminiHochberg: {
            std::vector<std::size_t> order(pvalues.size());
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::stable_sort(order.begin(), order.end(),
                             [&](std::size_t a, std::size_t b) { return pvalues[a] < pvalues[b]; });
            double running = 1.0;
            for (std::size_t rank = order.size(); rank-- > 0;) {
                const double scaled = m * pvalues[order[rank]] / static_cast<double>(rank + 1);
                running = std::min(running, std::min(1.0, scaled));
                // m p / m can round below p; the exact value never does.
                out[order[rank]] = std::max(running, pvalues[order[rank]]);
            }
            break;
        }
    }
    return out;
}

std::size_t SearchResult::significant_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(all_rows.begin(), all_rows.end(), [](const SearchRow& r) { return r.significant; }));
}

namespace {

struct Task {
    std::size_t cause = 0;
    std::size_t effect = 0;
    std::size_t lag = 0;
};

std::size_t resolve_threads(std::size_t requested, std::size_t tasks) {
    std::size_t n = requested;
    if (n == 0) {
        n = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    }
    return std::max<std::size_t>(1, std::min(n, tasks));
}

// Runs fn(i) for i in [0, count) on `threads` workers with static striding.
// The first exception (lowest index) is rethrown on the calling thread.
template <typename Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn&& fn) {
    std::vector<std::exception_ptr> errors(count);
    auto worker = [&](std::size_t offset) {
        for (std::size_t i = offset; i < count; i += threads) {
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (threads <= 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

bool row_order(const SearchRow& a, const SearchRow& b) {
    const double pa = a.decision_p();
    const double pb = b.decision_p();
    if (pa != pb) return pa < pb;
    if (a.cause != b.cause) return a.cause < b.cause;
    return a.effect < b.effect;
}

}  // namespace

SearchResult granger_search(const SeriesTable& table, const SearchOptions& options) {
    if (options.test != "F") {
        throw Error(ErrorKind::UnsupportedTest,
                    "unsupported test '" + options.test + "'; only \"F\" is available");
    }
    check_alpha(options.alpha);
    if (options.lags.empty()) {
        throw Error(ErrorKind::InvalidLag, "at least one lag order is required");
    }
    std::vector<std::size_t> lags = options.lags;
    std::sort(lags.begin(), lags.end());
    lags.erase(std::unique(lags.begin(), lags.end()), lags.end());
    if (lags.front() < 1) {
        throw Error(ErrorKind::InvalidLag, "lag orders must be at least 1");
    }

    const SeriesTable selected = table.select_columns(options.columns);
    const std::size_t k = selected.num_columns();
    if (k < 2) {
        throw Error(ErrorKind::TooFewColumns,
                    "search needs at least 2 columns, got " + std::to_string(k));
    }
    const std::size_t total = selected.num_rows();
    for (std::size_t lag : lags) {
        if (total <= 3 * lag + 1) {
            throw Error(ErrorKind::InsufficientData,
                        "insufficient data for lag " + std::to_string(lag) + ": T = " +
                            std::to_string(total) + " needs T > " + std::to_string(3 * lag + 1));
        }
    }

    std::vector<Task> tasks;
    tasks.reserve(k * (k - 1) * lags.size());
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            for (std::size_t lag : lags) tasks.push_back({i, j, lag});
        }
    }
    std::vector<DirectionalTest> outcomes(tasks.size());
    const auto& names = selected.names();
    parallel_for(tasks.size(), resolve_threads(options.threads, tasks.size()), [&](std::size_t t) {
        const Task& task = tasks[t];
        outcomes[t] = directional_test(selected.column(task.cause), selected.column(task.effect),
                                       task.lag, names[task.cause], names[task.effect], options.df_convention);
    });

    SearchResult result;
    result.variables = names;
    result.lags_tested = lags;
    result.alpha = options.alpha;
    result.pairs_examined = k * (k - 1);
    result.adjustment = options.adjustment;
    result.include_insignificant = options.include_insignificant;

    // Tasks for a pair are contiguous and in ascending lag order; strict '<'
    // keeps the smallest lag on ties.
    const std::size_t per_pair = lags.size();
    std::vector<SearchRow> rows;
    rows.reserve(result.pairs_examined);
    for (std::size_t start = 0; start < tasks.size(); start += per_pair) {
        std::size_t best = start;
        for (std::size_t t = start + 1; t < start + per_pair; ++t) {
            if (outcomes[t].p_value < outcomes[best].p_value) best = t;
        }
        SearchRow row;
        row.cause = names[tasks[best].cause];
        row.effect = names[tasks[best].effect];
        row.p_value = outcomes[best].p_value;
        row.statistic = outcomes[best].statistic;
        row.lag = tasks[best].lag;
        rows.push_back(std::move(row));
    }

    if (options.adjustment != Adjustment::None) {
        std::vector<double> raw;
        raw.reserve(rows.size());
        for (const auto& row : rows) raw.push_back(row.p_value);
        const auto adjusted = adjust_pvalues(raw, options.adjustment);
        for (std::size_t i = 0; i < rows.size(); ++i) rows[i].p_adjusted = adjusted[i];
    }
    for (auto& row : rows) row.significant = is_significant(row.decision_p(), options.alpha);
    std::sort(rows.begin(), rows.end(), row_order);

    result.all_rows = rows;
    if (options.include_insignificant) {
        result.rows = std::move(rows);
    } else {
        std::copy_if(rows.begin(), rows.end(), std::back_inserter(result.rows),
                     [](const SearchRow& r) { return r.significant; });
    }
    return result;
}

CausalityMatrix causality_matrix(const SearchResult& result) {
    CausalityMatrix matrix;
    matrix.variables = result.variables;
    const std::size_t k = result.variables.size();
    matrix.cells.assign(k, std::vector<std::optional<MatrixCell>>(k));
    auto index_of = [&](const std::string& name) {
        return static_cast<std::size_t>(
            std::find(result.variables.begin(), result.variables.end(), name) - result.variables.begin());
    };
    for (const auto& row : result.all_rows) {
        const std::size_t i = index_of(row.cause);
        const std::size_t j = index_of(row.effect);
        if (i < k && j < k && i != j) {
            matrix.cells[i][j] = MatrixCell{row.p_value, row.significant};
        }
    }
    return matrix;
}

}  // namespace granger
