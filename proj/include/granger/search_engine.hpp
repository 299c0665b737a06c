#pragma once

#include "granger/granger_core.hpp"
#include "granger/series_store.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace granger {

enum class Adjustment { None, Bonferroni, BenjaminiHochberg };

const char* to_string(Adjustment adjustment) noexcept;
/// Accepts "none", "bonferroni", "bh" (also "BH", "fdr"). Throws InvalidArgument otherwise.
Adjustment parse_adjustment(std::string_view text);

/**
 * Multiple-testing adjusted p-values, in input order.
 *
 * Bonferroni: min(1, m p_i). Benjamini-Hochberg: the step-up values
 * min_{j >= rank(i)} min(1, m p_(j) / j). Adjustment::None returns the input.
 * Throws InvalidProbability for values outside [0, 1] or an empty list.
 */
std::vector<double> adjust_pvalues(std::span<const double> pvalues, Adjustment method);

struct SearchRow {
    std::string cause;
    std::string effect;
    double p_value = 1.0;
    double statistic = 0.0;
    std::size_t lag = 1;
    bool significant = false;
    std::optional<double> p_adjusted;

    /// p_adjusted when an adjustment was applied, otherwise p_value.
    double decision_p() const noexcept { return p_adjusted.value_or(p_value); }

    friend bool operator==(const SearchRow&, const SearchRow&) = default;
};

struct SearchOptions {
    std::vector<std::string> columns;  // empty = every column
    std::vector<std::size_t> lags = {1};
    double alpha = 0.05;
    bool include_insignificant = false;
    Adjustment adjustment = Adjustment::None;
    std::string test = "F";
    DfConvention df_convention = DfConvention::Effective;
    /// Worker threads for the pair x lag work list; 0 = hardware concurrency.
    std::size_t threads = 0;
};

struct SearchResult {
    /// Reported rows: significant only unless include_insignificant was set.
    std::vector<SearchRow> rows;
    /// Every directed pair, in the same order as `rows` would be unfiltered.
    std::vector<SearchRow> all_rows;
    std::vector<std::string> variables;
    std::vector<std::size_t> lags_tested;
    double alpha = 0.05;
    std::size_t pairs_examined = 0;
    Adjustment adjustment = Adjustment::None;
    bool include_insignificant = false;

    std::size_t significant_count() const noexcept;
};

/**
 * Exhaustive directed pairwise search.
 *
 * Every ordered pair (cause, effect) is tested at every lag; for each pair the
 * lag with the smallest p-value is kept (ties favour the smaller lag). The
 * adjustment is applied across these post-selection p-values, so with more
 * than one lag the unadjusted result is anti-conservative. Rows are sorted by
 * decision p-value, then by (cause, effect).
 *
 * Throws TooFewColumns when fewer than two columns are selected and
 * InsufficientData naming the first lag the table is too short for.
 */
SearchResult granger_search(const SeriesTable& table, const SearchOptions& options = {});

struct MatrixCell {
    double p_value = 1.0;
    bool significant = false;
};

/// K x K grid; cells[i][j] is "variable i causes variable j", diagonal empty.
struct CausalityMatrix {
    std::vector<std::string> variables;
    std::vector<std::vector<std::optional<MatrixCell>>> cells;
};

CausalityMatrix causality_matrix(const SearchResult& result);

}  // namespace granger
