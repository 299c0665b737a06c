#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace granger {

/**
 * Named, equal-length numeric columns.
 *
 * Immutable once constructed. The constructor enforces that there is at least
 * one column, every column has the same length T >= 1, names are unique and
 * non-empty, and no value is NaN or infinite.
 */
class SeriesTable {
public:
    SeriesTable(std::vector<std::string> names, std::vector<std::vector<double>> columns);

    std::size_t num_columns() const noexcept { return names_.size(); }
    std::size_t num_rows() const noexcept { return columns_.front().size(); }

    const std::vector<std::string>& names() const noexcept { return names_; }

    /// Throws UnknownColumn when `name` is absent. Matching is case-sensitive.
    std::span<const double> column(std::string_view name) const;
    std::span<const double> column(std::size_t index) const { return columns_.at(index); }

    bool has_column(std::string_view name) const noexcept;

    /// Sub-table in request order; an empty request returns a copy of the table.
    SeriesTable select_columns(std::span<const std::string> requested) const;

    friend bool operator==(const SeriesTable&, const SeriesTable&) = default;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<double>> columns_;
};

/// Columns skipped during loading because their cells were not numeric.
struct LoadReport {
    std::vector<std::string> dropped_columns;
    std::size_t data_rows = 0;
};

/**
 * Parse RFC-4180 CSV text (comma delimiter, optional double quotes, mandatory
 * header row).
 *
 * A column's type is decided by its first non-missing cell: if that parses
 * as a real number the column is numeric, otherwise it is dropped and listed
 * in the report. Columns with an empty header are row labels and are dropped
 * the same way. Missing markers (empty, NA, NaN, Inf) inside a numeric
 * column are a ParseError; so is any later cell that fails to parse.
 */
SeriesTable parse_csv(std::string_view text, LoadReport* report = nullptr);

/// parse_csv on the contents of `path`. Throws FileNotFound if it cannot be opened.
SeriesTable load_csv(const std::filesystem::path& path, LoadReport* report = nullptr);

/// Free-function form of SeriesTable::select_columns.
SeriesTable select_columns(const SeriesTable& table, std::span<const std::string> names);

}  // namespace granger
