#include "granger/series_store.hpp"

#include "granger/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_set>

namespace granger {

SeriesTable::SeriesTable(std::vector<std::string> names, std::vector<std::vector<double>> columns)
    : names_(std::move(names)), columns_(std::move(columns)) {
    if (names_.empty()) {
        throw Error(ErrorKind::EmptyTable, "table has no columns");
    }
    if (names_.size() != columns_.size()) {
        throw Error(ErrorKind::InvalidArgument, "column name count does not match column count");
    }
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) {
            throw Error(ErrorKind::InvalidArgument, "column names must be non-empty");
        }
        if (!seen.insert(names_[i]).second) {
            throw Error(ErrorKind::InvalidArgument, "duplicate column name '" + names_[i] + "'");
        }
        if (columns_[i].empty()) {
            throw Error(ErrorKind::EmptyTable, "table has no rows");
        }
        if (columns_[i].size() != columns_.front().size()) {
            throw Error(ErrorKind::LengthMismatch, "column '" + names_[i] + "' has a different length");
        }
        for (std::size_t r = 0; r < columns_[i].size(); ++r) {
            if (!std::isfinite(columns_[i][r])) {
                throw Error(ErrorKind::ParseError, "non-finite value in column '" + names_[i] +
                                                       "' at row " + std::to_string(r + 1));
            }
        }
    }
}

std::span<const double> SeriesTable::column(std::string_view name) const {
    const auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
        throw Error(ErrorKind::UnknownColumn, "unknown column '" + std::string(name) + "'");
    }
    return columns_[static_cast<std::size_t>(it - names_.begin())];
}

bool SeriesTable::has_column(std::string_view name) const noexcept {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

SeriesTable SeriesTable::select_columns(std::span<const std::string> requested) const {
    if (requested.empty()) {
        return *this;
    }
    std::vector<std::string> names;
    std::vector<std::vector<double>> columns;
    for (const auto& name : requested) {
        const auto values = column(name);
        names.push_back(name);
        columns.emplace_back(values.begin(), values.end());
    }
    return SeriesTable(std::move(names), std::move(columns));
}

SeriesTable select_columns(const SeriesTable& table, std::span<const std::string> names) {
    return table.select_columns(names);
}

namespace {

using Record = std::vector<std::string>;

std::vector<Record> split_records(std::string_view text) {
    std::vector<Record> records;
    Record current;
    std::string field;
    bool in_quotes = false;
    bool field_started = false;
    bool record_started = false;

    auto end_field = [&] {
        current.push_back(std::move(field));
        field.clear();
        record_started = record_started || field_started;
        field_started = false;
    };
    auto end_record = [&] {
        end_field();
        // An unquoted empty line is skipped; "" alone is a record with one empty field.
        if (record_started || current.size() > 1) {
            records.push_back(std::move(current));
        }
        current.clear();
        record_started = false;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
            case '"':
                if (!field_started) {
                    in_quotes = true;
                    field_started = true;
                } else {
                    field.push_back(c);
                }
                break;
            case ',':
                end_field();
                break;
            case '\r':
                if (i + 1 < text.size() && text[i + 1] == '\n') {
                    ++i;
                }
                end_record();
                break;
            case '\n':
                end_record();
                break;
            default:
                field.push_back(c);
                field_started = true;
                break;
        }
    }
    if (in_quotes) {
        throw Error(ErrorKind::ParseError, "unterminated quoted field at end of input");
    }
    if (field_started || !field.empty() || !current.empty()) {
        end_record();
    }
    return records;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

bool is_missing_marker(std::string_view cell) {
    std::string lowered;
    for (char c : cell) lowered.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (!lowered.empty() && (lowered.front() == '+' || lowered.front() == '-')) lowered.erase(0, 1);
    return lowered.empty() || lowered == "na" || lowered == "nan" || lowered == "inf" ||
           lowered == "infinity" || lowered == "null";
}

std::optional<double> parse_real(std::string_view cell) {
    if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
    if (cell.empty()) return std::nullopt;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

}  // namespace

SeriesTable parse_csv(std::string_view text, LoadReport* report) {
    if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") {
        text.remove_prefix(3);
    }
    const auto records = split_records(text);
    if (records.empty()) {
        throw Error(ErrorKind::EmptyTable, "missing header row");
    }
    const Record& header = records.front();
    const std::size_t width = header.size();
    for (std::size_t r = 1; r < records.size(); ++r) {
        if (records[r].size() != width) {
            throw Error(ErrorKind::RaggedRows, "record " + std::to_string(r + 1) + " has " +
                                                   std::to_string(records[r].size()) +
                                                   " fields, header has " + std::to_string(width));
        }
    }
    const std::size_t rows = records.size() - 1;
    if (rows == 0) {
        throw Error(ErrorKind::EmptyTable, "no data rows");
    }

    std::vector<std::string> names;
    std::vector<std::vector<double>> columns;
    std::vector<std::string> dropped;
    for (std::size_t c = 0; c < width; ++c) {
        const std::string name(trim(header[c]));
        // Type is decided by the first cell that is not a missing marker.
        std::optional<bool> numeric;
        for (std::size_t r = 1; r <= rows && !numeric; ++r) {
            const auto cell = trim(records[r][c]);
            if (!is_missing_marker(cell)) {
                numeric = parse_real(cell).has_value();
            }
        }
        // Unnamed columns are row labels (as written by R's write.csv).
        if (name.empty()) {
            dropped.push_back("(unnamed column " + std::to_string(c + 1) + ")");
            continue;
        }
        if (!numeric.value_or(false)) {
            dropped.push_back(name);
            continue;
        }
        std::vector<double> values;
        values.reserve(rows);
        for (std::size_t r = 1; r <= rows; ++r) {
            const auto cell = trim(records[r][c]);
            const auto value = parse_real(cell);
            if (!value) {
                throw Error(ErrorKind::ParseError, "row " + std::to_string(r) + ", column '" + name +
                                                       "': cannot parse '" + std::string(cell) +
                                                       "' as a finite number");
            }
            values.push_back(*value);
        }
        names.push_back(name);
        columns.push_back(std::move(values));
    }
    if (names.empty()) {
        throw Error(ErrorKind::EmptyTable, "no numeric columns");
    }
    if (report != nullptr) {
        report->dropped_columns = dropped;
        report->data_rows = rows;
    }
    return SeriesTable(std::move(names), std::move(columns));
}

SeriesTable load_csv(const std::filesystem::path& path, LoadReport* report) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::FileNotFound, "cannot open '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_csv(buffer.str(), report);
}

}  // namespace granger
