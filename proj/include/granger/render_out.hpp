#pragma once

#include "granger/granger_core.hpp"
#include "granger/lag_scan.hpp"
#include "granger/search_engine.hpp"
#include "granger/series_store.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace granger {

enum class Format { Text, Csv, Json, Svg };

const char* to_string(Format format) noexcept;
/// "text", "csv", "json" or "svg"; anything else is UnsupportedFormat.
Format parse_format(std::string_view text);

struct RenderOptions {
    Format format = Format::Text;
    std::optional<std::filesystem::path> output_path;
    std::string significant_color = "#4477AA";
    std::string insignificant_color = "#CCCCCC";
    int width_px = 960;
    int height_px = 480;
};

/// Four decimals, as in verdict lines ("0.2983").
std::string format_p_fixed4(double p);

/// Table listings: four decimals from 5e-5 up ("0.0127"); below that one
/// significant digit, as a plain decimal down to 1e-8 ("0.0000003") and in
/// scientific notation beyond ("2e-39").
std::string format_p_listing(double p);

/// Shortest "%g"-style rendering used for alpha in headers ("0.05").
std::string format_short(double value);

/// Round-trip precision ("%.17g").
std::string format_exact(double value);

// Each render_* call returns the rendered document. When opts.output_path is
// set the document is also written there (IOError on failure). Svg requires
// an output path.

std::string render_granger_result(const GrangerResult& result, const RenderOptions& opts = {});
std::string render_search(const SearchResult& result, const RenderOptions& opts = {});
std::string render_lag_scan(const LagScanResult& result, const RenderOptions& opts = {});

/// CSV with a header row and values at round-trip precision.
std::string render_table_csv(const SeriesTable& table);

/// Write `content` to `path`, throwing IOError when the file cannot be written.
void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace granger
