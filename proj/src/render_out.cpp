#include "granger/render_out.hpp"

#include "granger/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace granger {

using ordered_json = nlohmann::ordered_json;

const char* to_string(Format format) noexcept {
    switch (format) {
        case Format::Text: return "text";
        case Format::Csv: return "csv";
        case Format::Json: return "json";
        case Format::Svg: return "svg";
    }
    return "text";
}

Format parse_format(std::string_view text) {
    if (text == "text") return Format::Text;
    if (text == "csv") return Format::Csv;
    if (text == "json") return Format::Json;
    if (text == "svg") return Format::Svg;
    throw Error(ErrorKind::UnsupportedFormat, "unknown output format '" + std::string(text) + "'");
}

namespace {

template <typename... Args>
std::string printf_string(const char* fmt, Args... args) {
    char buffer[128];
    const int n = std::snprintf(buffer, sizeof buffer, fmt, args...);
    if (n < 0) return {};
    if (static_cast<std::size_t>(n) < sizeof buffer) return std::string(buffer, static_cast<std::size_t>(n));
    std::string out(static_cast<std::size_t>(n) + 1, '\0');
    std::snprintf(out.data(), out.size(), fmt, args...);
    out.resize(static_cast<std::size_t>(n));
    return out;
}

std::string pad_right(std::string_view s, std::size_t width) {
    std::string out(s);
    if (out.size() < width) out.append(width - out.size(), ' ');
    return out;
}

std::string pad_left(std::string_view s, std::size_t width) {
    std::string out;
    if (s.size() < width) out.assign(width - s.size(), ' ');
    out.append(s);
    return out;
}

std::string underline(std::string_view title) {
    return std::string(title) + "\n" + std::string(title.size(), '=') + "\n";
}

std::string join_lags(const std::vector<std::size_t>& lags) {
    std::string out;
    for (std::size_t i = 0; i < lags.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(lags[i]);
    }
    return out;
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string xml_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c; break;
        }
    }
    return out;
}

std::string px(double v) { return printf_string("%.2f", v); }

const char* bool_text(bool b) { return b ? "TRUE" : "FALSE"; }

std::string finish(std::string content, const RenderOptions& opts) {
    if (opts.output_path) write_text_file(*opts.output_path, content);
    return content;
}

void require_svg_path(const RenderOptions& opts) {
    if (opts.format == Format::Svg && !opts.output_path) {
        throw Error(ErrorKind::InvalidArgument, "svg output requires an output path");
    }
}

std::string dump_json(const ordered_json& doc) { return doc.dump(2) + "\n"; }

// ---- GrangerResult ----------------------------------------------------------

std::string granger_text(const GrangerResult& r) {
    std::string out = underline("Granger Causality Test");
    out += "\n";
    out += "Observations: " + std::to_string(r.n) + ", Lag order: " + std::to_string(r.lag) +
           ", Significance level: " + printf_string("%.3f", r.alpha) + "\n";
    out += "\n";
    auto verdict = [](const std::string& cause, const std::string& effect, bool causes, double p) {
        return cause + " -> " + effect + ": " + cause + (causes ? " Granger-causes " : " does not Granger-cause ") +
               effect + " (p = " + format_p_fixed4(p) + ")\n";
    };
    out += verdict(r.x_name, r.y_name, r.x_causes_y, r.p_value_xy);
    out += verdict(r.y_name, r.x_name, r.y_causes_x, r.p_value_yx);
    return out;
}

std::string granger_csv(const GrangerResult& r) {
    const GlanceRow g = glance(r);
    std::string out = "direction,cause,effect,statistic,p_value,significant,lag,alpha,n,x_name,y_name\n";
    for (const auto& row : tidy(r)) {
        out += csv_field(row.direction) + "," + csv_field(row.cause) + "," + csv_field(row.effect) + "," +
               format_exact(row.statistic) + "," + format_exact(row.p_value) + "," +
               (row.significant ? "true" : "false") + "," + std::to_string(g.lag) + "," +
               format_exact(g.alpha) + "," + std::to_string(g.n) + "," + csv_field(g.x_name) + "," +
               csv_field(g.y_name) + "\n";
    }
    return out;
}

std::string granger_json(const GrangerResult& r) {
    const GlanceRow g = glance(r);
    ordered_json doc;
    doc["meta"] = {{"lag", g.lag}, {"alpha", g.alpha}, {"n", g.n}, {"x_name", g.x_name}, {"y_name", g.y_name}};
    doc["rows"] = ordered_json::array();
    for (const auto& row : tidy(r)) {
        doc["rows"].push_back({{"direction", row.direction},
                               {"cause", row.cause},
                               {"effect", row.effect},
                               {"statistic", row.statistic},
                               {"p_value", row.p_value},
                               {"significant", row.significant}});
    }
    return dump_json(doc);
}

// ---- SearchResult -----------------------------------------------------------

std::string search_text(const SearchResult& r) {
    std::string out = underline("Granger Causality Search Results");
    out += "\n";
    std::string vars;
    for (std::size_t i = 0; i < r.variables.size(); ++i) vars += (i ? ", " : "") + r.variables[i];
    out += std::to_string(r.variables.size()) + " variables tested: " + vars + "\n";
    out += std::to_string(r.pairs_examined) + " directed pairs examined at lag order" +
           (r.lags_tested.size() == 1 ? " " : "s ") + join_lags(r.lags_tested) + "\n";
    const std::size_t sig = r.significant_count();
    out += std::to_string(sig) + " significant relationship" + (sig == 1 ? "" : "s") + " found (alpha = " +
           format_short(r.alpha) + ")\n";
    const bool adjusted = r.adjustment != Adjustment::None;
    if (adjusted) {
        out += std::string("Adjustment: ") +
               (r.adjustment == Adjustment::Bonferroni ? "Bonferroni" : "Benjamini-Hochberg") +
               " (significance uses adjusted p-values)\n";
    }
    out += "\n";
    out += "Results (sorted by p-value):\n";
    if (r.rows.empty()) {
        out += "  (none)\n";
        return out;
    }

    std::size_t wc = 6, we = 7, wp = 9, wl = 3, wa = 10;
    std::vector<std::string> ps, as;
    for (const auto& row : r.rows) {
        wc = std::max(wc, row.cause.size());
        we = std::max(we, row.effect.size());
        ps.push_back(format_p_listing(row.p_value));
        wp = std::max(wp, ps.back().size());
        wl = std::max(wl, std::to_string(row.lag).size());
        as.push_back(row.p_adjusted ? format_p_listing(*row.p_adjusted) : "");
        wa = std::max(wa, as.back().size());
    }
    out += "  " + pad_right("cause", wc) + " " + pad_right("effect", we) + " " + pad_left("p.value", wp - 1) +
           pad_left("lag", wl + 2) + (adjusted ? "  " + pad_right("p.adjusted", wa) : "") + "  significant\n";
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        const auto& row = r.rows[i];
        out += "  " + pad_right(row.cause, wc) + " " + pad_right(row.effect, we) + " " + pad_right(ps[i], wp) +
               pad_left(std::to_string(row.lag), wl + 1) + (adjusted ? "  " + pad_right(as[i], wa) : "") + "  " +
               bool_text(row.significant) + "\n";
    }
    return out;
}

std::string search_csv(const SearchResult& r) {
    std::string out = "cause,effect,statistic,p_value,lag,significant,p_adjusted\n";
    for (const auto& row : r.rows) {
        out += csv_field(row.cause) + "," + csv_field(row.effect) + "," + format_exact(row.statistic) + "," +
               format_exact(row.p_value) + "," + std::to_string(row.lag) + "," +
               (row.significant ? "true" : "false") + "," +
               (row.p_adjusted ? format_exact(*row.p_adjusted) : std::string()) + "\n";
    }
    return out;
}

std::string search_json(const SearchResult& r) {
    ordered_json doc;
    doc["meta"] = {{"variables", r.variables},
                   {"lags_tested", r.lags_tested},
                   {"alpha", r.alpha},
                   {"pairs_examined", r.pairs_examined},
                   {"significant_count", r.significant_count()},
                   {"adjustment", to_string(r.adjustment)},
                   {"include_insignificant", r.include_insignificant}};
    doc["rows"] = ordered_json::array();
    for (const auto& row : r.rows) {
        ordered_json rec = {{"cause", row.cause},     {"effect", row.effect},
                            {"statistic", row.statistic}, {"p_value", row.p_value},
                            {"lag", row.lag},         {"significant", row.significant}};
        rec["p_adjusted"] = row.p_adjusted ? ordered_json(*row.p_adjusted) : ordered_json(nullptr);
        doc["rows"].push_back(std::move(rec));
    }
    return dump_json(doc);
}

std::string svg_open(int width, int height) {
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(width) + "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
           std::to_string(width) + " " + std::to_string(height) + "\" font-family=\"sans-serif\">\n" +
           "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(width) + "\" height=\"" + std::to_string(height) +
           "\" fill=\"#FFFFFF\"/>\n";
}

std::string svg_text(double x, double y, std::string_view text, std::string_view extra = {}) {
    std::string out = "<text x=\"" + px(x) + "\" y=\"" + px(y) + "\"";
    if (!extra.empty()) out += " " + std::string(extra);
    return out + ">" + xml_escape(text) + "</text>\n";
}

std::string search_svg(const SearchResult& r, const RenderOptions& opts) {
    const CausalityMatrix matrix = causality_matrix(r);
    const std::size_t k = matrix.variables.size();
    const double width = opts.width_px;
    const double height = opts.height_px;
    const double panel_gap = 40.0;
    const double top = 70.0, label = 60.0, margin = 20.0;
    const double panel_w = (width - 2 * margin - panel_gap) / 2.0 - label;
    const double grid = std::max(10.0, std::min(panel_w, height - top - margin - label / 2));
    const double cell = grid / static_cast<double>(k);

    std::string out = svg_open(opts.width_px, opts.height_px);
    out += svg_text(width / 2, 24, "Granger causality matrix (alpha = " + format_short(r.alpha) + ")",
                    "text-anchor=\"middle\" font-size=\"16\"");
    const char* titles[2] = {"Row variables Granger-cause column variables",
                             "Column variables Granger-cause row variables"};
    const char* ids[2] = {"left", "right"};
    for (int panel = 0; panel < 2; ++panel) {
        const double x0 = margin + label + panel * (panel_w + label + panel_gap);
        const double y0 = top;
        out += "<g class=\"panel\" id=\"panel-" + std::string(ids[panel]) + "\">\n";
        out += svg_text(x0 + grid / 2, y0 - 28, titles[panel], "text-anchor=\"middle\" font-size=\"12\"");
        for (std::size_t i = 0; i < k; ++i) {
            out += svg_text(x0 - 6, y0 + (static_cast<double>(i) + 0.5) * cell + 4, matrix.variables[i],
                            "text-anchor=\"end\" font-size=\"12\"");
            out += svg_text(x0 + (static_cast<double>(i) + 0.5) * cell, y0 - 8, matrix.variables[i],
                            "text-anchor=\"middle\" font-size=\"12\"");
        }
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                const double cx = x0 + static_cast<double>(j) * cell;
                const double cy = y0 + static_cast<double>(i) * cell;
                const std::string geometry = "x=\"" + px(cx) + "\" y=\"" + px(cy) + "\" width=\"" + px(cell) +
                                             "\" height=\"" + px(cell) + "\"";
                const std::string id = std::string(ids[panel]) + "-r" + std::to_string(i) + "-c" + std::to_string(j);
                if (i == j) {
                    out += "<rect class=\"diag\" id=\"" + id + "\" " + geometry +
                           " fill=\"#FFFFFF\" stroke=\"#999999\"/>\n";
                    continue;
                }
                // Left: row i causes column j. Right: column j causes row i.
                const std::size_t cause = panel == 0 ? i : j;
                const std::size_t effect = panel == 0 ? j : i;
                const auto& value = matrix.cells[cause][effect];
                if (!value) continue;
                const std::string& fill = value->significant ? opts.significant_color : opts.insignificant_color;
                out += "<rect class=\"cell\" id=\"" + id + "\" " + geometry + " fill=\"" + xml_escape(fill) +
                       "\" stroke=\"#FFFFFF\"><title>" + xml_escape(matrix.variables[cause]) + " -&gt; " +
                       xml_escape(matrix.variables[effect]) + " (p = " + format_p_listing(value->p_value) +
                       ")</title></rect>\n";
                out += svg_text(cx + cell / 2, cy + cell / 2 + 4, format_p_listing(value->p_value),
                                "text-anchor=\"middle\" font-size=\"11\"");
            }
        }
        out += "</g>\n";
    }
    out += "</svg>\n";
    return out;
}

// ---- LagScanResult ----------------------------------------------------------

std::string significance_summary(std::size_t count, std::size_t total, const LagScanResult& r, bool xy) {
    if (count == 0) return "Never significant";
    if (count == total) return "Significant at all " + std::to_string(total) + " lag order" + (total == 1 ? "" : "s");
    std::vector<std::size_t> hits;
    for (const auto& row : r.per_lag) {
        if (xy ? row.significant_xy : row.significant_yx) hits.push_back(row.lag);
    }
    return "Significant at " + std::to_string(count) + " of " + std::to_string(total) + " lag orders (" +
           join_lags(hits) + ")";
}

std::string lag_text(const LagScanResult& r) {
    const std::string xy = r.x_name + " -> " + r.y_name;
    const std::string yx = r.y_name + " -> " + r.x_name;
    std::string out = underline("Granger Lag Selection Analysis");
    out += "\n";
    out += "Variables: " + xy + " (and reverse)\n";
    out += "Lag orders tested: " + join_lags(r.lags) + "\n";
    out += "Significance level: " + format_short(r.alpha) + "\n";
    out += "\n";
    out += "Summary:\n";
    out += "  " + xy + ": " + significance_summary(r.significant_count_xy, r.lags.size(), r, true) + "\n";
    out += "  " + yx + ": " + significance_summary(r.significant_count_yx, r.lags.size(), r, false) + "\n";
    out += "\n";
    out += "Best lag (by minimum p-value):\n";
    out += "  " + xy + ": lag = " + std::to_string(r.best_lag_xy) + " (p = " +
           format_p_listing(r.row_for(r.best_lag_xy).p_value_xy) + ")\n";
    out += "  " + yx + ": lag = " + std::to_string(r.best_lag_yx) + " (p = " +
           format_p_listing(r.row_for(r.best_lag_yx).p_value_yx) + ")\n";
    return out;
}

std::string lag_csv(const LagScanResult& r) {
    std::string out = "lag,statistic_xy,p_value_xy,significant_xy,statistic_yx,p_value_yx,significant_yx,aic,bic\n";
    for (const auto& row : r.per_lag) {
        out += std::to_string(row.lag) + "," + format_exact(row.statistic_xy) + "," + format_exact(row.p_value_xy) +
               "," + (row.significant_xy ? "true" : "false") + "," + format_exact(row.statistic_yx) + "," +
               format_exact(row.p_value_yx) + "," + (row.significant_yx ? "true" : "false") + "," +
               format_exact(row.aic) + "," + format_exact(row.bic) + "\n";
    }
    return out;
}

std::string lag_json(const LagScanResult& r) {
    ordered_json doc;
    doc["meta"] = {{"x_name", r.x_name},
                   {"y_name", r.y_name},
                   {"lags", r.lags},
                   {"alpha", r.alpha},
                   {"n", r.n},
                   {"best_lag_xy", r.best_lag_xy},
                   {"best_lag_yx", r.best_lag_yx},
                   {"significant_count_xy", r.significant_count_xy},
                   {"significant_count_yx", r.significant_count_yx}};
    doc["rows"] = ordered_json::array();
    for (const auto& row : r.per_lag) {
        doc["rows"].push_back({{"lag", row.lag},
                               {"statistic_xy", row.statistic_xy},
                               {"p_value_xy", row.p_value_xy},
                               {"significant_xy", row.significant_xy},
                               {"statistic_yx", row.statistic_yx},
                               {"p_value_yx", row.p_value_yx},
                               {"significant_yx", row.significant_yx},
                               {"aic", row.aic},
                               {"bic", row.bic}});
    }
    return dump_json(doc);
}

std::string lag_svg(const LagScanResult& r, const RenderOptions& opts) {
    const double width = opts.width_px;
    const double height = opts.height_px;
    const double left = 70, right = 170, top = 50, bottom = 60;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;
    const double lag_min = static_cast<double>(r.lags.front());
    const double lag_max = static_cast<double>(r.lags.back());
    const double span = lag_max > lag_min ? lag_max - lag_min : 1.0;
    auto sx = [&](double lag) {
        return r.lags.size() == 1 ? left + plot_w / 2 : left + (lag - lag_min) / span * plot_w;
    };
    auto sy = [&](double p) { return top + (1.0 - p) * plot_h; };

    std::string out = svg_open(opts.width_px, opts.height_px);
    out += svg_text(left + plot_w / 2, 28, "Granger causality p-values by lag order",
                    "text-anchor=\"middle\" font-size=\"16\"");
    out += "<g class=\"axes\" stroke=\"#000000\" stroke-width=\"1\">\n";
    out += "<line x1=\"" + px(left) + "\" y1=\"" + px(top + plot_h) + "\" x2=\"" + px(left + plot_w) + "\" y2=\"" +
           px(top + plot_h) + "\"/>\n";
    out += "<line x1=\"" + px(left) + "\" y1=\"" + px(top) + "\" x2=\"" + px(left) + "\" y2=\"" + px(top + plot_h) +
           "\"/>\n";
    out += "</g>\n";
    for (std::size_t lag : r.lags) {
        const double x = sx(static_cast<double>(lag));
        out += "<line x1=\"" + px(x) + "\" y1=\"" + px(top + plot_h) + "\" x2=\"" + px(x) + "\" y2=\"" +
               px(top + plot_h + 5) + "\" stroke=\"#000000\"/>\n";
        out += svg_text(x, top + plot_h + 20, std::to_string(lag), "text-anchor=\"middle\" font-size=\"12\"");
    }
    for (int tick = 0; tick <= 4; ++tick) {
        const double p = tick * 0.25;
        out += "<line x1=\"" + px(left - 5) + "\" y1=\"" + px(sy(p)) + "\" x2=\"" + px(left) + "\" y2=\"" +
               px(sy(p)) + "\" stroke=\"#000000\"/>\n";
        out += svg_text(left - 8, sy(p) + 4, printf_string("%.2f", p), "text-anchor=\"end\" font-size=\"12\"");
    }
    out += svg_text(left + plot_w / 2, height - 18, "Lag order", "text-anchor=\"middle\" font-size=\"13\"");
    out += svg_text(18, top + plot_h / 2, "p-value",
                    "text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 " + px(top + plot_h / 2) +
                        ")\"");

    out += "<line class=\"threshold\" x1=\"" + px(left) + "\" y1=\"" + px(sy(r.alpha)) + "\" x2=\"" +
           px(left + plot_w) + "\" y2=\"" + px(sy(r.alpha)) +
           "\" stroke=\"#AA3377\" stroke-dasharray=\"4 4\"><title>alpha = " + format_short(r.alpha) +
           "</title></line>\n";

    auto series = [&](bool xy, const char* cls, const std::string& color, const char* dash) {
        std::string points;
        for (const auto& row : r.per_lag) {
            if (!points.empty()) points += " ";
            points += px(sx(static_cast<double>(row.lag))) + "," + px(sy(xy ? row.p_value_xy : row.p_value_yx));
        }
        std::string line = "<polyline class=\"" + std::string(cls) + "\" points=\"" + points +
                           "\" fill=\"none\" stroke=\"" + xml_escape(color) + "\" stroke-width=\"2\"";
        if (dash) line += " stroke-dasharray=\"" + std::string(dash) + "\"";
        line += "/>\n";
        for (const auto& row : r.per_lag) {
            line += "<circle cx=\"" + px(sx(static_cast<double>(row.lag))) + "\" cy=\"" +
                    px(sy(xy ? row.p_value_xy : row.p_value_yx)) + "\" r=\"3\" fill=\"" + xml_escape(color) + "\"/>\n";
        }
        return line;
    };
    const std::string xy = r.x_name + " -> " + r.y_name;
    const std::string yx = r.y_name + " -> " + r.x_name;
    out += series(true, "series-xy", opts.significant_color, nullptr);
    out += series(false, "series-yx", "#222222", "6 4");

    const double lx = left + plot_w + 15;
    out += "<g class=\"legend\">\n";
    out += "<line x1=\"" + px(lx) + "\" y1=\"" + px(top + 10) + "\" x2=\"" + px(lx + 30) + "\" y2=\"" + px(top + 10) +
           "\" stroke=\"" + xml_escape(opts.significant_color) + "\" stroke-width=\"2\"/>\n";
    out += svg_text(lx + 36, top + 14, xy, "font-size=\"12\"");
    out += "<line x1=\"" + px(lx) + "\" y1=\"" + px(top + 30) + "\" x2=\"" + px(lx + 30) + "\" y2=\"" + px(top + 30) +
           "\" stroke=\"#222222\" stroke-width=\"2\" stroke-dasharray=\"6 4\"/>\n";
    out += svg_text(lx + 36, top + 34, yx, "font-size=\"12\"");
    out += "<line x1=\"" + px(lx) + "\" y1=\"" + px(top + 50) + "\" x2=\"" + px(lx + 30) + "\" y2=\"" + px(top + 50) +
           "\" stroke=\"#AA3377\" stroke-dasharray=\"4 4\"/>\n";
    out += svg_text(lx + 36, top + 54, "alpha = " + format_short(r.alpha), "font-size=\"12\"");
    out += "</g>\n";
    out += "</svg>\n";
    return out;
}

}  // namespace

// Plain decimals stop being readable past eight places.
constexpr int kPlainDecimalMinExponent = -8;

std::string format_p_fixed4(double p) { return printf_string("%.4f", p); }

std::string format_p_listing(double p) {
    if (p >= 5e-5) return printf_string("%.4f", p);
    if (p <= 0.0) return "0";
    // Round to one significant digit first so the exponent reflects any carry.
    const std::string sci = printf_string("%.0e", p);
    const int exponent = std::stoi(sci.substr(sci.find('e') + 1));
    if (exponent < kPlainDecimalMinExponent) return sci;
    return printf_string("%.*f", -exponent, p);
}

std::string format_short(double value) { return printf_string("%g", value); }

std::string format_exact(double value) { return printf_string("%.17g", value); }

void write_text_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::IOError, "cannot open '" + path.string() + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error(ErrorKind::IOError, "failed writing '" + path.string() + "'");
}

std::string render_granger_result(const GrangerResult& result, const RenderOptions& opts) {
    switch (opts.format) {
        case Format::Text: return finish(granger_text(result), opts);
        case Format::Csv: return finish(granger_csv(result), opts);
        case Format::Json: return finish(granger_json(result), opts);
        case Format::Svg: break;
    }
    throw Error(ErrorKind::UnsupportedFormat, "svg output is not available for a single test");
}

std::string render_search(const SearchResult& result, const RenderOptions& opts) {
    require_svg_path(opts);
    switch (opts.format) {
        case Format::Text: return finish(search_text(result), opts);
        case Format::Csv: return finish(search_csv(result), opts);
        case Format::Json: return finish(search_json(result), opts);
        case Format::Svg: return finish(search_svg(result, opts), opts);
    }
    return {};
}

std::string render_lag_scan(const LagScanResult& result, const RenderOptions& opts) {
    require_svg_path(opts);
    switch (opts.format) {
        case Format::Text: return finish(lag_text(result), opts);
        case Format::Csv: return finish(lag_csv(result), opts);
        case Format::Json: return finish(lag_json(result), opts);
        case Format::Svg: return finish(lag_svg(result, opts), opts);
    }
    return {};
}

std::string render_table_csv(const SeriesTable& table) {
    std::string out;
    const auto& names = table.names();
    for (std::size_t c = 0; c < names.size(); ++c) out += (c ? "," : "") + csv_field(names[c]);
    out += "\n";
    for (std::size_t r = 0; r < table.num_rows(); ++r) {
        for (std::size_t c = 0; c < names.size(); ++c) {
            if (c) out += ",";
            out += format_exact(table.column(c)[r]);
        }
        out += "\n";
    }
    return out;
}

}  // namespace granger
