#include "granger/cli.hpp"

#include "granger/error.hpp"
#include "granger/granger_core.hpp"
#include "granger/lag_scan.hpp"
#include "granger/render_out.hpp"
#include "granger/search_engine.hpp"
#include "granger/series_store.hpp"
#include "granger/var_sim.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace granger {

namespace {

std::size_t parse_positive(std::string_view text, std::string_view whole) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) {
        throw Error(ErrorKind::InvalidLag, "invalid lag specification '" + std::string(whole) +
                                               "' (expected N, A:B or a comma list of positive integers)");
    }
    return value;
}

std::vector<double> parse_reals(const std::string& text, const char* flag) {
    std::vector<double> values;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
            throw CLI::ValidationError(std::string(flag), "expected a comma-separated list of numbers");
        }
        values.push_back(v);
    }
    return values;
}

bool is_usage_error(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::UnknownColumn:
        case ErrorKind::InvalidLag:
        case ErrorKind::InvalidArgument:
        case ErrorKind::UnsupportedTest:
        case ErrorKind::UnsupportedFormat:
        case ErrorKind::TooFewColumns:
            return true;
        default:
            return false;
    }
}

std::size_t default_threads() {
    if (const char* env = std::getenv("GRANGER_THREADS")) {
        std::size_t n = 0;
        const std::string_view text(env);
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
        if (ec == std::errc() && ptr == text.data() + text.size()) return n;
    }
    return 0;
}

SeriesTable load_with_report(const std::string& path, std::ostream& err) {
    LoadReport report;
    SeriesTable table = load_csv(path, &report);
    if (!report.dropped_columns.empty()) {
        err << "note: dropped non-numeric column(s):";
        for (const auto& name : report.dropped_columns) err << " " << name;
        err << "\n";
    }
    return table;
}

struct OutputFlags {
    std::string format = "text";
    std::string out_path;

    RenderOptions options() const {
        RenderOptions opts;
        opts.format = parse_format(format);
        if (!out_path.empty()) opts.output_path = out_path;
        if (opts.format == Format::Svg && !opts.output_path) {
            throw Error(ErrorKind::InvalidArgument, "--format svg requires --out");
        }
        return opts;
    }
};

void add_output_flags(CLI::App& cmd, OutputFlags& flags, bool allow_svg) {
    auto* fmt = cmd.add_option("--format", flags.format, "Output format");
    fmt->check(allow_svg ? CLI::IsMember({"text", "csv", "json", "svg"}) : CLI::IsMember({"text", "csv", "json"}));
    cmd.add_option("--out", flags.out_path, "Write output to this file instead of stdout");
}

void emit(const std::string& content, const RenderOptions& opts, std::ostream& out) {
    if (!opts.output_path) out << content;
}

}  // namespace

std::vector<std::size_t> parse_lag_spec(std::string_view text) {
    std::vector<std::size_t> lags;
    if (text.empty()) {
        throw Error(ErrorKind::InvalidLag, "empty lag specification");
    }
    if (const auto colon = text.find(':'); colon != std::string_view::npos) {
        const std::size_t first = parse_positive(text.substr(0, colon), text);
        const std::size_t last = parse_positive(text.substr(colon + 1), text);
        if (last < first) {
            throw Error(ErrorKind::InvalidLag, "lag range '" + std::string(text) + "' is decreasing");
        }
        for (std::size_t lag = first; lag <= last; ++lag) lags.push_back(lag);
        return lags;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        const std::size_t lag = parse_positive(piece, text);
        if (!lags.empty() && lag <= lags.back()) {
            throw Error(ErrorKind::InvalidLag, "lags in '" + std::string(text) + "' must be strictly increasing");
        }
        lags.push_back(lag);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return lags;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bivariate Granger causality tests, pairwise search and lag sensitivity", "granger"};
    app.option_defaults()->always_capture_default();
    app.require_subcommand(1, 1);

    std::string df_convention = "effective";
    auto add_df_flag = [&](CLI::App& cmd) {
        cmd.add_option("--df-convention", df_convention,
                       "Sample size in the F denominator df: effective (T - lag) or raw (T)")
            ->check(CLI::IsMember({"effective", "raw"}));
    };
    auto convention = [&] { return df_convention == "raw" ? DfConvention::Raw : DfConvention::Effective; };

    // test
    std::string test_input, test_x, test_y, test_kind = "F";
    std::size_t test_lag = 1;
    double test_alpha = 0.05;
    OutputFlags test_output;
    auto* test_cmd = app.add_subcommand("test", "Bidirectional Granger causality F-test for one pair");
    test_cmd->add_option("input", test_input, "CSV file with a header row")->required();
    test_cmd->add_option("--x", test_x, "Column for X")->required();
    test_cmd->add_option("--y", test_y, "Column for Y")->required();
    test_cmd->add_option("--lag", test_lag, "Lag order of the VAR model")->check(CLI::PositiveNumber);
    test_cmd->add_option("--alpha", test_alpha, "Significance level");
    test_cmd->add_option("--test", test_kind, "Test type (only F is supported)");
    add_df_flag(*test_cmd);
    add_output_flags(*test_cmd, test_output, false);

    // search
    std::string search_input, search_lags = "1", search_columns, search_adjust = "none", search_kind = "F";
    double search_alpha = 0.05;
    bool include_insignificant = false;
    std::size_t threads = default_threads();
    OutputFlags search_output;
    auto* search_cmd = app.add_subcommand("search", "Test every directed pair of numeric columns");
    search_cmd->add_option("input", search_input, "CSV file with a header row")->required();
    search_cmd->add_option("--lag,--lags", search_lags, "Lag order(s): N, A:B or a comma list");
    search_cmd->add_option("--columns", search_columns, "Comma-separated columns to include (default: all)");
    search_cmd->add_option("--alpha", search_alpha, "Significance level");
    search_cmd->add_flag("--include-insignificant", include_insignificant, "Report every pair, not just significant ones [false]");
    search_cmd->add_option("--adjust", search_adjust, "Multiple-testing adjustment")
        ->check(CLI::IsMember({"none", "bonferroni", "bh"}));
    search_cmd->add_option("--threads", threads, "Worker threads (0 = all cores; env GRANGER_THREADS)");
    search_cmd->add_option("--test", search_kind, "Test type (only F is supported)");
    add_df_flag(*search_cmd);
    add_output_flags(*search_cmd, search_output, true);

    // lagselect
    std::string lag_input, lag_x, lag_y, lag_spec = "1:4", lag_kind = "F";
    double lag_alpha = 0.05;
    OutputFlags lag_output;
    auto* lag_cmd = app.add_subcommand("lagselect", "Granger tests for one pair across several lag orders");
    lag_cmd->add_option("input", lag_input, "CSV file with a header row")->required();
    lag_cmd->add_option("--x", lag_x, "Column for X")->required();
    lag_cmd->add_option("--y", lag_y, "Column for Y")->required();
    lag_cmd->add_option("--lags,--lag", lag_spec, "Lag orders: N, A:B or a comma list");
    lag_cmd->add_option("--alpha", lag_alpha, "Significance level");
    lag_cmd->add_option("--test", lag_kind, "Test type (only F is supported)");
    add_df_flag(*lag_cmd);
    add_output_flags(*lag_cmd, lag_output, true);

    // simulate
    VarSpec spec;
    std::string own_y, own_x, cross_xy, cross_yx, sim_out;
    auto* sim_cmd = app.add_subcommand("simulate", "Generate a bivariate VAR(p) sample as CSV (columns x, y)");
    sim_cmd->add_option("--p", spec.p, "VAR order")->check(CLI::PositiveNumber);
    sim_cmd->add_option("--T", spec.T, "Number of observations")->check(CLI::PositiveNumber);
    sim_cmd->add_option("--seed", spec.seed, "PRNG seed");
    sim_cmd->add_option("--burn-in", spec.burn_in, "Discarded leading samples");
    sim_cmd->add_option("--own-y", own_y, "y equation own-lag coefficients, comma list of p values (default zeros)");
    sim_cmd->add_option("--own-x", own_x, "x equation own-lag coefficients (default zeros)");
    sim_cmd->add_option("--cross-xy", cross_xy, "Coefficients on lagged x in the y equation (x -> y)");
    sim_cmd->add_option("--cross-yx", cross_yx, "Coefficients on lagged y in the x equation (y -> x)");
    sim_cmd->add_option("--intercept-y", spec.intercepts[0], "Intercept of the y equation");
    sim_cmd->add_option("--intercept-x", spec.intercepts[1], "Intercept of the x equation");
    sim_cmd->add_option("--sd-y", spec.noise_sd[0], "Noise standard deviation of y");
    sim_cmd->add_option("--sd-x", spec.noise_sd[1], "Noise standard deviation of x");
    sim_cmd->add_option("--corr", spec.noise_corr, "Contemporaneous noise correlation");
    sim_cmd->add_option("--out", sim_out, "Write CSV to this file instead of stdout");

    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << "run with --help for usage\n";
        return 2;
    }

    try {
        if (*test_cmd) {
            const SeriesTable table = load_with_report(test_input, err);
            GrangerOptions options;
            options.lag = test_lag;
            options.alpha = test_alpha;
            options.test = test_kind;
            options.df_convention = convention();
            const RenderOptions opts = test_output.options();
            const GrangerResult result = granger_causality_test(table, test_x, test_y, options);
            emit(render_granger_result(result, opts), opts, out);
        } else if (*search_cmd) {
            const SeriesTable table = load_with_report(search_input, err);
            SearchOptions options;
            options.lags = parse_lag_spec(search_lags);
            options.alpha = search_alpha;
            options.include_insignificant = include_insignificant;
            options.adjustment = parse_adjustment(search_adjust);
            options.threads = threads;
            options.test = search_kind;
            options.df_convention = convention();
            if (!search_columns.empty()) {
                std::stringstream in(search_columns);
                std::string name;
                while (std::getline(in, name, ',')) options.columns.push_back(name);
            }
            const RenderOptions opts = search_output.options();
            const SearchResult result = granger_search(table, options);
            emit(render_search(result, opts), opts, out);
        } else if (*lag_cmd) {
            const SeriesTable table = load_with_report(lag_input, err);
            LagScanOptions options;
            options.lags = parse_lag_spec(lag_spec);
            options.alpha = lag_alpha;
            options.test = lag_kind;
            options.df_convention = convention();
            const RenderOptions opts = lag_output.options();
            const LagScanResult result = granger_lag_select(table, lag_x, lag_y, options);
            emit(render_lag_scan(result, opts), opts, out);
        } else if (*sim_cmd) {
            auto coefficients = [&](const std::string& text, const char* flag) {
                if (text.empty()) return std::vector<double>(spec.p, 0.0);
                auto values = parse_reals(text, flag);
                if (values.size() != spec.p) {
                    throw Error(ErrorKind::InvalidArgument, std::string(flag) + " needs exactly " +
                                                                std::to_string(spec.p) + " values");
                }
                return values;
            };
            spec.own_coeffs[0] = coefficients(own_y, "--own-y");
            spec.own_coeffs[1] = coefficients(own_x, "--own-x");
            spec.cross_coeffs[0] = coefficients(cross_xy, "--cross-xy");
            spec.cross_coeffs[1] = coefficients(cross_yx, "--cross-yx");
            const std::string csv = render_table_csv(simulate(spec));
            if (sim_out.empty()) {
                out << csv;
            } else {
                write_text_file(sim_out, csv);
            }
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return is_usage_error(e.kind()) ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.push_back("granger");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace granger
