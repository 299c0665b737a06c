#include "granger/cli.hpp"
#include "granger/lag_scan.hpp"
#include "granger/render_out.hpp"
#include "granger/search_engine.hpp"
#include "granger/var_sim.hpp"
#include "test_support.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

using namespace granger;
using granger::testing::kind_of;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / ("granger_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Four-column macro-style table with a label column the loader must drop.
struct Fixture {
    SeriesTable table;
    std::filesystem::path csv;

    Fixture() : table(make()), csv(scratch("macro.csv")) {
        std::ofstream f(csv);
        const std::string body = render_table_csv(table);
        std::istringstream lines(body);
        std::string line;
        std::size_t row = 0;
        while (std::getline(lines, line)) {
            f << (row == 0 ? std::string("quarter") : "Q" + std::to_string(row)) << "," << line << "\n";
            ++row;
        }
    }

    static SeriesTable make() {
        VarSpec a;
        a.T = 120;
        a.seed = 5;
        a.own_coeffs = {std::vector<double>{0.4}, std::vector<double>{0.6}};
        a.cross_coeffs = {std::vector<double>{0.7}, std::vector<double>{0.0}};
        VarSpec b = a;
        b.seed = 6;
        b.cross_coeffs = {std::vector<double>{0.0}, std::vector<double>{0.0}};
        const SeriesTable ta = simulate(a), tb = simulate(b);
        auto vec = [](std::span<const double> s) { return std::vector<double>(s.begin(), s.end()); };
        return SeriesTable({"e", "prod", "rw", "U"},
                           {vec(ta.column("x")), vec(tb.column("x")), vec(tb.column("y")), vec(ta.column("y"))});
    }
};

const Fixture& fixture() {
    static const Fixture f;
    return f;
}

}  // namespace

TEST_CASE("lag specifications") {
    CHECK(parse_lag_spec("3") == std::vector<std::size_t>{3});
    CHECK(parse_lag_spec("1:4") == std::vector<std::size_t>{1, 2, 3, 4});
    CHECK(parse_lag_spec("2:2") == std::vector<std::size_t>{2});
    CHECK(parse_lag_spec("1,2,5") == std::vector<std::size_t>{1, 2, 5});
    for (const char* bad : {"", "0", "-1", "4:2", "1:", ":3", "2,1", "1,1", "a", "1.5", "1,,2", "0:3"}) {
        CAPTURE(bad);
        CHECK(kind_of([&] { parse_lag_spec(bad); }) == ErrorKind::InvalidLag);
    }
}

TEST_CASE("test subcommand matches the library rendering") {
    const auto& f = fixture();
    const Run r = run({"test", f.csv.string(), "--x", "e", "--y", "U", "--lag", "2"});
    REQUIRE(r.code == 0);
    const auto result = granger_causality_test(f.table, "e", "U", {.lag = 2});
    CHECK(r.out == render_granger_result(result));
    CHECK(r.out.find("e -> U: e Granger-causes U") != std::string::npos);
    CHECK(r.err.find("dropped non-numeric column(s): quarter") != std::string::npos);

    const Run raw = run({"test", f.csv.string(), "--x", "e", "--y", "U", "--lag", "2", "--df-convention", "raw",
                         "--format", "json"});
    REQUIRE(raw.code == 0);
    const auto raw_result =
        granger_causality_test(f.table, "e", "U", {.lag = 2, .df_convention = DfConvention::Raw});
    CHECK(raw.out == render_granger_result(raw_result, {.format = Format::Json}));
}

TEST_CASE("search subcommand with json output file") {
    const auto& f = fixture();
    const auto out = scratch("r.json");
    const Run r = run({"search", f.csv.string(), "--lag", "2", "--format", "json", "--out", out.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    const auto expected = granger_search(f.table, {.lags = {2}});
    CHECK(slurp(out) == render_search(expected, {.format = Format::Json}));
    const auto doc = nlohmann::json::parse(slurp(out));
    CHECK(doc["rows"].size() == expected.rows.size());
    CHECK(doc["rows"][0]["cause"] == "e");
    CHECK(doc["rows"][0]["effect"] == "U");
}

TEST_CASE("search flags map onto options") {
    const auto& f = fixture();
    const Run r = run({"search", f.csv.string(), "--lags", "1:3", "--alpha", "0.1", "--include-insignificant",
                       "--adjust", "bh", "--columns", "U,e,rw", "--threads", "2"});
    REQUIRE(r.code == 0);
    const auto expected = granger_search(f.table, {.columns = {"U", "e", "rw"},
                                                   .lags = {1, 2, 3},
                                                   .alpha = 0.1,
                                                   .include_insignificant = true,
                                                   .adjustment = Adjustment::BenjaminiHochberg,
                                                   .threads = 1});
    CHECK(r.out == render_search(expected));

    const auto svg = scratch("m.svg");
    CHECK(run({"search", f.csv.string(), "--format", "svg", "--out", svg.string()}).code == 0);
    CHECK(slurp(svg).find("<svg") != std::string::npos);
    CHECK(run({"search", f.csv.string(), "--format", "svg"}).code == 2);
}

TEST_CASE("thread count never changes output") {
    const auto& f = fixture();
    const std::vector<std::string> base{"search", f.csv.string(), "--lags", "1:4", "--include-insignificant"};
    auto with = [&](std::vector<std::string> extra) {
        auto args = base;
        args.insert(args.end(), extra.begin(), extra.end());
        return run(args);
    };
    const Run one = with({"--threads", "1"});
    CHECK(with({"--threads", "3"}).out == one.out);
    ::setenv("GRANGER_THREADS", "2", 1);
    CHECK(with({}).out == one.out);
    ::unsetenv("GRANGER_THREADS");
    CHECK(with({}).out == one.out);
}

TEST_CASE("lagselect subcommand") {
    const auto& f = fixture();
    const Run r = run({"lagselect", f.csv.string(), "--x", "e", "--y", "U", "--lags", "1:8"});
    REQUIRE(r.code == 0);
    LagScanOptions opts;
    opts.lags = {1, 2, 3, 4, 5, 6, 7, 8};
    CHECK(r.out == render_lag_scan(granger_lag_select(f.table, "e", "U", opts)));
    const Run defaults = run({"lagselect", f.csv.string(), "--x", "e", "--y", "U", "--format", "csv"});
    REQUIRE(defaults.code == 0);
    CHECK(defaults.out == render_lag_scan(granger_lag_select(f.table, "e", "U"), {.format = Format::Csv}));
}

TEST_CASE("simulate subcommand is deterministic and parseable") {
    const std::vector<std::string> args{"simulate", "--p",        "2",           "--T",       "50", "--seed",
                                        "9",        "--own-y",    "0.5,-0.1",    "--cross-xy", "0.3,0.2"};
    const Run a = run(args);
    const Run b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    VarSpec spec;
    spec.p = 2;
    spec.T = 50;
    spec.seed = 9;
    spec.own_coeffs = {std::vector<double>{0.5, -0.1}, std::vector<double>{0.0, 0.0}};
    spec.cross_coeffs = {std::vector<double>{0.3, 0.2}, std::vector<double>{0.0, 0.0}};
    CHECK(parse_csv(a.out) == simulate(spec));

    CHECK(run({"simulate", "--own-y", "1.2"}).code == 1);
    CHECK(run({"simulate", "--p", "2", "--own-y", "0.5"}).code == 2);
    CHECK(run({"simulate", "--own-y", "0.5,abc"}).code == 2);
}

TEST_CASE("usage and data errors") {
    const auto& f = fixture();
    const Run bogus = run({"test", f.csv.string(), "--x", "e", "--y", "bogus"});
    CHECK(bogus.code == 2);
    CHECK(bogus.err.find("bogus") != std::string::npos);
    CHECK(run({"test", f.csv.string(), "--x", "e", "--y", "U", "--lag", "0"}).code == 2);
    CHECK(run({"test", f.csv.string(), "--x", "e", "--y", "U", "--lag", "x"}).code == 2);
    CHECK(run({"search", f.csv.string(), "--lags", "3:1"}).code == 2);
    CHECK(run({"search", f.csv.string(), "--columns", "e"}).code == 2);
    CHECK(run({"test", f.csv.string(), "--x", "e", "--y", "U", "--alpha", "2"}).code == 2);
    CHECK(run({"test", f.csv.string(), "--x", "e", "--y", "U", "--test", "Chisq"}).code == 2);
    CHECK(run({"test", f.csv.string(), "--x", "e", "--y", "U", "--format", "svg"}).code == 2);
    CHECK(run({"test", f.csv.string(), "--x", "e", "--y", "U", "--unknown-flag"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);

    const Run missing = run({"test", "/no/such/file.csv", "--x", "e", "--y", "U"});
    CHECK(missing.code == 1);
    CHECK(missing.err.find("/no/such/file.csv") != std::string::npos);
    const Run too_long = run({"test", f.csv.string(), "--x", "e", "--y", "U", "--lag", "60"});
    CHECK(too_long.code == 1);
    CHECK(too_long.err.find("lag 60") != std::string::npos);
    CHECK(run({"test", f.csv.string(), "--x", "e", "--y", "U", "--out", "/no/such/dir/o.txt"}).code == 1);
}

TEST_CASE("help lists defaults") {
    const Run test_help = run({"test", "--help"});
    CHECK(test_help.code == 0);
    CHECK(test_help.out.find("--lag") != std::string::npos);
    CHECK(test_help.out.find("[1]") != std::string::npos);
    CHECK(test_help.out.find("[0.05]") != std::string::npos);
    const Run search_help = run({"search", "--help"});
    CHECK(search_help.out.find("--include-insignificant") != std::string::npos);
    CHECK(search_help.out.find("[false]") != std::string::npos);
    CHECK(search_help.out.find("--threads") != std::string::npos);
    const Run lag_help = run({"lagselect", "--help"});
    CHECK(lag_help.out.find("[1:4]") != std::string::npos);
    CHECK(run({"simulate", "--help"}).code == 0);
    CHECK(run({"--help"}).out.find("lagselect") != std::string::npos);
}
