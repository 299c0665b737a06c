#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace granger {

/// Parse "3", "1:8" (inclusive) or "1,2,4" into a strictly increasing list of
/// positive lags. Throws InvalidLag on anything else.
std::vector<std::size_t> parse_lag_spec(std::string_view text);

/**
 * Entry point for the `granger` tool.
 *
 * Subcommands: test, search, lagselect, simulate. Returns 0 on success, 2 on
 * usage errors (bad flags, lag specs, unknown columns, unsupported formats)
 * and 1 on data or computation errors. Results go to `out` unless --out is
 * given; diagnostics go to `err`.
 */
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload taking the arguments after the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace granger
