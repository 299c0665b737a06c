#pragma once

#include <stdexcept>
#include <string>

namespace granger {

/// Failure categories raised across the library. The CLI maps these onto
/// exit codes, so keep the list closed.
enum class ErrorKind {
    FileNotFound,
    ParseError,
    EmptyTable,
    RaggedRows,
    UnknownColumn,
    InvalidLag,
    InsufficientData,
    RankDeficient,
    ConstantSeries,
    LengthMismatch,
    PerfectFit,
    InvalidStatistic,
    InvalidArgument,
    NonConvergence,
    UnsupportedTest,
    TooFewColumns,
    InvalidProbability,
    SingularCovariance,
    NonStationarySpec,
    UnsupportedFormat,
    IOError,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace granger
