#include "granger/error.hpp"

namespace granger {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::FileNotFound: return "FileNotFound";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::EmptyTable: return "EmptyTable";
        case ErrorKind::RaggedRows: return "RaggedRows";
        case ErrorKind::UnknownColumn: return "UnknownColumn";
        case ErrorKind::InvalidLag: return "InvalidLag";
        case ErrorKind::InsufficientData: return "InsufficientData";
        case ErrorKind::RankDeficient: return "RankDeficient";
        case ErrorKind::ConstantSeries: return "ConstantSeries";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::PerfectFit: return "PerfectFit";
        case ErrorKind::InvalidStatistic: return "InvalidStatistic";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::NonConvergence: return "NonConvergence";
        case ErrorKind::UnsupportedTest: return "UnsupportedTest";
        case ErrorKind::TooFewColumns: return "TooFewColumns";
        case ErrorKind::InvalidProbability: return "InvalidProbability";
        case ErrorKind::SingularCovariance: return "SingularCovariance";
        case ErrorKind::NonStationarySpec: return "NonStationarySpec";
        case ErrorKind::UnsupportedFormat: return "UnsupportedFormat";
        case ErrorKind::IOError: return "IOError";
    }
    return "Unknown";
}

}  // namespace granger
