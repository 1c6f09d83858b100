#include "lorenz/error.hpp"

namespace lorenz {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonConvex: return "NonConvex";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::BadEndpoints: return "BadEndpoints";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::OutsideRegion: return "OutsideRegion";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::EmptySample: return "EmptySample";
    case ErrorCode::ZeroMean: return "ZeroMean";
    case ErrorCode::NegativeIncome: return "NegativeIncome";
    case ErrorCode::NotIntegrable: return "NotIntegrable";
    case ErrorCode::IntegrabilityError: return "IntegrabilityError";
    case ErrorCode::BadModel: return "BadModel";
    case ErrorCode::TooFewDraws: return "TooFewDraws";
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::MissingColumn: return "MissingColumn";
    case ErrorCode::NoValidRows: return "NoValidRows";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace lorenz
