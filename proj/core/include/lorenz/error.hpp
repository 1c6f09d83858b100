#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lorenz {

enum class ErrorCode {
  // curve construction
  NonConvex,
  NotMonotone,
  OutOfRange,
  BadEndpoints,
  // arguments
  DomainError,
  BadParams,
  Degenerate,
  OutsideRegion,
  GridMismatch,
  // samples and models
  EmptySample,
  ZeroMean,
  NegativeIncome,
  NotIntegrable,
  IntegrabilityError,
  BadModel,
  TooFewDraws,
  // ingestion and output
  FileNotFound,
  MissingColumn,
  NoValidRows,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries a code so callers (the CLI in
// particular) can map domain errors to exit statuses without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace lorenz
