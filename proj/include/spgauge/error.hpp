#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spgauge {

enum class ErrorCode {
  DivisionByZero,
  ZeroArgument,
  NotPrime,
  EvenPrime,
  AllZero,
  OutOfRange,
  Unsupported,
  ParseError,
  DimensionMismatch,
  NonIntegralGenerator,
  Unpinned,
  GuardFailed,
  OddRank,
  BadDimension,
  BadQuery,
  Internal,
};

constexpr std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::EvenPrime: return "EvenPrime";
    case ErrorCode::AllZero: return "AllZero";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonIntegralGenerator: return "NonIntegralGenerator";
    case ErrorCode::Unpinned: return "Unpinned";
    case ErrorCode::GuardFailed: return "GuardFailed";
    case ErrorCode::OddRank: return "OddRank";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::BadQuery: return "BadQuery";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spgauge
