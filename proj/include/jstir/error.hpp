#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jstir {

enum class ErrorCode {
  kNonIntegerCoefficient,
  kZeroPolynomial,
  kIndexOutOfRange,
  kCrossCheckFailure,
  kTooLarge,
  kInvalidSubset,
  kNotAnExtension,
  kNotAStirlingWord,
  kInvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonIntegerCoefficient: return "NonIntegerCoefficient";
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kCrossCheckFailure: return "CrossCheckFailure";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kInvalidSubset: return "InvalidSubset";
    case ErrorCode::kNotAnExtension: return "NotAnExtension";
    case ErrorCode::kNotAStirlingWord: return "NotAStirlingWord";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace jstir
