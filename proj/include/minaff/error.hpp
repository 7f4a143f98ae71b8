#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace minaff {

enum class ErrorCode {
  UnsupportedType,
  IndexOutOfRange,
  NotDominant,
  NotDecomposable,
  WindowTooSmall,
  NoFactorization,
  NotIDominant,
  UnsupportedSupport,
  DisconnectedSubdiagram,
  ZeroWeight,
  InvalidArgument,
  Overflow,
};

/// Stable machine-readable name, used verbatim in CLI error reports.
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace minaff
