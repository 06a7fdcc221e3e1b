#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fishburn {

enum class ErrorCode {
  Empty,
  NotCayley,
  NotEndofunction,
  NotFishburn,
  NotModasc,
  InvalidCover,
  InvalidBurge,
  InvalidMatrix,
  InvalidPoset,
  NotAPartialOrder,
  NotTwoPlusTwoFree,
  Overflow,
  LimitExceeded,
  Parse,
  Internal,
};

/// Stable upper-case name of an error code, e.g. "NOT_CAYLEY".
std::string_view error_name(ErrorCode code) noexcept;

/// The single exception type thrown by the library. what() reads
/// "<NAME>: <detail>" so the violated invariant is always visible.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace fishburn
