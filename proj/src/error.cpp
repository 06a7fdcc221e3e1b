#include "fishburn/error.hpp"

namespace fishburn {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Empty: return "EMPTY";
    case ErrorCode::NotCayley: return "NOT_CAYLEY";
    case ErrorCode::NotEndofunction: return "NOT_ENDOFUNCTION";
    case ErrorCode::NotFishburn: return "NOT_FISHBURN";
    case ErrorCode::NotModasc: return "NOT_MODASC";
    case ErrorCode::InvalidCover: return "INVALID_COVER";
    case ErrorCode::InvalidBurge: return "INVALID_BURGE";
    case ErrorCode::InvalidMatrix: return "INVALID_MATRIX";
    case ErrorCode::InvalidPoset: return "INVALID_POSET";
    case ErrorCode::NotAPartialOrder: return "NOT_A_PARTIAL_ORDER";
    case ErrorCode::NotTwoPlusTwoFree: return "NOT_TWO_PLUS_TWO_FREE";
    case ErrorCode::Overflow: return "OVERFLOW";
    case ErrorCode::LimitExceeded: return "LIMIT_EXCEEDED";
    case ErrorCode::Parse: return "PARSE_ERROR";
    case ErrorCode::Internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

}  // namespace fishburn
