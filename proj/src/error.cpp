#include "dftalg/error.hpp"

namespace dftalg {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DegenerateDimension: return "DegenerateDimension";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::UnsupportedNormalization: return "UnsupportedNormalization";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

void require_dimension(int n) {
  if (n < 3) {
    throw Error(ErrorCode::DegenerateDimension,
                "N must be ≥ 3 (got " + std::to_string(n) + ")");
  }
}

}  // namespace dftalg
