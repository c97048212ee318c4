#pragma once

#include <stdexcept>
#include <string>

namespace dftalg {

enum class ErrorCode {
  DegenerateDimension,
  DivisionByZero,
  OrderMismatch,
  UnsupportedNormalization,
  NotHermitian,
  InvalidArgument,
  InternalError,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Throws DegenerateDimension for N < 3.
void require_dimension(int n);

}  // namespace dftalg
