#include "dftalg/backend.hpp"

#include <cmath>
#include <numbers>

#include "dftalg/error.hpp"

namespace dftalg {

ExactField::ExactField(int dimension)
    : dimension_(dimension), field_(CycloField::get(field_order_for(dimension))) {}

ExactField::scalar ExactField::rational(long long num, long long den) const {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  mpq_class v(static_cast<long>(num), static_cast<long>(den));
  v.canonicalize();
  return CycloScalar::rational(field_, v);
}

FloatField::FloatField(int dimension) : dimension_(dimension) { require_dimension(dimension); }

FloatField::scalar FloatField::rational(long long num, long long den) const {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  return {static_cast<double>(num) / static_cast<double>(den), 0.0};
}

FloatField::scalar FloatField::root(long long k, long long m) const {
  if (m <= 0) throw Error(ErrorCode::InvalidArgument, "root of unity order must be positive");
  const long long r = ((k % m) + m) % m;
  // exact values on the axes keep structural zeros exact
  if (4 * r % m == 0) {
    switch (4 * r / m) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(m);
  return std::polar(1.0, angle);
}

FloatField::scalar FloatField::inv(const scalar& s) {
  if (s == scalar{}) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return 1.0 / s;
}

void require_finite(const FloatComplex& z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " is not finite");
  }
}

}  // namespace dftalg
