#pragma once

#include <gmpxx.h>

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "dftalg/polynomial.hpp"

namespace dftalg {

// Smallest M with q = exp(2 pi i/N), q^{1/2} and i all in Q(zeta_M): lcm(4, 2N).
unsigned field_order_for(int n);

/// The cyclotomic field Q(zeta_M). Instances are interned per order and
/// immutable, so scalars only carry a pointer.
class CycloField {
 public:
  static std::shared_ptr<const CycloField> get(unsigned order);

  unsigned order() const noexcept { return order_; }
  unsigned degree() const noexcept { return degree_; }
  const IntegerPoly& modulus() const noexcept { return modulus_int_; }
  const RationalPoly& modulus_q() const noexcept { return modulus_; }

  // Reduced representation of zeta_M^k, any integer k.
  const RationalPoly& zeta_power(long long k) const;

  explicit CycloField(unsigned order);

 private:
  unsigned order_;
  unsigned degree_;
  IntegerPoly modulus_int_;
  RationalPoly modulus_;
  std::vector<RationalPoly> powers_;  // zeta^j for j in [0, M)
};

using FieldPtr = std::shared_ptr<const CycloField>;

/// Element of Q(zeta_M) stored as a polynomial in zeta_M of degree < phi(M),
/// reduced modulo the M-th cyclotomic polynomial. The representation is
/// canonical, so equality and the zero test are exact.
class CycloScalar {
 public:
  CycloScalar(FieldPtr field, RationalPoly coeffs);

  static CycloScalar zero(FieldPtr field);
  static CycloScalar one(FieldPtr field);
  static CycloScalar rational(FieldPtr field, const mpq_class& value);
  // zeta_M^k
  static CycloScalar zeta(FieldPtr field, long long k);
  // exp(2 pi i k / m); m must divide the field order.
  static CycloScalar root_of_unity(FieldPtr field, long long k, long long m);
  static CycloScalar imag_unit(FieldPtr field);

  unsigned order() const noexcept { return field_->order(); }
  const FieldPtr& field() const noexcept { return field_; }
  const RationalPoly& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;  // only the constant coefficient may be nonzero

  CycloScalar& operator+=(const CycloScalar& rhs);
  CycloScalar& operator-=(const CycloScalar& rhs);
  CycloScalar& operator*=(const CycloScalar& rhs);
  CycloScalar& operator*=(const mpq_class& rhs);

  CycloScalar operator-() const;
  CycloScalar conj() const;
  // Throws DivisionByZero on zero.
  CycloScalar inv() const;
  CycloScalar pow(long long e) const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

  friend bool operator==(const CycloScalar& a, const CycloScalar& b);

 private:
  void check_same_field(const CycloScalar& rhs) const;

  FieldPtr field_;
  RationalPoly coeffs_;
};

inline CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
inline CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
inline CycloScalar operator*(CycloScalar a, const CycloScalar& b) { return a *= b; }
inline CycloScalar operator*(CycloScalar a, const mpq_class& b) { return a *= b; }
inline CycloScalar operator*(const mpq_class& b, CycloScalar a) { return a *= b; }
inline CycloScalar operator/(const CycloScalar& a, const CycloScalar& b) { return a * b.inv(); }

inline CycloScalar conj(const CycloScalar& a) { return a.conj(); }

// s_n = (q^n - q^-n) / (2i), exact in Q(zeta_M) with M = field_order_for(N).
CycloScalar s_of(int n, int dimension);

}  // namespace dftalg
