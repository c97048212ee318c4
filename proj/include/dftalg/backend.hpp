#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

#include "dftalg/cyclo.hpp"

namespace dftalg {

using FloatComplex = std::complex<double>;

struct ScalarBackend {
  enum class Mode { Exact, Float };

  Mode mode = Mode::Float;
  unsigned order = 0;  // cyclotomic order for Exact, 0 for Float

  static ScalarBackend exact(unsigned order) { return {Mode::Exact, order}; }
  static ScalarBackend floating() { return {Mode::Float, 0}; }

  bool is_exact() const noexcept { return mode == Mode::Exact; }
  const char* name() const noexcept { return is_exact() ? "exact" : "float"; }
};

/// Exact arithmetic in Q(zeta_M), M = lcm(4, 2N).
class ExactField {
 public:
  using scalar = CycloScalar;
  static constexpr bool is_exact = true;

  explicit ExactField(int dimension);

  int dimension() const noexcept { return dimension_; }
  const FieldPtr& field() const noexcept { return field_; }
  ScalarBackend backend() const { return ScalarBackend::exact(field_->order()); }

  scalar zero() const { return CycloScalar::zero(field_); }
  scalar one() const { return CycloScalar::one(field_); }
  scalar integer(long long v) const { return CycloScalar::rational(field_, mpq_class(static_cast<long>(v))); }
  scalar rational(long long num, long long den) const;
  scalar imag_unit() const { return CycloScalar::imag_unit(field_); }
  // exp(2 pi i k / m)
  scalar root(long long k, long long m) const { return CycloScalar::root_of_unity(field_, k, m); }

  static bool is_zero(const scalar& s) { return s.is_zero(); }
  static scalar conj(const scalar& s) { return s.conj(); }
  static scalar inv(const scalar& s) { return s.inv(); }
  static FloatComplex to_complex(const scalar& s) { return s.to_complex(); }

 private:
  int dimension_;
  FieldPtr field_;
};

/// Double precision complex arithmetic with the same interface.
class FloatField {
 public:
  using scalar = FloatComplex;
  static constexpr bool is_exact = false;

  explicit FloatField(int dimension);

  int dimension() const noexcept { return dimension_; }
  ScalarBackend backend() const { return ScalarBackend::floating(); }

  scalar zero() const { return {0.0, 0.0}; }
  scalar one() const { return {1.0, 0.0}; }
  scalar integer(long long v) const { return {static_cast<double>(v), 0.0}; }
  scalar rational(long long num, long long den) const;
  scalar imag_unit() const { return {0.0, 1.0}; }
  scalar root(long long k, long long m) const;

  static bool is_zero(const scalar& s) { return s == scalar{}; }
  static scalar conj(const scalar& s) { return std::conj(s); }
  static scalar inv(const scalar& s);
  static FloatComplex to_complex(const scalar& s) { return s; }

 private:
  int dimension_;
};

// Rejects NaN/Inf.
void require_finite(const FloatComplex& z, const char* what);

}  // namespace dftalg
