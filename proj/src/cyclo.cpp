#include "dftalg/cyclo.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "dftalg/error.hpp"

namespace dftalg {

unsigned field_order_for(int n) {
  require_dimension(n);
  return std::lcm(4u, 2u * static_cast<unsigned>(n));
}

CycloField::CycloField(unsigned order)
    : order_(order),
      degree_(euler_phi(order)),
      modulus_int_(cyclotomic_polynomial(order)),
      modulus_(modulus_int_.begin(), modulus_int_.end()) {
  powers_.reserve(order_);
  RationalPoly current(degree_, mpq_class(0));
  current[0] = 1;
  for (unsigned j = 0; j < order_; ++j) {
    powers_.push_back(current);
    // multiply by zeta, then reduce the single overflow coefficient
    RationalPoly next(degree_ + 1, mpq_class(0));
    for (unsigned i = 0; i < degree_; ++i) next[i + 1] = current[i];
    const mpq_class top = next[degree_];
    if (top != 0)
      for (unsigned i = 0; i <= degree_; ++i) next[i] -= top * modulus_[i];
    next.pop_back();
    current = std::move(next);
  }
}

std::shared_ptr<const CycloField> CycloField::get(unsigned order) {
  if (order == 0) throw Error(ErrorCode::InvalidArgument, "field order must be >= 1");
  static std::mutex mutex;
  static std::map<unsigned, std::shared_ptr<const CycloField>> registry;
  std::lock_guard lock(mutex);
  auto& slot = registry[order];
  if (!slot) slot = std::make_shared<const CycloField>(order);
  return slot;
}

const RationalPoly& CycloField::zeta_power(long long k) const {
  const long long m = order_;
  return powers_[static_cast<std::size_t>(((k % m) + m) % m)];
}

namespace {

// Reduces a polynomial of arbitrary degree modulo the monic modulus, in place,
// and pads to exactly `degree` coefficients.
void reduce(RationalPoly& p, const RationalPoly& modulus, unsigned degree) {
  for (std::size_t i = p.size(); i-- > degree;) {
    if (p[i] == 0) continue;
    const mpq_class top = p[i];
    const std::size_t shift = i - degree;
    for (unsigned j = 0; j <= degree; ++j) p[shift + j] -= top * modulus[j];
  }
  p.resize(degree, mpq_class(0));
}

}  // namespace

CycloScalar::CycloScalar(FieldPtr field, RationalPoly coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) throw Error(ErrorCode::InvalidArgument, "null cyclotomic field");
  reduce(coeffs_, field_->modulus_q(), field_->degree());
}

CycloScalar CycloScalar::zero(FieldPtr field) {
  return CycloScalar(std::move(field), {});
}

CycloScalar CycloScalar::one(FieldPtr field) {
  return rational(std::move(field), mpq_class(1));
}

CycloScalar CycloScalar::rational(FieldPtr field, const mpq_class& value) {
  return CycloScalar(std::move(field), RationalPoly{value});
}

CycloScalar CycloScalar::zeta(FieldPtr field, long long k) {
  RationalPoly p = field->zeta_power(k);
  return CycloScalar(std::move(field), std::move(p));
}

CycloScalar CycloScalar::root_of_unity(FieldPtr field, long long k, long long m) {
  const long long order = field->order();
  if (m <= 0 || order % m != 0) {
    throw Error(ErrorCode::OrderMismatch,
                "exp(2 pi i/" + std::to_string(m) + ") is not in Q(zeta_" +
                    std::to_string(order) + ")");
  }
  return zeta(std::move(field), k * (order / m));
}

CycloScalar CycloScalar::imag_unit(FieldPtr field) {
  return root_of_unity(std::move(field), 1, 4);
}

bool CycloScalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycloScalar::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

void CycloScalar::check_same_field(const CycloScalar& rhs) const {
  if (field_ != rhs.field_) {
    throw Error(ErrorCode::OrderMismatch,
                "cyclotomic order mismatch: " + std::to_string(order()) + " vs " +
                    std::to_string(rhs.order()));
  }
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& rhs) {
  check_same_field(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& rhs) {
  check_same_field(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CycloScalar& CycloScalar::operator*=(const CycloScalar& rhs) {
  check_same_field(rhs);
  const unsigned d = field_->degree();
  RationalPoly prod(2 * d - 1, mpq_class(0));
  bool any = false;
  for (unsigned i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (unsigned j = 0; j < d; ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
      any = true;
    }
  }
  if (!any) {
    for (auto& c : coeffs_) c = 0;
    return *this;
  }
  reduce(prod, field_->modulus_q(), d);
  coeffs_ = std::move(prod);
  return *this;
}

CycloScalar& CycloScalar::operator*=(const mpq_class& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

CycloScalar CycloScalar::operator-() const {
  CycloScalar out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycloScalar CycloScalar::conj() const {
  // zeta -> zeta^{-1}
  const unsigned d = field_->degree();
  RationalPoly out(d, mpq_class(0));
  for (unsigned j = 0; j < d; ++j) {
    if (coeffs_[j] == 0) continue;
    const RationalPoly& pw = field_->zeta_power(-static_cast<long long>(j));
    for (unsigned i = 0; i < d; ++i)
      if (pw[i] != 0) out[i] += coeffs_[j] * pw[i];
  }
  return CycloScalar(field_, std::move(out));
}

CycloScalar CycloScalar::inv() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in Q(zeta_M)");
  RationalPoly a = coeffs_;
  trim(a);
  auto [gcd, cofactor] = poly_half_gcd(a, field_->modulus_q());
  if (degree(gcd) != 0) {
    throw Error(ErrorCode::InternalError, "non-unit gcd with irreducible modulus");
  }
  return CycloScalar(field_, std::move(cofactor));
}

CycloScalar CycloScalar::pow(long long e) const {
  CycloScalar base = e < 0 ? inv() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  CycloScalar result = one(field_);
  while (k > 0) {
    if (k & 1ULL) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

std::complex<double> CycloScalar::to_complex() const {
  const long double two_pi = 2.0L * 3.141592653589793238462643383279502884L;
  const unsigned m = field_->order();
  long double re = 0.0L, im = 0.0L;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    // numerator and denominator separately keeps large rationals accurate
    const long double c = static_cast<long double>(coeffs_[j].get_num().get_d()) /
                          static_cast<long double>(coeffs_[j].get_den().get_d());
    const long double angle = two_pi * static_cast<long double>(j) / static_cast<long double>(m);
    re += c * std::cos(angle);
    im += c * std::sin(angle);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

std::string CycloScalar::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[j].get_str();
    if (j == 1) os << "*z";
    if (j > 1) os << "*z^" << j;
  }
  if (first) os << "0";
  os << " [Q(z_" << order() << ")]";
  return os.str();
}

bool operator==(const CycloScalar& a, const CycloScalar& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

CycloScalar s_of(int n, int dimension) {
  auto field = CycloField::get(field_order_for(dimension));
  CycloScalar diff = CycloScalar::root_of_unity(field, n, dimension) -
                     CycloScalar::root_of_unity(field, -n, dimension);
  // 1/(2i) = -i/2
  return diff * CycloScalar::imag_unit(field) * mpq_class(-1, 2);
}

}  // namespace dftalg
