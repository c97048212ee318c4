#include "dftalg/polynomial.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "dftalg/error.hpp"

namespace dftalg {

void trim(RationalPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const RationalPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b) {
  if (a.empty() || b.empty()) return {};
  RationalPoly out(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

RationalPoly poly_sub(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly out(std::max(a.size(), b.size()), mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

PolyDivision poly_divmod(const RationalPoly& num, const RationalPoly& den) {
  const int dd = degree(den);
  if (dd < 0) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  RationalPoly rem = num;
  trim(rem);
  const int dn = degree(rem);
  if (dn < dd) return {{}, rem};
  RationalPoly quot(dn - dd + 1, mpq_class(0));
  const mpq_class lead = den[dd];
  for (int i = dn; i >= dd; --i) {
    if (rem[i] == 0) continue;
    mpq_class f = rem[i] / lead;
    quot[i - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * den[j];
  }
  trim(rem);
  trim(quot);
  return {std::move(quot), std::move(rem)};
}

HalfGcd poly_half_gcd(const RationalPoly& a, const RationalPoly& m) {
  // Invariant: s0*a = r0 (mod m), s1*a = r1 (mod m).
  RationalPoly r0 = m, r1 = a;
  RationalPoly s0, s1{mpq_class(1)};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    auto [quot, rem] = poly_divmod(r0, r1);
    RationalPoly s2 = poly_sub(s0, poly_mul(quot, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (!r0.empty()) {
    const mpq_class lead = r0.back();
    for (auto& c : r0) c /= lead;
    for (auto& c : s0) c /= lead;
  }
  return {std::move(r0), std::move(s0)};
}

namespace {

IntegerPoly compute_cyclotomic(unsigned order) {
  RationalPoly p(order + 1, mpq_class(0));
  p[0] = -1;
  p[order] = 1;
  for (unsigned d = 1; d < order; ++d) {
    if (order % d != 0) continue;
    IntegerPoly sub = cyclotomic_polynomial(d);
    RationalPoly subq(sub.begin(), sub.end());
    auto [quot, rem] = poly_divmod(p, subq);
    if (!rem.empty()) throw Error(ErrorCode::InternalError, "inexact cyclotomic division");
    p = std::move(quot);
  }
  IntegerPoly out;
  out.reserve(p.size());
  for (const auto& c : p) {
    if (c.get_den() != 1) throw Error(ErrorCode::InternalError, "non-integral cyclotomic coefficient");
    out.push_back(c.get_num());
  }
  return out;
}

}  // namespace

IntegerPoly cyclotomic_polynomial(unsigned order) {
  if (order == 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic order must be >= 1");
  static std::mutex mutex;
  static std::map<unsigned, IntegerPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(order); it != cache.end()) return it->second;
  }
  IntegerPoly result = compute_cyclotomic(order);
  std::lock_guard lock(mutex);
  return cache.emplace(order, std::move(result)).first->second;
}

unsigned euler_phi(unsigned order) {
  unsigned result = order;
  unsigned m = order;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

}  // namespace dftalg
