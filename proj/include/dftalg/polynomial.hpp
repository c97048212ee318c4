#pragma once

#include <gmpxx.h>

#include <vector>

namespace dftalg {

// Dense polynomial with rational coefficients, lowest degree first. The zero
// polynomial is the empty vector; all routines return trimmed results.
using RationalPoly = std::vector<mpq_class>;
using IntegerPoly = std::vector<mpz_class>;

void trim(RationalPoly& p);
int degree(const RationalPoly& p);  // -1 for the zero polynomial

RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b);
RationalPoly poly_sub(const RationalPoly& a, const RationalPoly& b);

struct PolyDivision {
  RationalPoly quotient;
  RationalPoly remainder;
};
PolyDivision poly_divmod(const RationalPoly& num, const RationalPoly& den);

// Bezout cofactor: returns (g, s) with s*a = g (mod m), g monic gcd(a, m).
struct HalfGcd {
  RationalPoly gcd;
  RationalPoly cofactor;
};
HalfGcd poly_half_gcd(const RationalPoly& a, const RationalPoly& m);

// Phi_M(x), by dividing x^M - 1 by Phi_d for every proper divisor d of M.
IntegerPoly cyclotomic_polynomial(unsigned order);

unsigned euler_phi(unsigned order);

}  // namespace dftalg
