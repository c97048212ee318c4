#pragma once

#include <optional>

#include "dftalg/operators.hpp"

namespace dftalg {

/// Coefficients of the cubic, Askey-Wilson-Heun and Casimir relations.
/// Members with a 1/(1+q^2), 1/(q+q^-1) or 1/c_1 factor are empty when
/// `degenerate` (N = 4); the others are always present.
template <class S>
struct StructureConstants {
  int n = 0;
  bool degenerate = false;

  std::optional<S> beta1;  // (1-q)^2/(1+q^2)
  std::optional<S> beta2;  // -4 (q-q^-1)^2/(q+q^-1)
  S r1;                    // (1-q)^2/(1+q)^2
  S r2;                    // -4 (1+q^2)(q-q^-1)^2/(1+q)^2
  S g1;                    // 16 s_1^2
  S g2;                    // -16 c_1 (1+c_1)(1-c_1)^2
  S g3;                    // 64 (1+c_1)(1-c_1)^2 (3c_1+1)
  std::optional<S> rho1;   // -(1-q)^2/(1+q^2)
  S rho2;                  // 4 (q-q^-1)^2
  std::optional<S> rho3;   // (q+q^-1)^4 (1+q)^2/(1+q^2)
  std::optional<S> rho4;   // -4 (1+q)^2 (5q^4+2q^3+2q^2+2q+5)(q-1)^4/((q^2+1) q^4)

  // Trigonometric rewrites given alongside the rational forms.
  std::optional<S> rho1_trig;  // 1/c_1 - 1
  S rho2_trig;                 // -16 s_1^2
  std::optional<S> rho3_trig;  // 16 s_1^4 (1 + 1/c_1)
  std::optional<S> rho4_trig;  // 64 s_1^2 (1 - 1/c_1)(5c_1^2 + c_1 - 2)

  // rho3 that makes the Heun Casimir central for the generator pair (2X, W):
  // (1+q)^2 (1+q^4)(q-1)^4 / ((1+q^2) q^4)
  std::optional<S> rho3_rescaled;
};

template <class Field>
StructureConstants<typename Field::scalar> structure_constants(const OperatorSet<Field>& ops);

}  // namespace dftalg
