#include <gtest/gtest.h>

#include <cmath>

#include "dftalg/error.hpp"
#include "dftalg/operators.hpp"
#include "dftalg/relations.hpp"

using namespace dftalg;

namespace {

double max_abs_diff(const FloatMatrix& a, const FloatMatrix& b) { return inf_norm(a - b); }

}  // namespace

TEST(Dft, ExactEntryAndFloatEntry) {
  const ExactOperators e3(3);
  EXPECT_EQ(e3.dft(false)(1, 2), e3.q(2));
  const FloatOperators f4(4);
  const auto phi = f4.dft(true);
  EXPECT_NEAR(std::abs(phi(1, 1) - FloatComplex(0, 0.5)), 0.0, 1e-15);
}

TEST(Dft, UnitaryForManyN) {
  for (int n = 3; n <= 24; ++n) {
    const FloatOperators ops(n);
    const auto phi = ops.dft(true);
    EXPECT_LE(max_abs_diff(phi * phi.adjoint(), ops.identity()), 1e-12) << n;
  }
}

TEST(Dft, ExactNormalizedUnsupported) {
  try {
    ExactOperators(5).dft(true);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedNormalization);
  }
}

TEST(Dimension, RejectsSmallN) {
  EXPECT_THROW(ExactOperators(2), Error);
  EXPECT_THROW(FloatOperators(0), Error);
}

TEST(Intertwiner, ZeroParametersGiveZeroMatrix) {
  const ExactOperators ops(6);
  const auto z = ops.field().zero();
  EXPECT_TRUE(is_zero_matrix(ops.intertwiner_A(z, z)));
}

TEST(Intertwiner, CanonicalChoice) {
  for (int n = 3; n <= 9; ++n) {
    const ExactOperators ops(n);
    const auto a = ops.intertwiner_A(-ops.i(), ops.field().zero());
    EXPECT_EQ(a, ops.canonical_A()) << n;
    const auto two = ops.field().integer(2);
    for (int k = 0; k < n; ++k) {
      EXPECT_EQ(a(k, k), two * ops.s(k));
      EXPECT_EQ(a((k + 1) % n, k), ops.field().integer(-1));
      EXPECT_EQ(a(k, (k + 1) % n), ops.field().one());
    }
  }
}

TEST(Intertwiner, TracelessAndSplitIntoXY) {
  for (int n = 3; n <= 12; ++n) {
    const ExactOperators ops(n);
    const auto a = ops.canonical_A();
    const auto at = ops.canonical_Adag();
    EXPECT_TRUE(a.trace().is_zero()) << n;
    EXPECT_EQ(at, a.adjoint());
    EXPECT_EQ(a - a.transpose(), ops.field().integer(2) * ops.i() * ops.momentum_Y());
    const auto half = ops.field().rational(1, 2);
    EXPECT_EQ(ops.position_X(), half * (a + at));
    EXPECT_EQ(ops.momentum_Y(), (ops.i() * ops.field().integer(2)).inv() * (a - at));
  }
}

TEST(Intertwiner, N4DiagonalEntry) {
  const FloatOperators ops(4);
  EXPECT_NEAR(std::abs(ops.canonical_A()(1, 1) - FloatComplex(2, 0)), 0.0, 1e-14);
}

TEST(PositionMomentum, N3Values) {
  const FloatOperators ops(3);
  const auto x = ops.position_X();
  EXPECT_NEAR(x(0, 0).real(), 0.0, 1e-15);
  EXPECT_NEAR(x(1, 1).real(), std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(x(2, 2).real(), -std::sqrt(3.0), 1e-14);
}

TEST(PositionMomentum, YActsAsShiftDifference) {
  const int n = 7;
  const ExactOperators ops(n);
  const auto y = ops.momentum_Y();
  for (int l = 0; l < n; ++l) {
    for (int k = 0; k < n; ++k) {
      auto expected = ops.field().zero();
      if (k == (l + 1) % n) expected += ops.i();
      if (k == (l + n - 1) % n) expected -= ops.i();
      EXPECT_EQ(y(k, l), expected);
    }
  }
}

TEST(Commutator, MatchesXYFormAndClosedForm) {
  for (int n = 3; n <= 10; ++n) {
    const ExactOperators ops(n);
    const auto c = ops.commutator_C();
    const auto x = ops.position_X(), y = ops.momentum_Y();
    EXPECT_EQ(c, ops.field().integer(-2) * ops.i() * commutator(x, y)) << n;
    EXPECT_EQ(c, ops.commutator_C_closed_form()) << n;
    EXPECT_EQ(c.transpose(), c);
    for (int k = 0; k < n; ++k) EXPECT_TRUE(c(k, k).is_zero());
  }
  const ExactOperators ops(3);
  EXPECT_EQ(ops.commutator_C()(0, 1), ops.field().integer(4) * ops.s(1));
}

TEST(CyclicZ, ActionOnBasisAndHermitian) {
  for (int n = 3; n <= 9; ++n) {
    const ExactOperators ops(n);
    const auto z = ops.cyclic_Z();
    for (int l = 0; l < n; ++l) {
      for (int k = 0; k < n; ++k) {
        auto expected = ops.field().zero();
        if (k == (l + 1) % n) expected += ops.p() * ops.q(l);
        if (k == (l + n - 1) % n) expected += ops.p() * ops.q(-l);
        EXPECT_EQ(z(k, l), expected) << n;
      }
    }
    EXPECT_EQ(z.adjoint(), z);
    const auto sim = ops.gauge_S_inverse() * z * ops.gauge_S();
    const auto sign = ops.field().integer(n % 2 == 0 ? 1 : -1);
    EXPECT_EQ(sim, sign * ops.circulant_Ztilde()) << n;
  }
}

TEST(Heun, WEqualsCommutatorC) {
  for (int n = 3; n <= 9; ++n) {
    const ExactOperators ops(n);
    EXPECT_EQ(ops.heun_W(), ops.commutator_C());
    const auto z = ops.field().zero();
    const auto two_i = ops.field().integer(2) * ops.i();
    EXPECT_EQ(ops.heun_general_W(z, -two_i, two_i, z, z), ops.heun_W());
  }
}

TEST(Reflection, InvolutionAndAction) {
  const ExactOperators ops(5);
  const auto pd = ops.reflection_Pd();
  EXPECT_EQ(pd * pd, ops.identity());
  EXPECT_EQ(pd(3, 2), ops.field().one());
  EXPECT_TRUE(pd(2, 2).is_zero());
}

TEST(NamedOperators, AllIdsResolveAndUnknownRejected) {
  const FloatOperators ops(5);
  for (const auto& id : operator_ids()) EXPECT_EQ(named_operator(ops, id).size(), 5u) << id;
  EXPECT_THROW(named_operator(ops, "nope"), Error);
}

TEST(Backends, ExactAndFloatAgree) {
  for (int n = 3; n <= 24; ++n) {
    const ExactOperators e(n);
    const FloatOperators f(n);
    for (const auto& id : operator_ids()) {
      auto fe = to_float(named_operator(e, id));
      auto ff = named_operator(f, id);
      if (id == "phi") ff = std::sqrt(static_cast<double>(n)) * ff;
      EXPECT_LE(max_abs_diff(fe, ff), 1e-11 * (1 + inf_norm(ff))) << id << " N=" << n;
    }
  }
}

TEST(StructureConstants, DegenerateOnlyAtFour) {
  for (int n = 3; n <= 12; ++n) {
    const auto sc = structure_constants(ExactOperators(n));
    EXPECT_EQ(sc.degenerate, n == 4);
    EXPECT_EQ(sc.beta1.has_value(), n != 4);
    EXPECT_EQ(sc.rho1.has_value(), n != 4);
  }
}

TEST(StructureConstants, TrigonometricRewrites) {
  for (int n = 3; n <= 16; ++n) {
    if (n == 4) continue;
    const auto sc = structure_constants(FloatOperators(n));
    const double s1 = std::sin(2 * M_PI / n), c1 = std::cos(2 * M_PI / n);
    EXPECT_NEAR(std::abs(sc.g1 - 16 * s1 * s1), 0.0, 1e-12) << n;
    EXPECT_NEAR(std::abs(sc.rho2 + 16 * s1 * s1), 0.0, 1e-12) << n;
    EXPECT_NEAR(std::abs(*sc.rho1 - (1 / c1 - 1)), 0.0, 1e-12) << n;
  }
  const auto sc6 = structure_constants(FloatOperators(6));
  EXPECT_NEAR(std::abs(*sc6.beta2 - 12.0), 0.0, 1e-12);
}
