#include "dftalg/structure_constants.hpp"

namespace dftalg {

template <class Field>
StructureConstants<typename Field::scalar> structure_constants(const OperatorSet<Field>& ops) {
  using S = typename Field::scalar;
  const Field& f = ops.field();
  const S one = f.one();
  const S q = ops.q(1);
  const S qinv = ops.q(-1);
  const S s1 = ops.s(1);
  const S c1 = ops.c(1);
  const auto k = [&f](long long v) { return f.integer(v); };

  const S one_minus_q_sq = (one - q) * (one - q);
  const S one_plus_q_sq = (one + q) * (one + q);
  const S q_diff_sq = (q - qinv) * (q - qinv);
  const S one_plus_q2 = one + q * q;
  const S q_sum = q + qinv;
  const S q4 = ops.q(4);

  StructureConstants<S> sc{
      .n = ops.dimension(),
      .degenerate = ops.dimension() == 4,
      .r1 = one_minus_q_sq * Field::inv(one_plus_q_sq),
      .r2 = k(-4) * one_plus_q2 * q_diff_sq * Field::inv(one_plus_q_sq),
      .g1 = k(16) * s1 * s1,
      .g2 = k(-16) * c1 * (one + c1) * (one - c1) * (one - c1),
      .g3 = k(64) * (one + c1) * (one - c1) * (one - c1) * (k(3) * c1 + one),
      .rho2 = k(4) * q_diff_sq,
      .rho2_trig = k(-16) * s1 * s1,
  };

  if (!sc.degenerate) {
    const S inv_one_plus_q2 = Field::inv(one_plus_q2);
    const S inv_c1 = Field::inv(c1);
    const S q_minus_1_4 = (q - one) * (q - one) * (q - one) * (q - one);
    const S q_sum_4 = q_sum * q_sum * q_sum * q_sum;
    const S inv_q4 = Field::inv(q4);

    sc.beta1 = one_minus_q_sq * inv_one_plus_q2;
    sc.beta2 = k(-4) * q_diff_sq * Field::inv(q_sum);
    sc.rho1 = -(one_minus_q_sq * inv_one_plus_q2);
    sc.rho3 = q_sum_4 * one_plus_q_sq * inv_one_plus_q2;
    const S quartic = k(5) * q4 + k(2) * ops.q(3) + k(2) * ops.q(2) + k(2) * q + k(5);
    sc.rho4 = k(-4) * one_plus_q_sq * quartic * q_minus_1_4 * inv_one_plus_q2 * inv_q4;

    sc.rho1_trig = inv_c1 - one;
    sc.rho3_trig = k(16) * s1 * s1 * s1 * s1 * (one + inv_c1);
    sc.rho4_trig = k(64) * s1 * s1 * (one - inv_c1) * (k(5) * c1 * c1 + c1 - k(2));

    sc.rho3_rescaled = one_plus_q_sq * (one + q4) * q_minus_1_4 * inv_one_plus_q2 * inv_q4;
  }
  return sc;
}

template StructureConstants<CycloScalar> structure_constants(const OperatorSet<ExactField>&);
template StructureConstants<FloatComplex> structure_constants(const OperatorSet<FloatField>&);

}  // namespace dftalg
