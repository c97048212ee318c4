#include "dftalg/relations.hpp"

#include <algorithm>
#include <initializer_list>

#include "dftalg/error.hpp"
#include "dftalg/linalg_exact.hpp"

namespace dftalg {

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::ExactZero: return "ExactZero";
    case Verdict::ResidualNorm: return "ResidualNorm";
    case Verdict::Degenerate: return "Degenerate";
    case Verdict::Failed: return "Failed";
  }
  return "Unknown";
}

template <class S>
RelationReport judge(std::string id, int n, ScalarBackend backend, const SquareMatrix<S>& residual,
                     double scale) {
  RelationReport rep{std::move(id), n, backend, Verdict::Failed, inf_norm(residual), scale};
  if (backend.is_exact()) {
    rep.verdict = is_zero_matrix(residual) ? Verdict::ExactZero : Verdict::Failed;
  } else {
    const bool ok = rep.residual_inf_norm <= kFloatTolerance * std::max(1.0, scale);
    rep.verdict = ok ? Verdict::ResidualNorm : Verdict::Failed;
  }
  return rep;
}

template RelationReport judge(std::string, int, ScalarBackend, const SquareMatrix<CycloScalar>&,
                              double);
template RelationReport judge(std::string, int, ScalarBackend, const SquareMatrix<FloatComplex>&,
                              double);

RelationReport degenerate_report(std::string id, int n, ScalarBackend backend) {
  return {std::move(id), n, backend, Verdict::Degenerate, 0.0, 0.0};
}

namespace {

template <class S>
double scale_of(std::initializer_list<const SquareMatrix<S>*> terms) {
  double s = 0.0;
  for (const auto* t : terms) s = std::max(s, inf_norm(*t));
  return s;
}

// lhs - rhs, judged with the scale of both sides
template <class Field>
RelationReport relation(const OperatorSet<Field>& ops, std::string id,
                        const SquareMatrix<typename Field::scalar>& lhs,
                        const SquareMatrix<typename Field::scalar>& rhs) {
  return judge(std::move(id), ops.dimension(), ops.field().backend(), lhs - rhs,
               scale_of({&lhs, &rhs}));
}

template <class S>
SquareMatrix<S> square(const SquareMatrix<S>& m) {
  return m * m;
}

}  // namespace

template <class Field>
Generators<typename Field::scalar> make_generators(const OperatorSet<Field>& ops) {
  auto a = ops.canonical_A();
  auto at = a.transpose();
  auto c = a * at - at * a;
  auto x = ops.position_X();
  auto y = ops.momentum_Y();
  auto w = ops.heun_W();
  return {ops.dft(false), std::move(a), std::move(at), std::move(c), std::move(x),
          std::move(y),   ops.cyclic_Z(), std::move(w), ops.reflection_Pd()};
}

template <class Field>
RelationReport check_intertwining_matrix(const OperatorSet<Field>& ops, std::string id,
                                         const SquareMatrix<typename Field::scalar>& m, int sign) {
  const auto f = ops.dft(false);
  const auto lhs = m * f;
  auto rhs = f * m;
  rhs *= ops.i();
  if (sign < 0) rhs = -rhs;
  return relation(ops, std::move(id), lhs, rhs);
}

template <class Field>
std::vector<RelationReport> check_intertwining(
    const OperatorSet<Field>& ops, const IntertwinerParams<typename Field::scalar>& params) {
  return {check_intertwining_matrix(ops, "intertwining_A",
                                    ops.intertwiner_A(params.alpha, params.beta), +1),
          check_intertwining_matrix(ops, "intertwining_B",
                                    ops.intertwiner_B(params.alpha_tilde, params.beta_tilde), -1)};
}

template <class Field>
std::vector<RelationReport> check_cubic_algebra(const OperatorSet<Field>& ops,
                                                const GeneratorsOf<Field>& g) {
  const auto backend = ops.field().backend();
  const auto sc = structure_constants(ops);
  if (sc.degenerate) {
    return {degenerate_report("cubic_CA", ops.dimension(), backend),
            degenerate_report("cubic_AtC", ops.dimension(), backend)};
  }
  const auto& b1 = *sc.beta1;
  const auto& b2 = *sc.beta2;
  const auto at3 = g.at * g.at * g.at;
  const auto a3 = g.a * g.a * g.a;
  return {relation(ops, "cubic_CA", commutator(g.c, g.a),
                   b1 * (g.a * g.at * g.a) + b2 * g.a - b1 * at3),
          relation(ops, "cubic_AtC", commutator(g.at, g.c),
                   b1 * (g.at * g.a * g.at) + b2 * g.at - b1 * a3)};
}

template <class Field>
std::vector<RelationReport> check_jacobi_decomposition(const OperatorSet<Field>& ops,
                                                       const GeneratorsOf<Field>& g) {
  const auto backend = ops.field().backend();
  const auto sc = structure_constants(ops);
  if (sc.degenerate) {
    return {degenerate_report("jacobi_1", ops.dimension(), backend),
            degenerate_report("jacobi_3", ops.dimension(), backend),
            degenerate_report("jacobi_13", ops.dimension(), backend)};
  }
  const auto& b1 = *sc.beta1;
  const auto& b2 = *sc.beta2;
  const auto aat2 = square(g.a * g.at);
  const auto ata2 = square(g.at * g.a);
  const auto first = commutator(g.a, commutator(g.at, g.c));
  const auto third = commutator(g.at, commutator(g.c, g.a));
  return {relation(ops, "jacobi_1", first, b1 * (aat2 - ata2) + b2 * g.c),
          relation(ops, "jacobi_3", third, b1 * (ata2 - aat2) - b2 * g.c),
          relation(ops, "jacobi_13", first + third, ops.zero())};
}

template <class Field>
CasimirQ1Result<typename Field::scalar> casimir_Q1(const OperatorSet<Field>& ops,
                                                   const GeneratorsOf<Field>& g) {
  CasimirQ1Result<typename Field::scalar> out;
  const auto backend = ops.field().backend();
  const int n = ops.dimension();
  if (n == 4) {
    out.reports = {degenerate_report("casimir_q1_A", n, backend),
                   degenerate_report("casimir_q1_At", n, backend)};
    return out;
  }
  const auto sc = structure_constants(ops);
  const auto a2 = square(g.a);
  const auto at2 = square(g.at);
  auto q1 = square(g.c) + sc.r1 * anticommutator(a2, at2) + sc.r2 * anticommutator(g.a, g.at) -
            sc.r1 * (square(a2) + square(at2));
  out.reports = {judge("casimir_q1_A", n, backend, commutator(q1, g.a), inf_norm(q1)),
                 judge("casimir_q1_At", n, backend, commutator(q1, g.at), inf_norm(q1))};

  const auto mean = q1.trace() * Field::inv(ops.field().integer(n));
  const auto diff = q1 - mean * ops.identity();
  out.scalar_value = Field::to_complex(mean);
  out.is_scalar = judge("casimir_q1_scalar", n, backend, diff, inf_norm(q1)).passed();
  out.q1 = std::move(q1);
  return out;
}

template <class Field>
std::vector<RelationReport> check_AW_terwilliger(const OperatorSet<Field>& ops,
                                                 const SquareMatrix<typename Field::scalar>& x,
                                                 const SquareMatrix<typename Field::scalar>& y,
                                                 const std::string& prefix) {
  const auto q_sum = ops.q(1) + ops.q(-1);
  const auto q_diff = ops.q(1) - ops.q(-1);
  const auto q_diff_sq = q_diff * q_diff;
  const auto x2 = square(x);
  const auto y2 = square(y);
  return {relation(ops, prefix + "_XY", x2 * y + y * x2 - q_sum * (x * y * x), -(q_diff_sq * y)),
          relation(ops, prefix + "_YX", y2 * x + x * y2 - q_sum * (y * x * y), -(q_diff_sq * x))};
}

template <class Field>
std::vector<RelationReport> check_AW3_cyclic(const OperatorSet<Field>& ops,
                                             const GeneratorsOf<Field>& g) {
  const auto p = ops.p(1);
  const auto pinv = ops.p(-1);
  const auto q_diff = ops.q(1) - ops.q(-1);
  return {relation(ops, "aw3_XY", p * (g.x * g.y) - pinv * (g.y * g.x), q_diff * g.z),
          relation(ops, "aw3_ZX", p * (g.z * g.x) - pinv * (g.x * g.z), q_diff * g.y),
          relation(ops, "aw3_YZ", p * (g.y * g.z) - pinv * (g.z * g.y), q_diff * g.x)};
}

namespace {

template <class Field>
SquareMatrix<typename Field::scalar> q_commutator(const OperatorSet<Field>& ops,
                                                  const SquareMatrix<typename Field::scalar>& u,
                                                  const SquareMatrix<typename Field::scalar>& v) {
  return ops.p(1) * (u * v) - ops.p(-1) * (v * u);
}

}  // namespace

template <class Field>
std::vector<RelationReport> check_so3q(const OperatorSet<Field>& ops) {
  const auto k = ops.k_generators();
  return {relation(ops, "so3q_K0K1", q_commutator(ops, k.k0, k.k1), k.k2),
          relation(ops, "so3q_K0K2", q_commutator(ops, k.k0, k.k2), -k.k1),
          relation(ops, "so3q_K1K2", q_commutator(ops, k.k1, k.k2), -k.k0)};
}

template <class Field>
std::vector<RelationReport> check_so3q_cyclic(const OperatorSet<Field>& ops) {
  const auto k = ops.k_generators();
  return {relation(ops, "so3q_cyclic_K0K1", q_commutator(ops, k.k0, k.k1), k.k2),
          relation(ops, "so3q_cyclic_K2K0", q_commutator(ops, k.k2, k.k0), -k.k1),
          relation(ops, "so3q_cyclic_K1K2", q_commutator(ops, k.k1, k.k2), -k.k0)};
}

template <class Field>
CasimirResult<typename Field::scalar> casimir_AW3(const OperatorSet<Field>& ops,
                                                  const GeneratorsOf<Field>& g) {
  CasimirResult<typename Field::scalar> out;
  const int n = ops.dimension();
  const auto backend = ops.field().backend();
  auto q = ops.p(1) * (g.x * g.y * g.z) - ops.q(1) * (square(g.x) + square(g.z)) -
           ops.q(-1) * square(g.y);
  const auto value = ops.field().integer(-2) * (ops.q(1) + ops.q(-1));
  const double scale = inf_norm(q);
  out.reports = {judge("aw3_casimir_X", n, backend, commutator(q, g.x), scale),
                 judge("aw3_casimir_Y", n, backend, commutator(q, g.y), scale),
                 judge("aw3_casimir_Z", n, backend, commutator(q, g.z), scale),
                 judge("aw3_casimir_hermitian", n, backend, q - q.adjoint(), scale),
                 judge("aw3_casimir_value", n, backend, q - value * ops.identity(), scale)};
  out.value = value;
  out.q = std::move(q);
  return out;
}

template <class Field>
std::vector<RelationReport> check_heun_algebra(const OperatorSet<Field>& ops,
                                               const GeneratorsOf<Field>& g, HeunReading reading) {
  const std::string prefix = reading == HeunReading::Rescaled ? "heun_rescaled" : "heun";
  const auto sc = structure_constants(ops);
  const auto x = reading == HeunReading::Rescaled ? ops.field().integer(2) * g.x : g.x;
  const auto& w = g.w;
  const auto q_sum = ops.q(1) + ops.q(-1);
  const auto x2 = square(x);
  const auto w2 = square(w);
  return {relation(ops, prefix + "_XW", x2 * w + w * x2 - q_sum * (x * w * x), sc.g1 * w),
          relation(ops, prefix + "_WX", w2 * x + x * w2 - q_sum * (w * x * w),
                   sc.g2 * (x2 * x) + sc.g3 * x)};
}

template <class Field>
CasimirResult<typename Field::scalar> casimir_heun(const OperatorSet<Field>& ops,
                                                   const GeneratorsOf<Field>& g,
                                                   HeunReading reading) {
  CasimirResult<typename Field::scalar> out;
  const std::string prefix =
      reading == HeunReading::Rescaled ? "heun_casimir_rescaled" : "heun_casimir";
  const int n = ops.dimension();
  const auto backend = ops.field().backend();
  const auto sc = structure_constants(ops);
  if (sc.degenerate) {
    out.reports = {degenerate_report(prefix + "_X", n, backend),
                   degenerate_report(prefix + "_W", n, backend),
                   degenerate_report(prefix + "_value", n, backend)};
    return out;
  }
  const auto x = reading == HeunReading::Rescaled ? ops.field().integer(2) * g.x : g.x;
  const auto& w = g.w;
  const auto& rho3 = reading == HeunReading::Rescaled ? *sc.rho3_rescaled : *sc.rho3;
  const auto xw = x * w;
  const auto wx = w * x;
  const auto x2 = square(x);
  auto q = square(commutator(x, w)) + *sc.rho1 * (square(xw) + square(wx)) + sc.rho2 * square(w) +
           rho3 * square(x2) + *sc.rho4 * x2;
  const auto q_diff = ops.q(1) - ops.q(-1);
  const auto value = ops.field().integer(-64) * q_diff * q_diff * q_diff * q_diff;
  const double scale = inf_norm(q);
  out.reports = {judge(prefix + "_X", n, backend, commutator(q, x), scale),
                 judge(prefix + "_W", n, backend, commutator(q, w), scale),
                 judge(prefix + "_value", n, backend, q - value * ops.identity(), scale)};
  out.value = value;
  out.q = std::move(q);
  return out;
}

template <class Field>
std::vector<RelationReport> check_commuting_with_dft(const OperatorSet<Field>& ops,
                                                     const GeneratorsOf<Field>& g) {
  return {relation(ops, "dft_commute_W", g.w * g.f, g.f * g.w),
          relation(ops, "dft_commute_AdagA_Pd", (g.at * g.a) * g.pd, g.pd * (g.at * g.a))};
}

template <class Field>
std::vector<RelationReport> check_unitary_equivalence(const OperatorSet<Field>& ops,
                                                      const GeneratorsOf<Field>& g) {
  const auto inv_n = Field::inv(ops.field().integer(ops.dimension()));
  return {relation(ops, "unitary_YF_FX", g.y * g.f, g.f * g.x),
          relation(ops, "unitary_XF_FY", g.x * g.f, -(g.f * g.y)),
          relation(ops, "unitary_Y_PhiXPhidag", g.y, inv_n * (g.f * g.x * g.f.adjoint()))};
}

template <class Field>
std::vector<RelationReport> circulant_similarity(const OperatorSet<Field>& ops,
                                                 const GeneratorsOf<Field>& g) {
  const int n = ops.dimension();
  const auto& field = ops.field();
  const auto sign = field.integer(n % 2 == 0 ? 1 : -1);
  const auto lhs = ops.gauge_S_inverse() * g.z * ops.gauge_S();
  const auto rhs = sign * ops.circulant_Ztilde();

  // x_{k+1} - (-1)^N q^{k+1/2} x_k on the diagonal, b_k - (-1)^N off it
  auto recurrence = ops.zero();
  for (int k = 0; k + 1 < n; ++k) {
    recurrence(k, k) = ops.gauge_entry(k + 1) - sign * ops.p(2LL * k + 1) * ops.gauge_entry(k);
  }
  for (int k = 1; k < n; ++k) {
    const auto b = ops.p(2LL * k - 1) * Field::inv(ops.gauge_entry(k)) * ops.gauge_entry(k - 1);
    recurrence(k, k - 1) = b - sign;
  }
  return {relation(ops, "circulant_similarity", lhs, rhs),
          judge("circulant_recurrence", n, field.backend(), recurrence, 1.0)};
}

namespace {

std::vector<CycloScalar> flatten(const ExactMatrix& m) {
  std::vector<CycloScalar> out;
  out.reserve(m.size() * m.size());
  for (const auto& v : m.data()) out.push_back(v);
  return out;
}

// band values of a cyclic tridiagonal matrix in the unknown order a, b, c
ExactVector bands(const ExactMatrix& m) {
  const std::size_t n = m.size();
  ExactVector v;
  for (std::size_t k = 0; k + 1 < n; ++k) v.push_back(m(k + 1, k));
  v.push_back(m(0, n - 1));
  for (std::size_t k = 0; k < n; ++k) v.push_back(m(k, k));
  for (std::size_t k = 0; k + 1 < n; ++k) v.push_back(m(k, k + 1));
  v.push_back(m(n - 1, 0));
  return v;
}

}  // namespace

int intertwiner_space_dimension(int n) {
  const ExactOperators ops(n);
  const auto f = ops.dft(false);
  const auto im = ops.i();
  const auto zero = ops.field().zero();
  const auto one = ops.field().one();

  // one column per band unknown: E_u F - i F E_u
  std::vector<std::vector<CycloScalar>> columns;
  for (int band = 0; band < 3; ++band) {
    for (int k = 0; k < n; ++k) {
      std::vector<CycloScalar> sub(n, zero), diag(n, zero), super(n, zero);
      (band == 0 ? sub : band == 1 ? diag : super)[k] = one;
      const auto e = ops.cyclic_tridiagonal(sub, diag, super);
      columns.push_back(flatten(e * f - im * (f * e)));
    }
  }
  const std::size_t unknowns = columns.size();
  std::vector<ExactVector> rows;
  for (std::size_t eq = 0; eq < columns.front().size(); ++eq) {
    ExactVector row;
    row.reserve(unknowns);
    bool nonzero = false;
    for (const auto& col : columns) {
      row.push_back(col[eq]);
      nonzero = nonzero || !col[eq].is_zero();
    }
    if (nonzero) rows.push_back(std::move(row));
  }
  return exact_rank(std::move(rows), unknowns).nullity;
}

bool intertwiner_family_spans_kernel(int n) {
  const ExactOperators ops(n);
  const auto one = ops.field().one();
  const auto zero = ops.field().zero();
  const auto alpha_solution = ops.intertwiner_A(one, zero);
  const auto beta_solution = ops.intertwiner_A(zero, one);
  for (const auto* m : {&alpha_solution, &beta_solution}) {
    if (!check_intertwining_matrix(ops, "kernel_member", *m, +1).passed()) return false;
  }
  const auto independent = exact_rank({bands(alpha_solution), bands(beta_solution)}, 3 * n);
  return independent.rank == 2 && intertwiner_space_dimension(n) == 2;
}

#define DFTALG_INSTANTIATE(Field)                                                               \
  template Generators<Field::scalar> make_generators(const OperatorSet<Field>&);                \
  template RelationReport check_intertwining_matrix(const OperatorSet<Field>&, std::string,     \
                                                    const SquareMatrix<Field::scalar>&, int);   \
  template std::vector<RelationReport> check_intertwining(const OperatorSet<Field>&,            \
                                                          const IntertwinerParams<Field::scalar>&); \
  template std::vector<RelationReport> check_cubic_algebra(const OperatorSet<Field>&,           \
                                                           const GeneratorsOf<Field>&);         \
  template std::vector<RelationReport> check_jacobi_decomposition(const OperatorSet<Field>&,    \
                                                                  const GeneratorsOf<Field>&);  \
  template CasimirQ1Result<Field::scalar> casimir_Q1(const OperatorSet<Field>&,                 \
                                                     const GeneratorsOf<Field>&);               \
  template std::vector<RelationReport> check_AW_terwilliger(                                    \
      const OperatorSet<Field>&, const SquareMatrix<Field::scalar>&,                            \
      const SquareMatrix<Field::scalar>&, const std::string&);                                  \
  template std::vector<RelationReport> check_AW3_cyclic(const OperatorSet<Field>&,              \
                                                        const GeneratorsOf<Field>&);            \
  template std::vector<RelationReport> check_so3q(const OperatorSet<Field>&);                   \
  template std::vector<RelationReport> check_so3q_cyclic(const OperatorSet<Field>&);            \
  template CasimirResult<Field::scalar> casimir_AW3(const OperatorSet<Field>&,                  \
                                                    const GeneratorsOf<Field>&);                \
  template std::vector<RelationReport> check_heun_algebra(                                      \
      const OperatorSet<Field>&, const GeneratorsOf<Field>&, HeunReading);                      \
  template CasimirResult<Field::scalar> casimir_heun(const OperatorSet<Field>&,                 \
                                                     const GeneratorsOf<Field>&, HeunReading);  \
  template std::vector<RelationReport> check_commuting_with_dft(const OperatorSet<Field>&,      \
                                                                const GeneratorsOf<Field>&);    \
  template std::vector<RelationReport> check_unitary_equivalence(const OperatorSet<Field>&,     \
                                                                 const GeneratorsOf<Field>&);   \
  template std::vector<RelationReport> circulant_similarity(const OperatorSet<Field>&,          \
                                                            const GeneratorsOf<Field>&);

DFTALG_INSTANTIATE(ExactField)
DFTALG_INSTANTIATE(FloatField)

#undef DFTALG_INSTANTIATE

}  // namespace dftalg
