#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dftalg/operators.hpp"
#include "dftalg/structure_constants.hpp"

namespace dftalg {

enum class Verdict { ExactZero, ResidualNorm, Degenerate, Failed };

const char* to_string(Verdict v) noexcept;

/// Outcome of one identity check.
struct RelationReport {
  std::string relation_id;
  int n = 0;
  ScalarBackend backend;
  Verdict verdict = Verdict::Failed;
  double residual_inf_norm = 0.0;  // of the float image of the residual
  double scale = 0.0;              // largest inf-norm among the relation's terms

  bool passed() const noexcept {
    return verdict == Verdict::ExactZero || verdict == Verdict::ResidualNorm;
  }
};

// Relative tolerance for float verdicts: residual <= kFloatTolerance * max(1, scale).
inline constexpr double kFloatTolerance = 1e-9;

template <class S>
RelationReport judge(std::string id, int n, ScalarBackend backend, const SquareMatrix<S>& residual,
                     double scale);

RelationReport degenerate_report(std::string id, int n, ScalarBackend backend);

/// The matrices every relation is written in. Tests perturb entries here to
/// exercise negative controls.
template <class S>
struct Generators {
  SquareMatrix<S> f;     // unnormalized DFT
  SquareMatrix<S> a;     // canonical A
  SquareMatrix<S> at;    // A^T (= A^dagger)
  SquareMatrix<S> c;     // [A, A^T]
  SquareMatrix<S> x;
  SquareMatrix<S> y;
  SquareMatrix<S> z;
  SquareMatrix<S> w;     // -2i [X, Y]
  SquareMatrix<S> pd;
};

template <class Field>
Generators<typename Field::scalar> make_generators(const OperatorSet<Field>& ops);

template <class Field>
using GeneratorsOf = Generators<typename Field::scalar>;

// A F - i F A and B F + i F B for A = intertwiner_A(alpha, beta),
// B = intertwiner_B(alpha_tilde, beta_tilde).
template <class Field>
std::vector<RelationReport> check_intertwining(
    const OperatorSet<Field>& ops, const IntertwinerParams<typename Field::scalar>& params);

// sign = +1 checks M F = i F M, sign = -1 checks M F = -i F M.
template <class Field>
RelationReport check_intertwining_matrix(const OperatorSet<Field>& ops, std::string id,
                                         const SquareMatrix<typename Field::scalar>& m, int sign);

// [C,A] and [A^T,C] cubic relations; Degenerate at N = 4.
template <class Field>
std::vector<RelationReport> check_cubic_algebra(const OperatorSet<Field>& ops,
                                                const GeneratorsOf<Field>& g);

// [A,[A^T,C]], [A^T,[C,A]] and their sum.
template <class Field>
std::vector<RelationReport> check_jacobi_decomposition(const OperatorSet<Field>& ops,
                                                       const GeneratorsOf<Field>& g);

template <class S>
struct CasimirQ1Result {
  std::optional<SquareMatrix<S>> q1;
  std::vector<RelationReport> reports;  // [Q1, A], [Q1, A^T]
  bool is_scalar = false;               // recorded, not asserted
  FloatComplex scalar_value{};          // trace(Q1)/N
};

template <class Field>
CasimirQ1Result<typename Field::scalar> casimir_Q1(const OperatorSet<Field>& ops,
                                                   const GeneratorsOf<Field>& g);

// Both Askey-Wilson relations in the X, Y pair.
template <class Field>
std::vector<RelationReport> check_AW_terwilliger(const OperatorSet<Field>& ops,
                                                 const SquareMatrix<typename Field::scalar>& x,
                                                 const SquareMatrix<typename Field::scalar>& y,
                                                 const std::string& prefix = "aw");

template <class Field>
std::vector<RelationReport> check_AW3_cyclic(const OperatorSet<Field>& ops,
                                             const GeneratorsOf<Field>& g);

// so_3(q) relations [K0,K1]_q = K2, [K0,K2]_q = -K1,
// [K1,K2]_q = -K0 with [U,V]_q = q^{1/2} UV - q^{-1/2} VU.
template <class Field>
std::vector<RelationReport> check_so3q(const OperatorSet<Field>& ops);

// Same generators, second relation in the cyclic order that follows from
// the AW3 relations: [K2,K0]_q = -K1.
template <class Field>
std::vector<RelationReport> check_so3q_cyclic(const OperatorSet<Field>& ops);

template <class S>
struct CasimirResult {
  std::optional<SquareMatrix<S>> q;
  std::optional<S> value;               // expected scalar
  std::vector<RelationReport> reports;
};

// Q = p XYZ - q (X^2 + Z^2) - q^-1 Y^2; expected -2(q+q^-1) I.
template <class Field>
CasimirResult<typename Field::scalar> casimir_AW3(const OperatorSet<Field>& ops,
                                                  const GeneratorsOf<Field>& g);

enum class HeunReading {
  Standard,  // generator X = 2 diag(s_n), StructureConstants::rho3
  Rescaled,  // generator 2X, StructureConstants::rho3_rescaled
};

// X^2W + WX^2 - (q+q^-1) XWX = g1 W and W^2X + XW^2 - (q+q^-1) WXW = g2 X^3 + g3 X.
template <class Field>
std::vector<RelationReport> check_heun_algebra(const OperatorSet<Field>& ops,
                                               const GeneratorsOf<Field>& g,
                                               HeunReading reading = HeunReading::Standard);

// Q = [X,W]^2 + rho1((XW)^2+(WX)^2) + rho2 W^2 + rho3 X^4 + rho4 X^2;
// expected -64 (q-q^-1)^4 I. Degenerate at N = 4.
template <class Field>
CasimirResult<typename Field::scalar> casimir_heun(const OperatorSet<Field>& ops,
                                                   const GeneratorsOf<Field>& g,
                                                   HeunReading reading = HeunReading::Standard);

// W F - F W and [A^T A, P_d].
template <class Field>
std::vector<RelationReport> check_commuting_with_dft(const OperatorSet<Field>& ops,
                                                     const GeneratorsOf<Field>& g);

// Y F - F X, X F + F Y, and Y - (1/N) F X F^dagger.
template <class Field>
std::vector<RelationReport> check_unitary_equivalence(const OperatorSet<Field>& ops,
                                                      const GeneratorsOf<Field>& g);

// S^-1 Z S = (-1)^N Ztilde and x_{k+1} = (-1)^N q^{k+1/2} x_k for the S diagonal.
template <class Field>
std::vector<RelationReport> circulant_similarity(const OperatorSet<Field>& ops,
                                                 const GeneratorsOf<Field>& g);

/// Exact nullity of M -> M F - i F M restricted to cyclic tridiagonal M, over
/// the 3N band unknowns.
int intertwiner_space_dimension(int n);

// True when the alpha- and beta-solutions of the general family lie in that
// kernel and are linearly independent (hence span it when the nullity is 2).
bool intertwiner_family_spans_kernel(int n);

}  // namespace dftalg
