#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dftalg/backend.hpp"
#include "dftalg/matrix.hpp"

namespace dftalg {

// alpha, beta parametrize A; alpha_tilde, beta_tilde parametrize B.
template <class S>
struct IntertwinerParams {
  S alpha;
  S beta;
  S alpha_tilde;
  S beta_tilde;
};

template <class S>
struct KGenerators {
  SquareMatrix<S> k0;
  SquareMatrix<S> k1;
  SquareMatrix<S> k2;
};

/// Constructors for the operator family of the N-point DFT over one scalar
/// backend. Index convention: rows and columns 0..N-1, cyclic tridiagonal
/// means diagonal, sub, super and the corners (0,N-1), (N-1,0).
template <class Field>
class OperatorSet {
 public:
  using scalar = typename Field::scalar;
  using matrix = SquareMatrix<scalar>;

  explicit OperatorSet(int dimension);

  int dimension() const noexcept { return n_; }
  const Field& field() const noexcept { return field_; }

  // q^k with q = exp(2 pi i/N)
  scalar q(long long k = 1) const { return field_.root(k, n_); }
  // p^k with p = q^{1/2} = exp(pi i/N)
  scalar p(long long k = 1) const { return field_.root(k, 2LL * n_); }
  scalar i() const { return field_.imag_unit(); }
  // s_n = (q^n - q^-n)/(2i)
  scalar s(long long n) const;
  // c_n = (q^n + q^-n)/2
  scalar c(long long n) const;

  matrix zero() const { return matrix(n_, field_.zero()); }
  matrix identity() const { return matrix::identity(n_, field_.zero(), field_.one()); }

  // Exact backend only supports normalized = false (F = sqrt(N) Phi).
  matrix dft(bool normalized) const;

  matrix cyclic_tridiagonal(const std::vector<scalar>& sub, const std::vector<scalar>& diag,
                            const std::vector<scalar>& super) const;
  matrix intertwiner_A(const scalar& alpha, const scalar& beta) const;
  matrix intertwiner_B(const scalar& alpha_tilde, const scalar& beta_tilde) const;

  matrix canonical_A() const;
  matrix canonical_Adag() const;
  matrix position_X() const;
  matrix momentum_Y() const;

  matrix commutator_C() const;
  // 4(s_{k+1} - s_k) on the cyclic off-diagonals
  matrix commutator_C_closed_form() const;

  matrix cyclic_Z() const;
  matrix circulant_Ztilde() const;
  // S_kk = (-1)^{kN} q^{k^2/2}
  scalar gauge_entry(long long k) const;
  matrix gauge_S() const;
  matrix gauge_S_inverse() const;

  matrix heun_W() const;
  matrix heun_general_W(const scalar& tau0, const scalar& tau1, const scalar& tau2,
                        const scalar& tau3, const scalar& tau4) const;

  matrix reflection_Pd() const;
  KGenerators<scalar> k_generators() const;

 private:
  Field field_;
  int n_;
};

extern template class OperatorSet<ExactField>;
extern template class OperatorSet<FloatField>;

using ExactOperators = OperatorSet<ExactField>;
using FloatOperators = OperatorSet<FloatField>;

/// Operator ids understood by the matrix dump:
/// phi, A, Adag, X, Y, C, Z, Ztilde, S, W, Pd, K0, K1, K2.
const std::vector<std::string>& operator_ids();
bool is_operator_id(const std::string& id);

template <class Field>
SquareMatrix<typename Field::scalar> named_operator(const OperatorSet<Field>& ops,
                                                    const std::string& id);

}  // namespace dftalg
