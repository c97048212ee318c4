#include "dftalg/operators.hpp"

#include <algorithm>
#include <cmath>

#include "dftalg/error.hpp"

namespace dftalg {

namespace {

std::size_t wrap(long long k, int n) {
  return static_cast<std::size_t>(((k % n) + n) % n);
}

}  // namespace

template <class Field>
OperatorSet<Field>::OperatorSet(int dimension) : field_(dimension), n_(dimension) {
  require_dimension(dimension);
}

template <class Field>
auto OperatorSet<Field>::s(long long n) const -> scalar {
  // (q^n - q^-n) * (-i/2)
  return (q(n) - q(-n)) * i() * field_.rational(-1, 2);
}

template <class Field>
auto OperatorSet<Field>::c(long long n) const -> scalar {
  return (q(n) + q(-n)) * field_.rational(1, 2);
}

template <class Field>
auto OperatorSet<Field>::dft(bool normalized) const -> matrix {
  if (normalized && Field::is_exact) {
    throw Error(ErrorCode::UnsupportedNormalization,
                "the exact backend stores the unnormalized DFT F = sqrt(N) Phi");
  }
  matrix f = zero();
  for (int k = 0; k < n_; ++k)
    for (int l = 0; l < n_; ++l) f(k, l) = q(static_cast<long long>(k) * l);
  if constexpr (!Field::is_exact) {
    if (normalized) f *= scalar(1.0 / std::sqrt(static_cast<double>(n_)), 0.0);
  }
  return f;
}

template <class Field>
auto OperatorSet<Field>::cyclic_tridiagonal(const std::vector<scalar>& sub,
                                            const std::vector<scalar>& diag,
                                            const std::vector<scalar>& super) const -> matrix {
  const auto n = static_cast<std::size_t>(n_);
  if (sub.size() != n || diag.size() != n || super.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "cyclic tridiagonal bands must have length N");
  }
  matrix m = zero();
  for (std::size_t k = 0; k < n; ++k) m(k, k) = diag[k];
  for (std::size_t k = 0; k + 1 < n; ++k) {
    m(k + 1, k) = sub[k];
    m(k, k + 1) = super[k];
  }
  m(0, n - 1) = sub[n - 1];
  m(n - 1, 0) = super[n - 1];
  return m;
}

template <class Field>
auto OperatorSet<Field>::intertwiner_A(const scalar& alpha, const scalar& beta) const -> matrix {
  std::vector<scalar> a, b, c;
  const scalar im = i();
  for (int k = 0; k < n_; ++k) {
    a.push_back(-(im * alpha) + beta * (im * q(-k) - q(k + 1)));
    b.push_back(alpha * (q(k) - q(-k)));
    c.push_back(im * alpha + beta * (q(-k) - im * q(k + 1)));
  }
  return cyclic_tridiagonal(a, b, c);
}

template <class Field>
auto OperatorSet<Field>::intertwiner_B(const scalar& alpha_tilde, const scalar& beta_tilde) const
    -> matrix {
  std::vector<scalar> a, b, c;
  const scalar im = i();
  for (int k = 0; k < n_; ++k) {
    a.push_back(im * alpha_tilde - beta_tilde * (im * q(-k) + q(k + 1)));
    b.push_back(alpha_tilde * (q(k) - q(-k)));
    c.push_back(-(im * alpha_tilde) + beta_tilde * (q(-k) + im * q(k + 1)));
  }
  return cyclic_tridiagonal(a, b, c);
}

template <class Field>
auto OperatorSet<Field>::position_X() const -> matrix {
  matrix x = zero();
  const scalar two = field_.integer(2);
  for (int k = 0; k < n_; ++k) x(k, k) = two * s(k);
  return x;
}

template <class Field>
auto OperatorSet<Field>::momentum_Y() const -> matrix {
  // Y e_l = i (e_{l+1} - e_{l-1})
  matrix y = zero();
  const scalar im = i();
  for (int l = 0; l < n_; ++l) {
    y(wrap(l + 1, n_), l) += im;
    y(wrap(l - 1, n_), l) -= im;
  }
  return y;
}

template <class Field>
auto OperatorSet<Field>::canonical_A() const -> matrix {
  return position_X() + i() * momentum_Y();
}

template <class Field>
auto OperatorSet<Field>::canonical_Adag() const -> matrix {
  return position_X() - i() * momentum_Y();
}

template <class Field>
auto OperatorSet<Field>::commutator_C() const -> matrix {
  const matrix a = canonical_A();
  const matrix at = a.transpose();
  return a * at - at * a;
}

template <class Field>
auto OperatorSet<Field>::commutator_C_closed_form() const -> matrix {
  matrix cm = zero();
  const scalar four = field_.integer(4);
  for (int k = 0; k < n_; ++k) {
    const scalar v = four * (s(k + 1) - s(k));
    cm(k, wrap(k + 1, n_)) = v;
    cm(wrap(k + 1, n_), k) = v;
  }
  return cm;
}

template <class Field>
auto OperatorSet<Field>::cyclic_Z() const -> matrix {
  // Z e_l = q^{1/2} (q^l e_{l+1} + q^-l e_{l-1})
  matrix z = zero();
  for (int l = 0; l < n_; ++l) {
    z(wrap(l + 1, n_), l) += p() * q(l);
    z(wrap(l - 1, n_), l) += p() * q(-l);
  }
  return z;
}

template <class Field>
auto OperatorSet<Field>::circulant_Ztilde() const -> matrix {
  matrix z = zero();
  for (int l = 0; l < n_; ++l) {
    z(wrap(l + 1, n_), l) += field_.one();
    z(wrap(l - 1, n_), l) += field_.one();
  }
  return z;
}

template <class Field>
auto OperatorSet<Field>::gauge_entry(long long k) const -> scalar {
  // q^{k^2/2} = p^{k^2}; the sign is an integer parity, not a root of unity
  const bool negative = ((k % 2 != 0) && (n_ % 2 != 0));
  scalar v = p(k * k);
  return negative ? -v : v;
}

template <class Field>
auto OperatorSet<Field>::gauge_S() const -> matrix {
  matrix sm = zero();
  for (int k = 0; k < n_; ++k) sm(k, k) = gauge_entry(k);
  return sm;
}

template <class Field>
auto OperatorSet<Field>::gauge_S_inverse() const -> matrix {
  matrix sm = zero();
  for (int k = 0; k < n_; ++k) sm(k, k) = Field::inv(gauge_entry(k));
  return sm;
}

template <class Field>
auto OperatorSet<Field>::heun_W() const -> matrix {
  const matrix x = position_X();
  const matrix y = momentum_Y();
  return field_.integer(-2) * i() * commutator(x, y);
}

template <class Field>
auto OperatorSet<Field>::heun_general_W(const scalar& tau0, const scalar& tau1, const scalar& tau2,
                                        const scalar& tau3, const scalar& tau4) const -> matrix {
  const matrix x = position_X();
  const matrix y = momentum_Y();
  return tau1 * (x * y) + tau2 * (y * x) + tau3 * x + tau4 * y + tau0 * identity();
}

template <class Field>
auto OperatorSet<Field>::reflection_Pd() const -> matrix {
  matrix pd = zero();
  for (int l = 0; l < n_; ++l) pd(wrap(-l, n_), l) = field_.one();
  return pd;
}

template <class Field>
auto OperatorSet<Field>::k_generators() const -> KGenerators<scalar> {
  const scalar scale = Field::inv(field_.integer(2) * s(1));
  return {scale * position_X(), scale * momentum_Y(), scale * i() * cyclic_Z()};
}

template class OperatorSet<ExactField>;
template class OperatorSet<FloatField>;

const std::vector<std::string>& operator_ids() {
  static const std::vector<std::string> ids = {"phi", "A",  "Adag", "X",  "Y",  "C",  "Z",
                                               "Ztilde", "S", "W", "Pd", "K0", "K1", "K2"};
  return ids;
}

bool is_operator_id(const std::string& id) {
  const auto& ids = operator_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

template <class Field>
SquareMatrix<typename Field::scalar> named_operator(const OperatorSet<Field>& ops,
                                                    const std::string& id) {
  if (id == "phi") return ops.dft(!Field::is_exact);
  if (id == "A") return ops.canonical_A();
  if (id == "Adag") return ops.canonical_Adag();
  if (id == "X") return ops.position_X();
  if (id == "Y") return ops.momentum_Y();
  if (id == "C") return ops.commutator_C();
  if (id == "Z") return ops.cyclic_Z();
  if (id == "Ztilde") return ops.circulant_Ztilde();
  if (id == "S") return ops.gauge_S();
  if (id == "W") return ops.heun_W();
  if (id == "Pd") return ops.reflection_Pd();
  if (id == "K0") return ops.k_generators().k0;
  if (id == "K1") return ops.k_generators().k1;
  if (id == "K2") return ops.k_generators().k2;
  throw Error(ErrorCode::InvalidArgument, "unknown operator id '" + id + "'");
}

template SquareMatrix<CycloScalar> named_operator(const OperatorSet<ExactField>&, const std::string&);
template SquareMatrix<FloatComplex> named_operator(const OperatorSet<FloatField>&, const std::string&);

}  // namespace dftalg
