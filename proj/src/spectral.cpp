#include "dftalg/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dftalg/error.hpp"
#include "dftalg/operators.hpp"

namespace dftalg {

namespace {

using EigenMatrix = Eigen::MatrixXcd;
using EigenVector = Eigen::VectorXcd;

EigenMatrix to_eigen(const FloatMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  EigenMatrix out(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) out(r, c) = m(r, c);
  return out;
}

std::vector<EigenCluster> cluster(const std::vector<double>& sorted) {
  double scale = 1.0;
  for (double v : sorted) scale = std::max(scale, std::abs(v));
  const double tol = kClusterTolerance * scale;
  std::vector<EigenCluster> out;
  for (double v : sorted) {
    if (!out.empty() && std::abs(v - out.back().value) <= tol) {
      auto& c = out.back();
      c.value = (c.value * c.multiplicity + v) / (c.multiplicity + 1);
      ++c.multiplicity;
    } else {
      out.push_back({v, 1});
    }
  }
  return out;
}

}  // namespace

SpectralReport hermitian_spectrum(const FloatMatrix& m, std::string operator_id) {
  if (inf_norm(m - m.adjoint()) > kHermitianTolerance) {
    throw Error(ErrorCode::NotHermitian, "operator '" + operator_id + "' is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<EigenMatrix> solver(to_eigen(m), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::InternalError, "eigensolver did not converge");
  }
  SpectralReport rep;
  rep.operator_id = std::move(operator_id);
  rep.n = static_cast<int>(m.size());
  rep.hermitian = true;
  const auto& values = solver.eigenvalues();
  rep.eigenvalues.assign(values.data(), values.data() + values.size());
  std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end());
  rep.clusters = cluster(rep.eigenvalues);

  double scale = 1.0;
  for (double v : rep.eigenvalues) scale = std::max(scale, std::abs(v));
  rep.nullity = static_cast<int>(std::count_if(rep.eigenvalues.begin(), rep.eigenvalues.end(),
                                               [&](double v) { return std::abs(v) <= kClusterTolerance * scale; }));
  rep.rank = rep.n - rep.nullity;
  for (const auto& c : rep.clusters)
    if (c.multiplicity > 1) rep.degenerate_pairs.push_back(c);
  return rep;
}

SpectralReport rank_report(const ExactMatrix& m, std::string operator_id) {
  const auto r = exact_rank(m);
  SpectralReport rep;
  rep.operator_id = std::move(operator_id);
  rep.n = static_cast<int>(m.size());
  rep.hermitian = m == m.adjoint();
  rep.rank = r.rank;
  rep.nullity = r.nullity;
  return rep;
}

std::vector<double> circulant_spectrum(int n) {
  require_dimension(n);
  const double sign = n % 2 == 0 ? 1.0 : -1.0;
  std::vector<double> out;
  for (int k = 0; k < n; ++k) out.push_back(sign * 2.0 * std::cos(2.0 * std::numbers::pi * k / n));
  std::sort(out.begin(), out.end());
  return out;
}

OverlapTable eigenbasis_epsilon(int n) {
  const ExactOperators ops(n);
  const auto f = ops.dft(false);
  const auto x = ops.position_X();
  const auto y = ops.momentum_Y();
  const auto z = ops.cyclic_Z();
  const auto im = ops.i();
  const auto un = static_cast<std::size_t>(n);

  const auto column = [&](const ExactMatrix& m, long long j) {
    const auto c = static_cast<std::size_t>(((j % n) + n) % n);
    ExactVector v;
    for (std::size_t r = 0; r < un; ++r) v.push_back(m(r, c));
    return v;
  };
  const auto unit = [&](long long j) { return column(ops.identity(), j); };
  const auto combine = [&](const ExactVector& a, const CycloScalar& ca, const ExactVector& b,
                           const CycloScalar& cb) {
    ExactVector out;
    for (std::size_t r = 0; r < un; ++r) out.push_back(ca * a[r] + cb * b[r]);
    return out;
  };

  OverlapTable table;
  table.n = n;
  table.y_eigenrelation_exact = true;
  table.x_two_diagonal_exact = true;
  table.y_two_diagonal_exact = true;
  table.z_two_diagonal_exact = true;
  for (int k = 0; k < n; ++k) {
    const ExactVector fk = column(f, k);
    const CycloScalar xk = ops.field().integer(2) * ops.s(k);
    ExactVector scaled;
    for (const auto& v : fk) scaled.push_back(xk * v);
    table.y_eigenrelation_exact = table.y_eigenrelation_exact && dftalg::apply(y, fk) == scaled;
    table.x_two_diagonal_exact =
        table.x_two_diagonal_exact &&
        dftalg::apply(x, fk) == combine(column(f, k - 1), im, column(f, k + 1), -im);
    table.y_two_diagonal_exact =
        table.y_two_diagonal_exact && dftalg::apply(y, unit(k)) == combine(unit(k + 1), im, unit(k - 1), -im);
    table.z_two_diagonal_exact =
        table.z_two_diagonal_exact &&
        dftalg::apply(z, unit(k)) == combine(unit(k + 1), ops.p(1) * ops.q(k), unit(k - 1), ops.p(1) * ops.q(-k));
  }

  // Float tables: Phi normalized, eps_k = Phi e_k.
  const FloatOperators fops(n);
  const auto phi = fops.dft(true);
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  table.entries = FloatMatrix(un, FloatComplex{});
  for (std::size_t k = 0; k < un; ++k) {
    for (std::size_t l = 0; l < un; ++l) {
      // (eps_k, e_l) = sum_j conj(Phi_jk) delta_jl
      const FloatComplex entry = std::conj(phi(l, k));
      table.entries(k, l) = entry;
      const FloatComplex formula =
          inv_sqrt_n * fops.q(-static_cast<long long>(k) * static_cast<long long>(l));
      table.formula_deviation = std::max(table.formula_deviation, std::abs(entry - formula));
    }
  }
  // (e_k, eps_l) is the adjoint of the table and must equal Phi
  table.dft_deviation = inf_norm(table.entries.adjoint() - phi);
  table.row_orthonormality_deviation =
      inf_norm(table.entries * table.entries.adjoint() - fops.identity());

  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      FloatComplex sum{};
      for (int j = 0; j < n; ++j) {
        const FloatComplex mu = fops.q(-j);
        sum += std::conj(std::pow(mu, k)) * std::pow(mu, l);
      }
      const double delta = k == l ? 1.0 : 0.0;
      table.monomial_orthogonality_deviation =
          std::max(table.monomial_orthogonality_deviation, std::abs(sum / static_cast<double>(n) - delta));
      table.monomial_half_prefactor_deviation =
          std::max(table.monomial_half_prefactor_deviation, std::abs(sum * inv_sqrt_n - delta));
    }
  }
  return table;
}

LadderReport ladder_hierarchy(int n) {
  const ExactOperators ops(n);
  const auto a = ops.canonical_A();
  const auto at = a.transpose();
  const auto pd = ops.reflection_Pd();

  LadderReport rep;
  rep.n = n;
  rep.reflection_commutes = is_zero_matrix(commutator(at * a, pd));
  const auto kernel = exact_rank(a);
  rep.null_dimension = kernel.nullity;
  if (kernel.null_basis.empty()) {
    throw Error(ErrorCode::InternalError, "A has an empty null space");
  }

  const auto fat = to_eigen(to_float(at));
  const auto fpd = to_eigen(to_float(pd));
  const auto un = static_cast<Eigen::Index>(n);

  std::vector<EigenVector> chain;
  for (const auto& seed : kernel.null_basis) {
    EigenVector v(un);
    for (Eigen::Index i = 0; i < un; ++i) v(i) = seed[static_cast<std::size_t>(i)].to_complex();
    for (int j = 0; j < n; ++j) {
      chain.push_back(v);
      v = fat * v;
    }
  }
  rep.generated = static_cast<int>(chain.size());

  std::vector<EigenVector> basis;
  for (const auto& v : chain) {
    if (static_cast<int>(basis.size()) == n) break;
    EigenVector u = v;
    const double original = std::max(1.0, v.norm());
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) u -= b.dot(u) * b;  // dot conjugates the first argument
    if (u.norm() < 1e-10 * original) {
      ++rep.dropped;
      continue;
    }
    basis.push_back(u / u.norm());
  }
  rep.span_dimension = static_cast<int>(basis.size());

  rep.all_symmetric = true;
  for (const auto& b : basis) {
    const EigenVector image = fpd * b;
    int parity = 0;
    if ((image - b).norm() <= 1e-8) parity = 1;
    else if ((image + b).norm() <= 1e-8) parity = -1;
    rep.parities.push_back(parity);
    rep.all_symmetric = rep.all_symmetric && parity != 0;
    rep.vectors.emplace_back(b.data(), b.data() + b.size());
  }
  return rep;
}

}  // namespace dftalg
