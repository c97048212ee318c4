#pragma once

#include <string>
#include <vector>

#include "dftalg/linalg_exact.hpp"
#include "dftalg/matrix.hpp"

namespace dftalg {

struct EigenCluster {
  double value = 0.0;
  int multiplicity = 0;
};

struct SpectralReport {
  std::string operator_id;
  int n = 0;
  bool hermitian = false;
  std::vector<double> eigenvalues;     // sorted ascending, with repetition
  std::vector<EigenCluster> clusters;  // distinct values
  int rank = 0;
  int nullity = 0;
  std::vector<EigenCluster> degenerate_pairs;  // clusters with multiplicity > 1
};

// Hermiticity tolerance for the eigensolver input.
inline constexpr double kHermitianTolerance = 1e-10;
// Relative clustering tolerance for multiplicities.
inline constexpr double kClusterTolerance = 1e-8;

// Dense Hermitian eigensolve; throws NotHermitian when ||M - M^dagger|| > 1e-10.
SpectralReport hermitian_spectrum(const FloatMatrix& m, std::string operator_id = "");

// Rank and nullity only (for non-Hermitian operators such as A).
SpectralReport rank_report(const ExactMatrix& m, std::string operator_id = "");

// (-1)^N 2 cos(2 pi k / N), k = 0..N-1, sorted.
std::vector<double> circulant_spectrum(int n);

/// Overlaps (eps_k, e_l) between the eigenbasis e_l of X and eps_k = Phi e_k
/// of Y, inner product conjugate-linear in the first slot.
struct OverlapTable {
  int n = 0;
  FloatMatrix entries{1, FloatComplex{}};
  bool y_eigenrelation_exact = false;  // Y f_n = x_n f_n for the DFT columns f_n
  bool x_two_diagonal_exact = false;   // X f_n = i (f_{n-1} - f_{n+1})
  bool y_two_diagonal_exact = false;   // Y e_n = i (e_{n+1} - e_{n-1})
  bool z_two_diagonal_exact = false;   // Z e_n = q^{1/2}(q^n e_{n+1} + q^-n e_{n-1})
  double formula_deviation = 0.0;      // max |entry - N^-1/2 q^-kl|
  double dft_deviation = 0.0;          // max |(e_k, eps_l) - Phi_kl|
  double row_orthonormality_deviation = 0.0;
  // N^-1 sum_j P_k(mu_j)^* P_l(mu_j) - delta_kl with mu_j = q^-j
  double monomial_orthogonality_deviation = 0.0;
  // same sum with the N^-1/2 prefactor
  double monomial_half_prefactor_deviation = 0.0;
};

OverlapTable eigenbasis_epsilon(int n);

struct LadderReport {
  int n = 0;
  int null_dimension = 0;
  bool reflection_commutes = false;  // [A^T A, P_d] = 0, exact
  int generated = 0;                 // chain vectors produced before orthonormalization
  int span_dimension = 0;
  int dropped = 0;
  std::vector<int> parities;  // per orthonormal vector: +1, -1, or 0 (not a P_d eigenvector)
  bool all_symmetric = false;  // every vector is a P_d eigenvector (parity +-1)
  std::vector<std::vector<FloatComplex>> vectors;
};

// Null basis of A, chains v_{j+1} = A^T v_j, sequential orthonormalization.
LadderReport ladder_hierarchy(int n);

}  // namespace dftalg
