#pragma once

#include <cstddef>
#include <vector>

#include "dftalg/matrix.hpp"

namespace dftalg {

using ExactVector = std::vector<CycloScalar>;

struct ExactRankResult {
  int rank = 0;
  int nullity = 0;
  std::vector<ExactVector> null_basis;  // right kernel, one vector per free column
};

// Gauss-Jordan elimination over Q(zeta_M) of a rows x cols matrix given as
// rows. Every row must have `cols` entries from the same field.
ExactRankResult exact_rank(std::vector<ExactVector> rows, std::size_t cols);

ExactRankResult exact_rank(const ExactMatrix& m);

ExactVector apply(const ExactMatrix& m, const ExactVector& v);

}  // namespace dftalg
