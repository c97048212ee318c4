#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <type_traits>
#include <utility>
#include <vector>

#include "dftalg/backend.hpp"
#include "dftalg/error.hpp"

namespace dftalg {

/// Dense n x n matrix, row-major. Scalars are CycloScalar or FloatComplex.
template <class S>
class SquareMatrix {
 public:
  SquareMatrix(std::size_t n, const S& fill) : n_(n), data_(n * n, fill) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "empty matrix");
  }

  static SquareMatrix identity(std::size_t n, const S& zero, const S& one) {
    SquareMatrix m(n, zero);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = one;
    return m;
  }

  std::size_t size() const noexcept { return n_; }

  S& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  const std::vector<S>& data() const noexcept { return data_; }

  SquareMatrix& operator+=(const SquareMatrix& rhs) {
    check_size(rhs);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& rhs) {
    check_size(rhs);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
  }
  SquareMatrix& operator*=(const S& s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  SquareMatrix operator-() const {
    SquareMatrix out = *this;
    for (auto& v : out.data_) v = -v;
    return out;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator*(SquareMatrix a, const S& s) { return a *= s; }
  friend SquareMatrix operator*(const S& s, SquareMatrix a) { return a *= s; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    a.check_size(b);
    const std::size_t n = a.n_;
    SquareMatrix out(n, a.data_.front() - a.data_.front());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const S& aik = a(i, k);
        if (is_structural_zero(aik)) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (is_structural_zero(b(k, j))) continue;
          out(i, j) += aik * b(k, j);
        }
      }
    }
    return out;
  }

  SquareMatrix transpose() const {
    SquareMatrix out = *this;
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  SquareMatrix adjoint() const {
    SquareMatrix out = *this;
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) out(c, r) = conj_of((*this)(r, c));
    return out;
  }

  S trace() const {
    S t = data_.front() - data_.front();
    for (std::size_t k = 0; k < n_; ++k) t += (*this)(k, k);
    return t;
  }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

 private:
  void check_size(const SquareMatrix& rhs) const {
    if (rhs.n_ != n_) throw Error(ErrorCode::InvalidArgument, "matrix size mismatch");
  }

  static bool is_structural_zero(const S& s) {
    if constexpr (std::is_same_v<S, FloatComplex>) {
      return s == FloatComplex{};
    } else {
      return s.is_zero();
    }
  }

  static S conj_of(const S& s) {
    using std::conj;
    return conj(s);
  }

  std::size_t n_;
  std::vector<S> data_;
};

template <class S>
SquareMatrix<S> commutator(const SquareMatrix<S>& a, const SquareMatrix<S>& b) {
  return a * b - b * a;
}

template <class S>
SquareMatrix<S> anticommutator(const SquareMatrix<S>& a, const SquareMatrix<S>& b) {
  return a * b + b * a;
}

template <class S>
bool is_zero_matrix(const SquareMatrix<S>& m) {
  return std::all_of(m.data().begin(), m.data().end(), [](const S& s) {
    if constexpr (std::is_same_v<S, FloatComplex>) {
      return s == FloatComplex{};
    } else {
      return s.is_zero();
    }
  });
}

// Max absolute entry of the float image.
template <class S>
double inf_norm(const SquareMatrix<S>& m) {
  double best = 0.0;
  for (const auto& s : m.data()) {
    if constexpr (std::is_same_v<S, FloatComplex>) {
      best = std::max(best, std::abs(s));
    } else {
      best = std::max(best, std::abs(s.to_complex()));
    }
  }
  return best;
}

template <class S>
SquareMatrix<FloatComplex> to_float(const SquareMatrix<S>& m) {
  if constexpr (std::is_same_v<S, FloatComplex>) {
    return m;
  } else {
    SquareMatrix<FloatComplex> out(m.size(), FloatComplex{});
    for (std::size_t r = 0; r < m.size(); ++r)
      for (std::size_t c = 0; c < m.size(); ++c) out(r, c) = m(r, c).to_complex();
    return out;
  }
}

using ExactMatrix = SquareMatrix<CycloScalar>;
using FloatMatrix = SquareMatrix<FloatComplex>;

}  // namespace dftalg
