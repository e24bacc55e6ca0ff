#pragma once

#include "rbell/exact.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace rbell {

/// Dense square integer matrix, row-major.
class SquareMatrixZ {
 public:
  explicit SquareMatrixZ(std::size_t dim) : dim_(dim), entries_(dim * dim, Int(0)) {}

  /// (n+1) x (n+1) Hankel matrix with entry (r,c) = seq[r+c]. Throws
  /// std::invalid_argument if seq has fewer than 2n+1 elements.
  static SquareMatrixZ hankel(std::span<const Int> seq, std::size_t n);

  std::size_t dim() const { return dim_; }
  Int& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }

  /// Exact determinant by one-step fraction-free (Bareiss) elimination with
  /// row pivoting on zero pivots.
  Int determinant() const;

 private:
  std::size_t dim_;
  std::vector<Int> entries_;
};

Int hankel_det(std::span<const Int> seq, std::size_t n);

/// [det H_0, ..., det H_{n_max}]
std::vector<Int> hankel_transform(std::span<const Int> seq, std::size_t n_max);

/// t_n = sum_i (+-1)^i C(n,i) a_i; the sign alternates when `alternating`.
std::vector<Int> binomial_transform(std::span<const Int> seq, bool alternating);

}  // namespace rbell
