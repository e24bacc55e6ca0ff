#pragma once

// Constrained Stirling triangles and their row sums.
//
// Every family is filled from the three-term recurrences
//   AtMost m,  second kind: T(n+1,k) = k T(n,k) + T(n,k-1) - C(n,m) T(n-m,k-1)
//   AtMost m,  first kind:  T(n+1,k) = n T(n,k) + T(n,k-1) - n!/(n-m)! T(n-m,k-1)
//   AtLeast m, second kind: T(n+1,k) = k T(n,k) + C(n,m-1) T(n-m+1,k-1)
//   AtLeast m, first kind:  T(n+1,k) = n T(n,k) + n!/(n-m+1)! T(n-m+1,k-1)
// with T(0,0) = 1 and T(n,0) = 0 for n >= 1.
//
// Thread safety: a TriangleTable is single-writer. Fill it first (fill_to)
// and then share it read-only, or give each worker its own table.

#include "rbell/exact.hpp"
#include "rbell/family.hpp"
#include "rbell/poly.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace rbell {

class TriangleTable {
 public:
  explicit TriangleTable(TriangleSpec spec);

  const TriangleSpec& spec() const { return spec_; }

  /// Ensures rows 0..n are present.
  void fill_to(std::size_t n);

  /// Number of rows currently stored (the high-water mark).
  std::size_t rows_filled() const { return rows_.size(); }

  /// T(n,k), filling rows on demand; zero outside 0 <= k <= n.
  const Nat& at(std::int64_t n, std::int64_t k);

  /// Read-only lookup; requires row n to be filled already.
  const Nat& at(std::int64_t n, std::int64_t k) const;

  /// Row n as T(n,0..n).
  const std::vector<Nat>& row(std::size_t n);

  Nat row_sum(std::size_t n);

 private:
  TriangleSpec spec_;
  std::vector<std::vector<Nat>> rows_;
};

/// Computes row n+1 from row n and the single lagged row the recurrence
/// needs (index n-m for AtMost, n-m+1 for AtLeast). `lagged` is empty when
/// that index is negative.
std::vector<Nat> next_triangle_row(const TriangleSpec& spec, std::size_t n,
                                   const std::vector<Nat>& current,
                                   const std::vector<Nat>& lagged);

/// Index of the lagged row next_triangle_row needs for step n -> n+1, or -1.
std::int64_t lagged_row_index(const TriangleSpec& spec, std::size_t n);

/// Streams rows 0..n_max through `visit(n, row)` keeping only the window
/// the recurrence needs.
void for_each_triangle_row(const TriangleSpec& spec, std::size_t n_max,
                           const std::function<void(std::size_t, const std::vector<Nat>&)>& visit);

Nat stirling(const TriangleSpec& spec, std::int64_t n, std::int64_t k);

/// B_{n,<=m}, A_{n,<=m}, B_{n,>=m} or A_{n,>=m} depending on the family.
Nat row_sum(const TriangleSpec& spec, std::size_t n);

/// [s_0, ..., s_{n_max}] from single-sequence recurrences:
///   B AtMost:  B_n = sum_{k<m} C(n-1,k) B_{n-1-k}
///   A AtMost:  A_n = sum_{j<m} (n-1)_j A_{n-1-j}
///   A AtLeast: A_n = (n-1) A_{n-1} + (n-1)_{m-1} A_{n-m}
/// B AtLeast has no single-sequence recurrence of this shape; it streams
/// triangle rows with a rolling window.
std::vector<Nat> bell_seq_fast(const TriangleSpec& spec, std::size_t n_max);

/// Classical Bell numbers B_0..B_{n_max} from the Bell (Aitken) triangle.
std::vector<Nat> classical_bell(std::size_t n_max);

/// sum_j C(n,2j) (2j)! / (2^j j!), the number of involutions of [n].
Nat involution_closed_form(std::size_t n);

/// Largest-block reduction for an AtMost family:
///   s_{n,<=m} = sum_i n! / (i! w^i (n-im)!) s_{n-im,<=m-1},  w = m! or m,
/// recursing down to s_{n,<=1} = 1. Throws std::invalid_argument if the
/// family is not AtMost or m < 2.
Nat reduce_largest_block(const TriangleSpec& spec, std::size_t n);
std::vector<Nat> reduce_largest_block_seq(const TriangleSpec& spec, std::size_t n_max);

/// Associated reduction for an AtLeast family:
///   s_{n,>=k} = s_{n,>=k-1} - sum_{i>=1} n! / (w^i (n-(k-1)i)! i!) s_{n-(k-1)i,>=k},
/// w = (k-1)! or (k-1), solved for increasing n starting from the classical
/// sequence at k = 1. Throws std::invalid_argument if not AtLeast or k < 2.
Nat reduce_associated(const TriangleSpec& spec, std::size_t n);
std::vector<Nat> reduce_associated_seq(const TriangleSpec& spec, std::size_t n_max);

/// B_{n,<=m}(x) = sum_k T(n,k) x^k for the second kind, AtMost m.
DensePolyZ bell_poly_restricted(unsigned m, std::size_t n);

/// Row n of any table as a polynomial in x.
DensePolyZ row_polynomial(TriangleTable& table, std::size_t n);

}  // namespace rbell
