#include "rbell/hankel.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace rbell {

SquareMatrixZ SquareMatrixZ::hankel(std::span<const Int> seq, std::size_t n) {
  if (seq.size() < 2 * n + 1)
    throw std::invalid_argument("hankel: need " + std::to_string(2 * n + 1) +
                                " sequence terms, got " + std::to_string(seq.size()));
  SquareMatrixZ h(n + 1);
  for (std::size_t r = 0; r <= n; ++r)
    for (std::size_t c = 0; c <= n; ++c) h(r, c) = seq[r + c];
  return h;
}

Int SquareMatrixZ::determinant() const {
  if (dim_ == 0) return 1;
  SquareMatrixZ a = *this;
  Int prev = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < dim_; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < dim_ && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == dim_) return 0;
      for (std::size_t c = 0; c < dim_; ++c) std::swap(a(k, c), a(swap_row, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < dim_; ++i) {
      for (std::size_t j = k + 1; j < dim_; ++j) {
        // a_ij <- (a_kk a_ij - a_ik a_kj) / prev, exact by Sylvester's identity
        Int v = a(k, k) * a(i, j);
        mpz_submul(v.get_mpz_t(), a(i, k).get_mpz_t(), a(k, j).get_mpz_t());
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  Int det = a(dim_ - 1, dim_ - 1);
  return negate ? Int(-det) : det;
}

Int hankel_det(std::span<const Int> seq, std::size_t n) {
  return SquareMatrixZ::hankel(seq, n).determinant();
}

std::vector<Int> hankel_transform(std::span<const Int> seq, std::size_t n_max) {
  std::vector<Int> out;
  out.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) out.push_back(hankel_det(seq, n));
  return out;
}

std::vector<Int> binomial_transform(std::span<const Int> seq, bool alternating) {
  std::vector<Int> out(seq.size());
  for (std::size_t n = 0; n < seq.size(); ++n) {
    Int acc = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      Int term = binomial(n, static_cast<std::int64_t>(i)) * seq[i];
      if (alternating && i % 2) acc -= term;
      else acc += term;
    }
    out[n] = std::move(acc);
  }
  return out;
}

}  // namespace rbell
