#pragma once

#include "rbell/poly.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace rbell {

/// p, p', -rem(p, p'), ... down to a constant. Each member is scaled to a
/// primitive integer polynomial by a positive factor, which keeps the sign
/// pattern intact and the coefficients small.
class SturmChain {
 public:
  /// Throws std::invalid_argument for the zero polynomial.
  explicit SturmChain(const DensePolyQ& p);

  const std::vector<DensePolyQ>& polynomials() const { return chain_; }

  std::size_t variations_at(const Rat& x) const;
  std::size_t variations_at_neg_infinity() const;
  std::size_t variations_at_pos_infinity() const;

  /// Distinct real roots in the half-open interval (a, b], a < b. Exact only
  /// when the input is squarefree (otherwise counts distinct roots of the
  /// squarefree part via the gcd tail).
  std::size_t count_roots(const Rat& a, const Rat& b) const;
  std::size_t count_real_roots() const;
  /// Distinct roots in (x, +inf).
  std::size_t count_roots_above(const Rat& x) const;

 private:
  std::vector<DensePolyQ> chain_;
};

/// p / gcd(p, p'), normalised to a primitive integer polynomial.
DensePolyQ squarefree_part(const DensePolyQ& p);

struct RootReport {
  bool real_rooted = false;
  /// Set only when real_rooted: every root is <= 0.
  std::optional<bool> all_nonpositive;
  std::size_t degree = 0;
  std::size_t zero_multiplicity = 0;
  std::size_t squarefree_degree = 0;
  std::size_t distinct_real_roots = 0;
  std::size_t distinct_positive_roots = 0;
};

/// Real-rootedness and sign of the roots of p. Strips the factor x^r first
/// (a root at 0 counts as nonpositive), then runs a Sturm chain on the
/// squarefree part. Throws std::invalid_argument for p == 0.
RootReport real_roots_nonpositive(const DensePolyZ& p);

}  // namespace rbell
