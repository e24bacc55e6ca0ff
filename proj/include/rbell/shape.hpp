#pragma once

// Log-concavity, log-convexity and unimodality of exact sequences.

#include "rbell/exact.hpp"

#include <cstddef>
#include <optional>
#include <span>

namespace rbell {

struct ShapeVerdict {
  bool holds = true;
  /// For the log predicates: the smallest n with a_n a_{n+2} on the wrong
  /// side of a_{n+1}^2. For unimodality: the first index j past the peak
  /// with a_{j-1} < a_j.
  std::optional<std::size_t> first_violation;

  explicit operator bool() const { return holds; }
};

/// a_n a_{n+2} <= a_{n+1}^2 for all n.
ShapeVerdict is_log_concave(std::span<const Nat> seq);

/// a_n a_{n+2} >= a_{n+1}^2 for all n.
ShapeVerdict is_log_convex(std::span<const Nat> seq);

/// Log-concavity of (a_n / n!), tested as the integer inequality
///   (n+1) a_n a_{n+2} <= (n+2) a_{n+1}^2.
ShapeVerdict is_log_concave_over_factorial(std::span<const Nat> seq);

/// Weakly increasing up to some peak, weakly decreasing after it.
ShapeVerdict is_unimodal(std::span<const Nat> seq);

/// True if some zero sits strictly between two nonzero entries.
bool has_internal_zeros(std::span<const Nat> seq);

}  // namespace rbell
