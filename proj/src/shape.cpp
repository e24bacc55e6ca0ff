#include "rbell/shape.hpp"

namespace rbell {

namespace {

template <typename Holds>
ShapeVerdict scan_triples(std::span<const Nat> seq, Holds holds) {
  for (std::size_t n = 0; n + 2 < seq.size(); ++n)
    if (!holds(n, seq[n], seq[n + 1], seq[n + 2])) return {false, n};
  return {};
}

}  // namespace

ShapeVerdict is_log_concave(std::span<const Nat> seq) {
  return scan_triples(seq, [](std::size_t, const Nat& a, const Nat& b, const Nat& c) {
    return a * c <= b * b;
  });
}

ShapeVerdict is_log_convex(std::span<const Nat> seq) {
  return scan_triples(seq, [](std::size_t, const Nat& a, const Nat& b, const Nat& c) {
    return a * c >= b * b;
  });
}

ShapeVerdict is_log_concave_over_factorial(std::span<const Nat> seq) {
  return scan_triples(seq, [](std::size_t n, const Nat& a, const Nat& b, const Nat& c) {
    Nat lhs = a * c;
    lhs *= static_cast<unsigned long>(n + 1);
    Nat rhs = b * b;
    rhs *= static_cast<unsigned long>(n + 2);
    return lhs <= rhs;
  });
}

ShapeVerdict is_unimodal(std::span<const Nat> seq) {
  std::size_t j = 1;
  while (j < seq.size() && seq[j - 1] <= seq[j]) ++j;
  for (; j < seq.size(); ++j)
    if (seq[j - 1] < seq[j]) return {false, j};
  return {};
}

bool has_internal_zeros(std::span<const Nat> seq) {
  bool seen_nonzero = false;
  bool gap = false;
  for (const auto& v : seq) {
    if (v != 0) {
      if (gap) return true;
      seen_nonzero = true;
    } else if (seen_nonzero) {
      gap = true;
    }
  }
  return false;
}

}  // namespace rbell
