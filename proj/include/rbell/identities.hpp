#pragma once

// Both-sides evaluation of the combinatorial identities satisfied by the
// constrained Bell and factorial numbers. Every check returns an
// IdentityReport and never prints; exact comparison throughout.

#include "rbell/exact.hpp"
#include "rbell/family.hpp"
#include "rbell/report.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace rbell {

// ---------------------------------------------------------------------------
// Spivey-type convolution machinery

/// A block that takes `from_first` elements from the first part (size n)
/// and size - from_first from the second (size m).
struct MixedBlockType {
  unsigned size;
  unsigned from_first;
  /// Slot index f(size, from_first) = 2 + from_first + C(size-1, 2);
  /// slots 1 and 2 hold the element counts of the two pure parts.
  std::size_t slot;
};

std::size_t mixed_slot(unsigned size, unsigned from_first);

/// Mixed block types admissible under `c` with 2 <= size <= max_size,
/// ordered by (size, from_first).
std::vector<MixedBlockType> mixed_block_types(Constraint c, unsigned max_size);

/// One index tuple of the blocks-of-size-at-most-3 convolution: i and j are
/// the numbers of elements of each part that sit in mixed blocks and k the
/// number of mixed pairs. a(i,j) = (2i - j - k)/3 counts mixed triples with
/// two elements from the first part.
struct SpiveyTerm {
  int i;
  int j;
  int k;

  /// (2i - j - k)/3 when it is a nonnegative integer.
  std::optional<int> a_ij() const;
  /// (2j - i - k)/3 when it is a nonnegative integer.
  std::optional<int> a_ji() const;
  /// i + j + k == 0 mod 3, equivalent to both a-values being integers.
  bool congruent() const { return (i + j + k) % 3 == 0; }
};

enum class TermFilter {
  /// keep k == -i-j (mod 3) only
  Congruence,
  /// keep every k and skip tuples whose a-values are fractional
  SkipFractional,
};

struct Restricted3Sums {
  /// binomial-product form
  Int binomial_form;
  /// factorial-quotient form
  Rat factorial_form;
  std::size_t terms = 0;
};

/// Evaluates both displayed forms of the B_{n+m,<=3} convolution. `b3`
/// must hold B_{0,<=3} .. B_{max(n,m),<=3}.
Restricted3Sums spivey_restricted3_sums(int n, int m, std::span<const Nat> b3,
                                        TermFilter filter = TermFilter::Congruence);

struct GeneralSpiveySum {
  Rat value;
  std::size_t terms = 0;
};

inline constexpr std::size_t kDefaultCompositionCap = 20'000'000;

/// n! m! sum over composition vectors X of
///   s_{a1} s_{a2} / (a1! a2!) * prod_t w_t^{a_t} / a_t!
/// where t runs over mixed block types, a1 and a2 are the leftover element
/// counts, and w_t = 1/(j! (i-j)!) for the second kind or C(i,j)/i for the
/// first kind. `seq` must hold s_0 .. s_{max(n,m)} for the family.
/// Throws budget_error once more than `cap` vectors have been visited.
GeneralSpiveySum spivey_general_sum(const TriangleSpec& family, unsigned n, unsigned m,
                                    std::span<const Nat> seq,
                                    std::size_t cap = kDefaultCompositionCap);

/// The explicit k = 3 form for A_{n+m,<=3} with summation indices i, j, l.
Rat factorial_restricted3_display(int n, int m, std::span<const Nat> a3);

// ---------------------------------------------------------------------------
// Identity checks

/// B_{n+m} = sum_k sum_j j^{n-k} S(m,j) C(n,k) B_k
IdentityReport check_spivey_classic(int n, int m);
IdentityReport check_spivey_classic_range(int nm_max);

/// B_{n1+n2,<=2} = sum_k k! C(n1,k) C(n2,k) B_{n1-k,<=2} B_{n2-k,<=2}
IdentityReport check_involution_convolution(int n1, int n2);
IdentityReport check_involution_convolution_range(int nm_max);

/// Both forms of the blocks-of-size-at-most-3 convolution vs the engine and
/// vs each other.
IdentityReport check_spivey_restricted3(int n, int m);
IdentityReport check_spivey_restricted3_range(int nm_max);

/// Composition-set convolution for any family vs the engine. For A-atmost-3
/// it is also compared with the explicit display; for B-atmost-2 with the
/// involution convolution.
IdentityReport check_spivey_general(const TriangleSpec& family, int n, int m,
                                    std::size_t cap = kDefaultCompositionCap);
IdentityReport check_spivey_general_range(const TriangleSpec& family, int nm_max,
                                          std::size_t cap = kDefaultCompositionCap);

/// sum_i (-1)^i C(n,i) B_{i,<=2} = (n-1)!! (n even), 0 (n odd)
IdentityReport check_binomial_transform_involutions(int n_max);

/// (a) B_n = B_{n,>=2} + B_{n+1,>=2}
/// (b) B_{n,>=2} = sum_i (-1)^i C(n,i) B_{n-i}
/// (c) B_{n,>=k} = B_n - sum_{i>=1} C(n,i) B_{i,<=k-1} B_{n-i,>=k}, 2 <= k <= k_max
IdentityReport check_assoc_bell_relations(int n_max, int k_max = 5);

/// A_{n,>=k} = (n-1) A_{n-1,>=k} + (n-1)_{k-1} A_{n-k,>=k}, 1 <= n <= n_max
IdentityReport check_genaigner(int k, int n_max);

/// D_n = n D_{n-1} + (-1)^n and D_n = (n-1)(D_{n-1} + D_{n-2})
IdentityReport check_derangement_recurrences(int n_max);

/// B_{n,<=2} == B_{n+5,<=2} (mod 10) for n > 1 and
/// B_{n,<=3} == B_{n+5,<=3} (mod 10) for n > 3.
IdentityReport check_mezo_congruences(int n_max);

/// The cross-family variant B_{n,<=3} == B_{n+5,<=2} (mod 10), n > 3.
/// Report-only: it does not hold.
IdentityReport scan_mezo_cross_family(int n_max);

/// sum_k S(n,k) c(k,j) (-1)^{n-k} = [n == j]
IdentityReport check_orthogonality(int n_max);

/// Hankel transforms of B_{n,<=2}, B_{n,>=2} and the aerated double
/// factorials are the superfactorials; that of A_{n,>=2} is prod (i!)^2.
IdentityReport check_hankel_transforms(int order);

/// B_{n,<=m} and A_{n,<=m} log-convex, divided by n! log-concave.
IdentityReport check_log_shapes(int m_max, int n_max);

/// EGFs of all four families for m in [m_min, m_max].
IdentityReport check_egfs(int m_max, int order, int m_min = 1);

}  // namespace rbell
