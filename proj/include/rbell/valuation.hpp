#pragma once

// p-adic valuation profiles, residue sequences and declarative pattern
// checks over the constrained Bell and factorial sequences.

#include "rbell/exact.hpp"
#include "rbell/family.hpp"
#include "rbell/report.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rbell {

struct ValuationProfile {
  std::uint64_t p = 2;
  TriangleSpec family = TriangleSpec::second_at_least(1);
  /// nu_p(s_n) for n in [0, n_max]; empty where s_n == 0.
  std::vector<std::optional<std::uint64_t>> values;
  std::vector<std::size_t> undefined_at;

  std::size_t n_max() const { return values.empty() ? 0 : values.size() - 1; }
};

ValuationProfile valuation_profile(std::uint64_t p, const TriangleSpec& family, std::size_t n_max);
/// Same from precomputed values s_0..s_N, so one sequence can feed several
/// primes.
ValuationProfile valuation_profile(std::uint64_t p, const TriangleSpec& family,
                                   std::span<const Nat> seq);

enum class RuleKind {
  Const,      ///< c
  AffineK,    ///< k + c
  NuShift,    ///< nu_p(k) + c
  NuAffineK,  ///< nu_p(k) + k + c
  AtLeast,    ///< >= c, checked as an inequality
  Unknown,    ///< summarized, never asserted
};

/// Rule for the residue class r, where n = M k + r. Indices with k < k_min
/// are outside the rule's range.
struct ClassRule {
  RuleKind kind = RuleKind::Unknown;
  std::int64_t c = 0;
  std::uint64_t k_min = 0;

  static ClassRule constant(std::int64_t c, std::uint64_t k_min = 0) { return {RuleKind::Const, c, k_min}; }
  static ClassRule affine_k(std::int64_t c, std::uint64_t k_min = 0) { return {RuleKind::AffineK, c, k_min}; }
  static ClassRule nu_shift(std::int64_t c, std::uint64_t k_min = 1) { return {RuleKind::NuShift, c, k_min}; }
  static ClassRule nu_affine_k(std::int64_t c, std::uint64_t k_min = 1) { return {RuleKind::NuAffineK, c, k_min}; }
  static ClassRule at_least(std::int64_t c, std::uint64_t k_min = 0) { return {RuleKind::AtLeast, c, k_min}; }
  static ClassRule unknown() { return {RuleKind::Unknown, 0, 0}; }

  /// Predicted exact value at k; nullopt for AtLeast and Unknown.
  std::optional<std::int64_t> predict(std::uint64_t p, std::uint64_t k) const;
  bool operator==(const ClassRule&) const = default;
};

std::string to_string(RuleKind kind);
/// Throws std::invalid_argument on an unknown name.
RuleKind parse_rule_kind(const std::string& name);

struct PatternSpec {
  std::string name;
  std::uint64_t p = 2;
  /// When set, check_pattern refuses profiles of another family.
  std::optional<TriangleSpec> family;
  std::uint64_t modulus = 1;
  /// rules[r] for r in [0, modulus)
  std::vector<ClassRule> rules;
  /// Suggested range for runs that do not give one.
  std::size_t n_max = 2000;

  /// Throws std::invalid_argument unless every class has exactly one rule,
  /// nu rules start at k >= 1 and p >= 2.
  void validate() const;

  std::string to_json(int indent = 2) const;
  /// Parses and validates; std::invalid_argument on malformed input.
  static PatternSpec from_json(const std::string& text);

  bool operator==(const PatternSpec&) const = default;
};

/// Per-class verification of a profile. Throws std::invalid_argument if the
/// profile covers fewer than three full periods of the modulus or if p or
/// the family disagree with the pattern.
IdentityReport check_pattern(const ValuationProfile& profile, const PatternSpec& pattern);

/// The valuation statements proved or listed as facts, as data.
std::vector<PatternSpec> builtin_patterns();
/// Throws std::invalid_argument for an unknown name.
PatternSpec builtin_pattern(const std::string& name);

// ---------------------------------------------------------------------------
// Residues and periods

/// s_n mod M for n in [0, n_max], computed in modular arithmetic.
/// Throws std::invalid_argument for M < 2.
std::vector<std::uint64_t> residues_mod(const TriangleSpec& spec, std::uint64_t modulus, std::size_t n_max);

class window_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Evidence for periodicity on a finite window; a candidate, not a proof.
struct PeriodReport {
  std::uint64_t modulus = 0;
  std::size_t n_lo = 0;
  std::size_t n_hi = 0;
  /// Minimal period consistent with the whole window; empty when fewer than
  /// three repetitions fit.
  std::optional<std::size_t> period;
  /// One period starting at n_lo.
  std::vector<std::uint64_t> block;
  std::size_t repetitions = 0;

  bool found() const { return period.has_value(); }
};

inline constexpr std::size_t kMinRepetitions = 3;

/// `residues` holds s_n mod M for n = n_lo, n_lo+1, ... Throws window_error
/// when the window is shorter than 3M.
PeriodReport detect_period(std::span<const std::uint64_t> residues, std::uint64_t modulus,
                           std::size_t n_lo = 0);

/// A periodicity statement: residues of `family` mod `modulus` from n_lo on
/// repeat `block`.
struct PeriodClaim {
  std::string name;
  TriangleSpec family;
  std::uint64_t modulus;
  std::size_t n_lo;
  std::vector<std::uint64_t> block;
};

std::vector<PeriodClaim> builtin_period_claims();

/// Detects the period over [claim.n_lo, n_max] and compares with the claim.
IdentityReport check_period_claim(const PeriodClaim& claim, std::size_t n_max, PeriodReport* detail = nullptr);

// ---------------------------------------------------------------------------

/// Report-only scan of the conjectured rules for nu_2(B_{n,>=2}) on
/// n == 1 mod 3, with one note per rule and the unexplained indices.
IdentityReport scan_conjecture_B_assoc(std::size_t n_max);
/// Same on a precomputed sequence B_{0,>=2}..B_{N,>=2}.
IdentityReport scan_conjecture_B_assoc(std::span<const Nat> b_ge2);

}  // namespace rbell
