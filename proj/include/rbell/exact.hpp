#pragma once

// Exact integer/rational arithmetic and elementary number theory.
//
// Nat and Rat are thin aliases over GMP's C++ classes. A Nat is a
// nonnegative integer by contract: every function in this library that
// returns a Nat guarantees a value >= 0. Int is used where a signed result
// is meaningful (determinants, alternating sums).

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace rbell {

using Nat = mpz_class;
using Int = mpz_class;
using Rat = mpq_class;

/// C(n, k); zero when k < 0 or k > n.
Nat binomial(std::uint64_t n, std::int64_t k);

Nat factorial(std::uint64_t n);

/// n (n-1) ... (n-k+1). Empty product for k == 0, zero once a factor hits 0.
Nat falling_factorial(std::uint64_t n, std::uint64_t k);

/// (n-1)!! for even n, i.e. (2j)! / (j! 2^j) for n = 2j. Throws
/// std::invalid_argument on odd n (the aerated sequence is 0 there and the
/// caller decides what to do with it).
Nat double_factorial_odd(std::uint64_t n);

/// prod_{i=0}^{n} i!
Nat superfactorial(std::uint64_t n);

/// Largest e with p^e | x. Throws std::domain_error for x == 0 and
/// std::invalid_argument for p < 2 (or composite p below 10^6 when prime
/// checking is compiled in).
std::uint64_t nu_p(std::uint64_t p, const Nat& x);

/// Same for a machine integer.
std::uint64_t nu_p(std::uint64_t p, std::uint64_t x);

/// Legendre: nu_p(n!) as sum floor(n / p^r). Cross-checked internally
/// against (n - s_p(n)) / (p - 1); a mismatch is a logic_error.
std::uint64_t nu_p_factorial(std::uint64_t p, std::uint64_t n);

/// Sum of base-p digits of n.
std::uint64_t digit_sum(std::uint64_t n, std::uint64_t p);

/// Trial division; intended for small moduli only.
bool is_small_prime(std::uint64_t p);

/// Full decimal representation.
std::string to_string(const Int& x);
std::string to_string(const Rat& x);

/// Exact conversion; throws std::overflow_error if x does not fit.
std::uint64_t to_u64(const Nat& x);

}  // namespace rbell
