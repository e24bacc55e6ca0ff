#include "rbell/exact.hpp"

#include <limits>
#include <stdexcept>

namespace rbell {

namespace {

void check_prime_argument(std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("nu_p: p must be >= 2");
#if !defined(NDEBUG) || defined(RBELL_CHECK_PRIME_ARGS)
  if (p < 1000000 && !is_small_prime(p))
    throw std::invalid_argument("nu_p: p = " + std::to_string(p) +
                                " is not prime");
#endif
}

}  // namespace

Nat binomial(std::uint64_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
  Nat out;
  mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(k));
  return out;
}

Nat factorial(std::uint64_t n) {
  Nat out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Nat falling_factorial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  Nat out = 1;
  for (std::uint64_t i = 0; i < k; ++i) out *= static_cast<unsigned long>(n - i);
  return out;
}

Nat double_factorial_odd(std::uint64_t n) {
  if (n % 2 != 0)
    throw std::invalid_argument("double_factorial_odd: odd argument " +
                                std::to_string(n));
  Nat out = 1;
  for (std::uint64_t f = 1; f + 1 <= n; f += 2) out *= static_cast<unsigned long>(f);
  return out;
}

Nat superfactorial(std::uint64_t n) {
  Nat out = 1;
  Nat fact = 1;
  for (std::uint64_t i = 1; i <= n; ++i) {
    fact *= static_cast<unsigned long>(i);
    out *= fact;
  }
  return out;
}

std::uint64_t nu_p(std::uint64_t p, const Nat& x) {
  check_prime_argument(p);
  if (x == 0) throw std::domain_error("nu_p: valuation of 0 is infinite");
  if (p == 2) return mpz_scan1(x.get_mpz_t(), 0);
  Nat rest;
  Nat prime = static_cast<unsigned long>(p);
  return mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t());
}

std::uint64_t nu_p(std::uint64_t p, std::uint64_t x) {
  check_prime_argument(p);
  if (x == 0) throw std::domain_error("nu_p: valuation of 0 is infinite");
  std::uint64_t e = 0;
  while (x % p == 0) {
    x /= p;
    ++e;
  }
  return e;
}

std::uint64_t digit_sum(std::uint64_t n, std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("digit_sum: base must be >= 2");
  std::uint64_t s = 0;
  for (; n > 0; n /= p) s += n % p;
  return s;
}

std::uint64_t nu_p_factorial(std::uint64_t p, std::uint64_t n) {
  check_prime_argument(p);
  std::uint64_t floor_sum = 0;
  for (std::uint64_t q = n / p; q > 0; q /= p) floor_sum += q;
  const std::uint64_t digit_form = (n - digit_sum(n, p)) / (p - 1);
  if (floor_sum != digit_form)
    throw std::logic_error("Legendre forms disagree for n = " +
                           std::to_string(n));
  return floor_sum;
}

bool is_small_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string to_string(const Int& x) { return x.get_str(10); }

std::string to_string(const Rat& x) { return x.get_str(10); }

std::uint64_t to_u64(const Nat& x) {
  if (x < 0 || mpz_sizeinbase(x.get_mpz_t(), 2) > 64)
    throw std::overflow_error("to_u64: value out of range");
  // mpz_get_ui is 64-bit on LP64.
  static_assert(sizeof(unsigned long) == 8);
  return mpz_get_ui(x.get_mpz_t());
}

}  // namespace rbell
