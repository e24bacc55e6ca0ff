#include "doctest.h"

#include "rbell/enumerate.hpp"
#include "rbell/exact.hpp"

#include <random>
#include <vector>

using namespace rbell;

namespace {

// Pascal's triangle with plain additions, independent of GMP's binomial.
std::vector<std::vector<Nat>> pascal(int rows) {
  std::vector<std::vector<Nat>> t(rows + 1);
  for (int n = 0; n <= rows; ++n) {
    t[n].assign(n + 1, Nat(1));
    for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
  }
  return t;
}

std::uint64_t divide_out(std::uint64_t p, Nat x) {
  std::uint64_t e = 0;
  while (x % static_cast<unsigned long>(p) == 0) {
    x /= static_cast<unsigned long>(p);
    ++e;
  }
  return e;
}

}  // namespace

TEST_CASE("binomial examples") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  const auto t = pascal(30);
  CHECK(t[30][15] == 155117520);
  CHECK(binomial(30, 15) == t[30][15]);
}

TEST_CASE("binomial satisfies Pascal's rule up to 100") {
  for (std::uint64_t n = 1; n <= 100; ++n)
    for (std::int64_t k = 1; k <= static_cast<std::int64_t>(n); ++k)
      REQUIRE(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("falling factorial") {
  CHECK(falling_factorial(5, 0) == 1);
  CHECK(falling_factorial(5, 3) == 60);
  CHECK(falling_factorial(3, 5) == 0);
  CHECK(falling_factorial(0, 0) == 1);
}

TEST_CASE("double factorial of odd numbers") {
  CHECK(double_factorial_odd(0) == 1);
  CHECK(double_factorial_odd(4) == 3);
  CHECK(double_factorial_odd(10) == 9 * 7 * 5 * 3 * 1);
  CHECK_THROWS_AS(double_factorial_odd(5), std::invalid_argument);

  for (std::uint64_t j = 0; j <= 50; ++j) {
    Nat lhs = double_factorial_odd(2 * j) * factorial(j);
    mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), j);
    REQUIRE(lhs == factorial(2 * j));
  }
}

TEST_CASE("superfactorial") {
  CHECK(superfactorial(0) == 1);
  CHECK(superfactorial(3) == 12);
  Nat product = 1;
  Nat fact = 1;
  for (int i = 1; i <= 5; ++i) {
    fact *= i;
    product *= fact;
  }
  CHECK(product == 34560);
  CHECK(superfactorial(5) == product);
}

TEST_CASE("nu_p examples and errors") {
  CHECK(nu_p(2, Nat(48)) == 4);
  CHECK(nu_p(3, Nat(10)) == 0);
  CHECK(nu_p(2, std::uint64_t{48}) == 4);

  // B_{7,<=2} from the partition oracle
  const Nat b7 = count_partitions(7, Constraint::at_most(2));
  CHECK(b7 == 232);
  CHECK(nu_p(2, b7) == divide_out(2, b7));
  CHECK(nu_p(2, b7) == 3);

  CHECK_THROWS_AS(nu_p(2, Nat(0)), std::domain_error);
  CHECK_THROWS_AS(nu_p(1, Nat(5)), std::invalid_argument);
  CHECK_THROWS_AS(nu_p(0, std::uint64_t{5}), std::invalid_argument);
  CHECK_THROWS_AS(nu_p(4, Nat(16)), std::invalid_argument);
}

TEST_CASE("nu_p is additive over products") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<unsigned long> dist(1, 1'000'000'000);
  for (std::uint64_t p : {2, 3, 5, 7, 11}) {
    for (int trial = 0; trial < 200; ++trial) {
      Nat a = dist(rng);
      Nat b = dist(rng);
      a *= dist(rng);
      // force some high powers
      Nat pk;
      mpz_ui_pow_ui(pk.get_mpz_t(), p, dist(rng) % 40);
      b *= pk;
      REQUIRE(nu_p(p, Nat(a * b)) == nu_p(p, a) + nu_p(p, b));
    }
  }
}

TEST_CASE("Legendre formula") {
  CHECK(nu_p_factorial(2, 10) == 8);
  CHECK(nu_p_factorial(5, 4) == 0);
  // nu_3(27!) by dividing out 3 from the full factorial
  Nat f = 1;
  for (int i = 2; i <= 27; ++i) f *= i;
  CHECK(divide_out(3, f) == 13);
  CHECK(nu_p_factorial(3, 27) == 13);

  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 101, 199})
    for (std::uint64_t n = 0; n <= 200; ++n) {
      REQUIRE(nu_p_factorial(p, n) == (n - digit_sum(n, p)) / (p - 1));
      if (n > 0) REQUIRE(nu_p_factorial(p, n) == nu_p(p, factorial(n)));
    }
}

TEST_CASE("conversions") {
  CHECK(to_string(Nat(12345)) == "12345");
  Rat half(3, 6);
  half.canonicalize();
  CHECK(to_string(half) == "1/2");
  CHECK(to_u64(Nat(42)) == 42);
  Nat big;
  mpz_ui_pow_ui(big.get_mpz_t(), 2, 80);
  CHECK_THROWS_AS(to_u64(big), std::overflow_error);
}
