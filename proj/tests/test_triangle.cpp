#include "doctest.h"

#include "rbell/enumerate.hpp"
#include "rbell/triangle.hpp"

#include <vector>

using namespace rbell;

namespace {

std::vector<TriangleSpec> all_families(unsigned m_max) {
  std::vector<TriangleSpec> out;
  for (unsigned m = 1; m <= m_max; ++m) {
    out.push_back(TriangleSpec::second_at_most(m));
    out.push_back(TriangleSpec::first_at_most(m));
    out.push_back(TriangleSpec::second_at_least(m));
    out.push_back(TriangleSpec::first_at_least(m));
  }
  return out;
}

std::vector<Nat> oracle_histogram(const TriangleSpec& spec, int n) {
  return spec.is_second_kind() ? partition_histogram(n, spec.constraint())
                               : cycle_perm_histogram(n, spec.constraint());
}

std::vector<Nat> nats(std::initializer_list<long> xs) {
  std::vector<Nat> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("family names") {
  const auto spec = TriangleSpec::parse("B-atmost-3");
  CHECK(spec.kind() == Kind::SecondKind);
  CHECK(spec.bound() == Bound::AtMost);
  CHECK(spec.m() == 3);
  for (const auto& f : all_families(6)) CHECK(TriangleSpec::parse(f.name()) == f);
  CHECK_THROWS_AS(TriangleSpec::parse("C-atmost-3"), std::invalid_argument);
  CHECK_THROWS_AS(TriangleSpec::parse("B-between-3"), std::invalid_argument);
  CHECK_THROWS_AS(TriangleSpec::parse("B-atmost-0"), std::invalid_argument);
  CHECK_THROWS_AS(TriangleSpec::parse("B-atmost-"), std::invalid_argument);
  CHECK_THROWS_AS(TriangleSpec::parse("B-atmost-3x"), std::invalid_argument);
  CHECK_THROWS_AS(TriangleSpec::parse("Batmost3"), std::invalid_argument);
}

TEST_CASE("stirling point values") {
  // partitions of [4] with blocks <= 3 and exactly two blocks
  const Nat two_blocks = count_partitions(4, Constraint::at_most(3), 2);
  CHECK(two_blocks == 7);
  CHECK(stirling(TriangleSpec::second_at_most(3), 4, 2) == two_blocks);
  for (unsigned m = 1; m <= 5; ++m) CHECK(stirling(TriangleSpec::first_at_most(m), 0, 0) == 1);
  CHECK(stirling(TriangleSpec::second_at_least(3), 4, 1) == 1);
  CHECK(stirling(TriangleSpec::second_at_least(1), 4, 2) == count_partitions(4, Constraint::at_least(1), 2));
  CHECK(stirling(TriangleSpec::second_at_least(1), 4, 2) == 7);
}

TEST_CASE("table boundary conditions") {
  for (const auto& spec : all_families(4)) {
    TriangleTable t(spec);
    CHECK(t.at(0, 0) == 1);
    for (int n = 1; n <= 12; ++n) CHECK(t.at(n, 0) == 0);
    CHECK(t.at(5, 6) == 0);
    CHECK(t.at(5, -1) == 0);
    CHECK(t.at(-1, 0) == 0);
    CHECK(t.rows_filled() == 13);
    const TriangleTable& frozen = t;
    CHECK(frozen.at(12, 3) == t.at(12, 3));
    CHECK_THROWS_AS(frozen.at(13, 3), std::out_of_range);
  }
}

TEST_CASE("row sums") {
  CHECK(row_sum(TriangleSpec::second_at_most(3), 4) == 14);
  CHECK(row_sum(TriangleSpec::first_at_most(3), 4) == 18);
  CHECK(row_sum(TriangleSpec::second_at_most(2), 0) == 1);
  CHECK(row_sum(TriangleSpec::second_at_most(2), 1) == 1);
  const Nat derangements4 = count_cycle_perms(4, Constraint::at_least(2));
  CHECK(derangements4 == 9);
  CHECK(row_sum(TriangleSpec::first_at_least(2), 4) == derangements4);
}

TEST_CASE("engine matches the enumeration oracle for n <= 8") {
  for (const auto& spec : all_families(5)) {
    TriangleTable table(spec);
    for (int n = 0; n <= 8; ++n) {
      const auto hist = oracle_histogram(spec, n);
      for (int k = 0; k <= n; ++k) {
        INFO(spec.name() << " n=" << n << " k=" << k);
        REQUIRE(table.at(n, k) == hist[k]);
      }
    }
  }
}

TEST_CASE("bell_seq_fast examples") {
  // involutions of [n], n <= 6, by enumeration
  std::vector<Nat> involutions;
  for (int n = 0; n <= 6; ++n) involutions.push_back(count_partitions(n, Constraint::at_most(2)));
  CHECK(involutions == nats({1, 1, 2, 4, 10, 26, 76}));
  CHECK(bell_seq_fast(TriangleSpec::second_at_most(2), 6) == involutions);

  std::vector<Nat> derangements;
  for (int n = 0; n <= 5; ++n) derangements.push_back(count_cycle_perms(n, Constraint::at_least(2)));
  CHECK(derangements == nats({1, 0, 1, 2, 9, 44}));
  CHECK(bell_seq_fast(TriangleSpec::first_at_least(2), 5) == derangements);

  CHECK(bell_seq_fast(TriangleSpec::second_at_most(3), 3) == nats({1, 1, 2, 5}));
}

TEST_CASE("three computation paths agree for n <= 60") {
  constexpr std::size_t kN = 60;
  for (const auto& spec : all_families(5)) {
    INFO(spec.name());
    TriangleTable table(spec);
    std::vector<Nat> tri;
    for (std::size_t n = 0; n <= kN; ++n) tri.push_back(table.row_sum(n));
    REQUIRE(bell_seq_fast(spec, kN) == tri);
    if (spec.m() >= 2) {
      const auto reduced = spec.is_at_most() ? reduce_largest_block_seq(spec, kN)
                                             : reduce_associated_seq(spec, kN);
      REQUIRE(reduced == tri);
    }
  }
}

TEST_CASE("streamed rows equal table rows") {
  for (const auto& spec : all_families(4)) {
    TriangleTable table(spec);
    for_each_triangle_row(spec, 30, [&](std::size_t n, const std::vector<Nat>& row) {
      REQUIRE(row == table.row(n));
    });
  }
}

TEST_CASE("first-sum form of the recurrences") {
  // T(n+1,k) = sum_j c(n,j) T(n-j,k-1), j over admissible block sizes minus one
  for (const auto& spec : all_families(4)) {
    TriangleTable t(spec);
    for (int n = 0; n < 25; ++n)
      for (int k = 1; k <= n + 1; ++k) {
        Nat acc = 0;
        for (int j = 0; j <= n; ++j) {
          if (!spec.constraint().admits(static_cast<unsigned>(j + 1))) continue;
          const Nat c = spec.is_second_kind() ? binomial(n, j) : falling_factorial(n, j);
          acc += c * t.at(n - j, k - 1);
        }
        REQUIRE(t.at(n + 1, k) == acc);
      }
  }
}

TEST_CASE("involution closed form") {
  CHECK(involution_closed_form(0) == 1);
  CHECK(involution_closed_form(4) == count_partitions(4, Constraint::at_most(2)));
  CHECK(involution_closed_form(4) == 10);
  CHECK(involution_closed_form(7) == count_partitions(7, Constraint::at_most(2)));
  CHECK(involution_closed_form(7) == 232);
  const auto seq = bell_seq_fast(TriangleSpec::second_at_most(2), 200);
  TriangleTable table(TriangleSpec::second_at_most(2));
  for (std::size_t n = 0; n <= 200; ++n) {
    REQUIRE(involution_closed_form(n) == seq[n]);
    if (n <= 80) REQUIRE(table.row_sum(n) == seq[n]);
  }
}

TEST_CASE("largest block reduction") {
  CHECK(reduce_largest_block(TriangleSpec::second_at_most(3), 4) == 14);
  CHECK(reduce_largest_block(TriangleSpec::first_at_most(3), 4) == 18);
  CHECK(reduce_largest_block(TriangleSpec::second_at_most(2), 5) ==
        count_partitions(5, Constraint::at_most(2)));
  CHECK(reduce_largest_block(TriangleSpec::second_at_most(2), 5) == 26);
  CHECK_THROWS_AS(reduce_largest_block(TriangleSpec::second_at_most(1), 4), std::invalid_argument);
  CHECK_THROWS_AS(reduce_largest_block(TriangleSpec::second_at_least(3), 4), std::invalid_argument);
}

TEST_CASE("associated reduction") {
  CHECK(reduce_associated(TriangleSpec::second_at_least(3), 4) == 1);
  CHECK(reduce_associated(TriangleSpec::second_at_least(2), 3) == 1);
  CHECK(reduce_associated(TriangleSpec::first_at_least(2), 4) == 9);
  CHECK_THROWS_AS(reduce_associated(TriangleSpec::first_at_least(1), 4), std::invalid_argument);
  CHECK_THROWS_AS(reduce_associated(TriangleSpec::first_at_most(3), 4), std::invalid_argument);
}

TEST_CASE("classical Bell numbers") {
  CHECK(classical_bell(10) == nats({1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975}));
  CHECK(classical_bell(12) == bell_seq_fast(TriangleSpec::second_at_least(1), 12));
}

TEST_CASE("unconstrained limits coincide") {
  for (unsigned n = 0; n <= 30; ++n) {
    const unsigned m = n == 0 ? 1 : n;
    for (Kind kind : {Kind::SecondKind, Kind::FirstKind}) {
      TriangleTable at_most(TriangleSpec(kind, Constraint::at_most(m)));
      TriangleTable at_least(TriangleSpec(kind, Constraint::at_least(1)));
      REQUIRE(at_most.row(n) == at_least.row(n));
    }
  }
}

TEST_CASE("orthogonality of the classical triangles") {
  TriangleTable s2(TriangleSpec::second_at_least(1));
  TriangleTable s1(TriangleSpec::first_at_least(1));
  for (int n = 0; n <= 20; ++n)
    for (int j = 0; j <= 20; ++j) {
      Int acc = 0;
      for (int k = 0; k <= n; ++k) {
        Int term = s2.at(n, k) * s1.at(k, j);
        if ((n - k) % 2) term = -term;
        acc += term;
      }
      REQUIRE(acc == (n == j ? 1 : 0));
    }
}

TEST_CASE("restricted Bell polynomials") {
  const auto hist = partition_histogram(3, Constraint::at_most(2));
  // {1,2,3} with blocks <= 2: three singletons, or one pair plus a singleton (3 ways)
  CHECK(hist == nats({0, 0, 3, 1}));
  const auto p = bell_poly_restricted(2, 3);
  CHECK(p.coeffs() == hist);
  for (unsigned m = 1; m <= 4; ++m) CHECK(bell_poly_restricted(m, 0).coeffs() == nats({1}));
  CHECK(bell_poly_restricted(3, 4).evaluate(Int(1)) == 14);
  // B_{4,<=2}(x) = 3x^2 + 6x^3 + x^4
  CHECK(bell_poly_restricted(2, 4).coeffs() ==
        std::vector<Nat>(partition_histogram(4, Constraint::at_most(2))));
  CHECK(bell_poly_restricted(2, 4).coeffs() == nats({0, 0, 3, 6, 1}));
}

TEST_CASE("restricted Bell polynomial recurrence") {
  const DensePolyZ x = DensePolyZ::monomial(1);
  for (unsigned m = 1; m <= 5; ++m) {
    TriangleTable t(TriangleSpec::second_at_most(m));
    for (std::size_t n = 0; n <= 40; ++n) {
      const auto bn = row_polynomial(t, n);
      DensePolyZ rhs = x * bn + x * bn.derivative();
      if (n >= m) rhs -= x * row_polynomial(t, n - m) * binomial(n, m);
      REQUIRE(row_polynomial(t, n + 1) == rhs);
    }
  }
}

TEST_CASE("derangement recurrences") {
  const auto d = bell_seq_fast(TriangleSpec::first_at_least(2), 100);
  for (std::size_t n = 1; n <= 100; ++n) {
    Int rhs = d[n - 1] * static_cast<unsigned long>(n);
    rhs += n % 2 ? -1 : 1;
    REQUIRE(d[n] == rhs);
    if (n >= 2) REQUIRE(d[n] == (d[n - 1] + d[n - 2]) * static_cast<unsigned long>(n - 1));
  }
}
