#include "doctest.h"

#include "rbell/enumerate.hpp"

#include <algorithm>
#include <set>

using namespace rbell;

namespace {

bool is_canonical(const PartitionObject& p, int n) {
  std::vector<int> seen;
  int last_min = 0;
  for (const auto& b : p.blocks) {
    if (b.empty() || !std::is_sorted(b.begin(), b.end())) return false;
    if (b.front() <= last_min) return false;
    last_min = b.front();
    seen.insert(seen.end(), b.begin(), b.end());
  }
  std::sort(seen.begin(), seen.end());
  for (int i = 0; i < static_cast<int>(seen.size()); ++i)
    if (seen[i] != i + 1) return false;
  return static_cast<int>(seen.size()) == n;
}

bool is_canonical(const PermutationCycles& p, int n) {
  std::vector<int> seen;
  int last_min = 0;
  for (const auto& c : p.cycles) {
    if (c.empty() || *std::min_element(c.begin(), c.end()) != c.front()) return false;
    if (c.front() <= last_min) return false;
    last_min = c.front();
    seen.insert(seen.end(), c.begin(), c.end());
  }
  std::sort(seen.begin(), seen.end());
  for (int i = 0; i < static_cast<int>(seen.size()); ++i)
    if (seen[i] != i + 1) return false;
  return static_cast<int>(seen.size()) == n;
}

// B_{n+1} = sum_k C(n,k) B_k with plain integers
std::vector<unsigned long> bell_by_binomial_recurrence(int n_max) {
  std::vector<unsigned long> b{1};
  for (int n = 0; n < n_max; ++n) {
    unsigned long acc = 0, c = 1;
    for (int k = 0; k <= n; ++k) {
      acc += c * b[k];
      c = c * (n - k) / (k + 1);
    }
    b.push_back(acc);
  }
  return b;
}

std::vector<Constraint> constraints() {
  std::vector<Constraint> out;
  for (unsigned m = 1; m <= 5; ++m) {
    out.push_back(Constraint::at_most(m));
    out.push_back(Constraint::at_least(m));
  }
  return out;
}

}  // namespace

TEST_CASE("partition counts") {
  CHECK(count_partitions(4, Constraint::at_most(3)) == 14);
  CHECK(count_partitions(4, Constraint::at_least(3)) == 1);
  const auto bell = bell_by_binomial_recurrence(14);
  CHECK(bell[5] == 52);
  CHECK(count_partitions(5, Constraint::at_least(1)) == 52);
  for (int n = 0; n <= 10; ++n) CHECK(count_partitions(n, Constraint::at_least(1)) == bell[n]);
  CHECK(count_partitions(0, Constraint::at_least(3)) == 1);
  CHECK(count_partitions(0, Constraint::at_most(1), 0) == 1);
}

TEST_CASE("the fourteen partitions of [4] with blocks of size at most 3") {
  const auto parts = list_partitions(4, Constraint::at_most(3));
  REQUIRE(parts.size() == 14);
  const PartitionObject whole{{{1, 2, 3, 4}}};
  CHECK(std::find(parts.begin(), parts.end(), whole) == parts.end());
  const PartitionObject example{{{1}, {2, 3, 4}}};
  CHECK(std::find(parts.begin(), parts.end(), example) != parts.end());
}

TEST_CASE("cycle permutation counts") {
  CHECK(count_cycle_perms(4, Constraint::at_most(3)) == 18);
  CHECK(count_cycle_perms(4, Constraint::at_least(2)) == 9);
  CHECK(count_cycle_perms(5, Constraint::at_least(1)) == 120);
  unsigned long fact = 1;
  for (int n = 0; n <= 9; ++n) {
    if (n > 0) fact *= n;
    CHECK(count_cycle_perms(n, Constraint::at_least(1)) == fact);
  }
}

TEST_CASE("the nine derangements of [4]") {
  const auto perms = list_cycle_perms(4, Constraint::at_least(2));
  REQUIRE(perms.size() == 9);
  const PermutationCycles two_swaps{{{1, 2}, {3, 4}}};
  const PermutationCycles four_cycle{{{1, 3, 4, 2}}};
  CHECK(std::find(perms.begin(), perms.end(), two_swaps) != perms.end());
  CHECK(std::find(perms.begin(), perms.end(), four_cycle) != perms.end());
}

TEST_CASE("iterate_partitions small cases") {
  const auto two = list_partitions(2, Constraint::at_most(2));
  REQUIRE(two.size() == 2);
  // restricted-growth order: 00 then 01
  CHECK(two[0] == PartitionObject{{{1, 2}}});
  CHECK(two[1] == PartitionObject{{{1}, {2}}});

  const auto four = list_partitions(4, Constraint::at_least(3));
  REQUIRE(four.size() == 1);
  CHECK(four[0] == PartitionObject{{{1, 2, 3, 4}}});

  const auto singletons = list_partitions(3, Constraint::at_most(1));
  REQUIRE(singletons.size() == 1);
  CHECK(singletons[0] == PartitionObject{{{1}, {2}, {3}}});
}

TEST_CASE("generated objects are canonical, admissible and distinct") {
  for (const auto& c : constraints()) {
    for (int n = 0; n <= 7; ++n) {
      std::set<PartitionObject> parts;
      iterate_partitions(n, c, [&](const PartitionObject& p) {
        REQUIRE(is_canonical(p, n));
        for (const auto& b : p.blocks) REQUIRE(c.admits(b.size()));
        parts.insert(p);
      });
      CHECK(Nat(static_cast<unsigned long>(parts.size())) == count_partitions(n, c));

      std::set<PermutationCycles> perms;
      iterate_cycle_perms(n, c, [&](const PermutationCycles& p) {
        REQUIRE(is_canonical(p, n));
        for (const auto& cy : p.cycles) REQUIRE(c.admits(cy.size()));
        perms.insert(p);
      });
      CHECK(Nat(static_cast<unsigned long>(perms.size())) == count_cycle_perms(n, c));
    }
  }
}

TEST_CASE("refinement by block count sums to the total") {
  for (const auto& c : constraints())
    for (int n = 0; n <= 9; ++n) {
      Nat p = 0, q = 0;
      for (int k = 0; k <= n; ++k) {
        p += count_partitions(n, c, k);
        q += count_cycle_perms(n, c, k);
      }
      CHECK(p == count_partitions(n, c));
      CHECK(q == count_cycle_perms(n, c));
      CHECK(count_partitions(n, c, n + 1) == 0);
      CHECK(count_partitions(n, c, -1) == 0);
    }
}

TEST_CASE("AtMost m >= n is unconstrained") {
  for (int n = 1; n <= 9; ++n) {
    CHECK(count_partitions(n, Constraint::at_most(n)) == count_partitions(n, Constraint::at_least(1)));
    CHECK(count_cycle_perms(n, Constraint::at_most(n + 2)) == count_cycle_perms(n, Constraint::at_least(1)));
  }
}

TEST_CASE("budgets") {
  CHECK_THROWS_AS(count_partitions(15, Constraint::at_most(2)), budget_error);
  CHECK_THROWS_AS(count_cycle_perms(11, Constraint::at_most(2)), budget_error);
  CHECK_THROWS_AS(iterate_partitions(15, Constraint::at_most(2), [](const PartitionObject&) {}),
                  budget_error);
  CHECK_THROWS_AS(list_cycle_perms(11, Constraint::at_least(3)), budget_error);
  CHECK_NOTHROW(count_partitions(14, Constraint::at_least(5)));
}
