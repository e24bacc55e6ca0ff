#include "doctest.h"

#include "rbell/enumerate.hpp"
#include "rbell/triangle.hpp"
#include "rbell/valuation.hpp"

#include <random>

using namespace rbell;

namespace {

std::vector<TriangleSpec> all_families(unsigned m_max) {
  std::vector<TriangleSpec> out;
  for (unsigned m = 1; m <= m_max; ++m)
    for (auto s : {TriangleSpec::second_at_most(m), TriangleSpec::first_at_most(m), TriangleSpec::second_at_least(m),
                   TriangleSpec::first_at_least(m)})
      out.push_back(s);
  return out;
}

// B_{n+1} = sum_k C(n,k) B_k
std::vector<Nat> bell_by_binomial_sum(std::size_t n_max) {
  std::vector<Nat> b{Nat(1)};
  for (std::size_t n = 0; n < n_max; ++n) {
    Nat acc = 0;
    for (std::size_t k = 0; k <= n; ++k) acc += binomial(n, k) * b[k];
    b.push_back(acc);
  }
  return b;
}

std::size_t brute_min_period(const std::vector<std::uint64_t>& s) {
  for (std::size_t q = 1; q <= s.size(); ++q) {
    bool ok = true;
    for (std::size_t i = 0; i + q < s.size() && ok; ++i) ok = s[i] == s[i + q];
    if (ok) return q;
  }
  return s.size();
}

std::string first_inputs(const IdentityReport& r) { return r.failures.empty() ? "" : r.failures.front().inputs; }

}  // namespace

TEST_CASE("modular residues agree with bignum values") {
  for (const auto& spec : all_families(5)) {
    const auto big = bell_seq_fast(spec, 500);
    for (std::uint64_t M : {2ull, 3ull, 7ull, 10ull, 12ull, 96ull, (1ull << 61) - 1, ~0ull}) {
      const auto res = residues_mod(spec, M, 500);
      REQUIRE(res.size() == 501);
      for (std::size_t n = 0; n <= 500; ++n) {
        Nat r;
        mpz_fdiv_r(r.get_mpz_t(), big[n].get_mpz_t(), Nat(std::to_string(M)).get_mpz_t());
        REQUIRE_MESSAGE(Nat(std::to_string(res[n])) == r, spec.name() << " M=" << M << " n=" << n);
      }
    }
  }
  CHECK(residues_mod(TriangleSpec::second_at_most(2), 10, 12)[4] == 0);
  CHECK(residues_mod(TriangleSpec::second_at_most(3), 3, 5) == std::vector<std::uint64_t>{1, 1, 2, 2, 2, 1});
  CHECK_THROWS_AS(residues_mod(TriangleSpec::second_at_most(2), 1, 10), std::invalid_argument);
  CHECK_THROWS_AS(residues_mod(TriangleSpec::second_at_most(2), 0, 10), std::invalid_argument);
}

TEST_CASE("valuation profiles") {
  const auto p = valuation_profile(2, TriangleSpec::second_at_most(2), 7);
  REQUIRE(p.values.size() == 8);
  CHECK(*p.values[4] == 1);
  CHECK(*p.values[5] == 1);
  CHECK(*p.values[6] == 2);
  CHECK(*p.values[7] == 3);
  const auto d = valuation_profile(2, TriangleSpec::first_at_least(2), 6);
  CHECK(d.undefined_at == std::vector<std::size_t>{1});
  CHECK_FALSE(d.values[1].has_value());
  for (std::size_t n = 0; n <= 6; n += 2) CHECK(*d.values[n] == 0);
  const auto t = valuation_profile(3, TriangleSpec::second_at_most(2), 20);
  for (const auto& v : t.values) CHECK(*v == 0);
  CHECK_THROWS_AS(valuation_profile(1, TriangleSpec::second_at_most(2), 5), std::invalid_argument);
}

TEST_CASE("2-adic valuation of involution numbers matches the floor expression") {
  const auto prof = valuation_profile(2, TriangleSpec::second_at_most(2), 500);
  for (std::size_t n = 0; n <= 500; ++n)
    REQUIRE(*prof.values[n] == n / 2 - 2 * (n / 4) + (n + 1) / 4);
}

TEST_CASE("2-adic valuation of Bell numbers") {
  const auto bell = bell_by_binomial_sum(600);
  for (std::size_t n = 0; n <= 600; ++n) {
    const auto v = nu_p(2, bell[n]);
    if (n % 3 != 2) REQUIRE(v == 0);
    else {
      static const std::uint64_t cycle[] = {1, 2, 2, 1};
      REQUIRE(v == cycle[(n / 3) % 4]);
    }
  }
  const auto prof = valuation_profile(2, TriangleSpec::second_at_least(1), std::span<const Nat>(bell));
  CHECK(check_pattern(prof, builtin_pattern("nu2-bell")).pass());
}

TEST_CASE("3- and 7-adic statements checked directly") {
  const auto a = bell_seq_fast(TriangleSpec::first_at_least(3), 600);
  for (std::size_t n = 3; n <= 600; ++n) {
    if (n % 3 == 0) REQUIRE(nu_p(3, a[n]) == 0);
    else REQUIRE(nu_p(3, a[n]) == nu_p(3, std::uint64_t(3 * (n / 3))));
  }
  const auto b = bell_seq_fast(TriangleSpec::second_at_most(3), 600);
  for (std::size_t n = 0; n <= 600; ++n)
    if (n % 7 != 4) REQUIRE(nu_p(7, b[n]) == 0);
}

TEST_CASE("built-in patterns hold") {
  for (const auto& pat : builtin_patterns()) {
    const auto prof = valuation_profile(pat.p, *pat.family, 600);
    const auto r = check_pattern(prof, pat);
    CHECK_MESSAGE(r.pass(), pat.name << " " << first_inputs(r));
    CHECK(r.cases > 0);
  }
  const auto r = check_pattern(valuation_profile(2, TriangleSpec::second_at_least(2), 300),
                               builtin_pattern("nu2-B-atleast-2"));
  REQUIRE(r.notes.size() == 1);
  CHECK(r.notes[0].rfind("class 1 (at least 1)", 0) == 0);
  const auto seven = check_pattern(valuation_profile(7, TriangleSpec::second_at_most(3), 300),
                                   builtin_pattern("nu7-B-atmost-3"));
  REQUIRE(seven.notes.size() == 1);
  CHECK(seven.notes[0].rfind("class 4 (unknown)", 0) == 0);
}

TEST_CASE("a wrong pattern reports its smallest counterexample") {
  auto pat = builtin_pattern("nu2-B-atmost-2");
  pat.rules[3] = ClassRule::affine_k(1);
  const auto r = check_pattern(valuation_profile(2, TriangleSpec::second_at_most(2), 100), pat);
  CHECK_FALSE(r.pass());
  CHECK(r.failure_count == 25);
  CHECK(r.failures.front().inputs == "n=3");
  CHECK(r.failures.front().lhs == 2);
  CHECK(r.failures.front().rhs == 1);
}

TEST_CASE("pattern preconditions") {
  const auto pat = builtin_pattern("nu2-bell");
  CHECK_THROWS_AS(check_pattern(valuation_profile(2, TriangleSpec::second_at_least(1), 30), pat),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_pattern(valuation_profile(3, TriangleSpec::second_at_least(1), 60), pat),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_pattern(valuation_profile(2, TriangleSpec::second_at_least(2), 60), pat),
                  std::invalid_argument);
  CHECK_THROWS_AS(builtin_pattern("nope"), std::invalid_argument);
}

TEST_CASE("pattern JSON round trip and rejection") {
  for (const auto& pat : builtin_patterns()) CHECK(PatternSpec::from_json(pat.to_json()) == pat);
  const std::string ok = R"({"p":2,"modulus":2,"rules":[{"residue":1,"kind":"nu_shift","c":1},{"residue":0,"kind":"const"}]})";
  const auto parsed = PatternSpec::from_json(ok);
  CHECK(parsed.rules[0] == ClassRule::constant(0));
  CHECK(parsed.rules[1] == ClassRule::nu_shift(1, 1));
  CHECK_FALSE(parsed.family.has_value());
  for (const char* bad : {
           R"({"p":2,"modulus":2,"rules":[{"residue":0,"kind":"const"}]})",
           R"({"p":2,"modulus":1,"rules":[{"residue":0,"kind":"const"},{"residue":0,"kind":"const"}]})",
           R"({"p":2,"modulus":1,"rules":[{"residue":0,"kind":"nu_shift","k_min":0}]})",
           R"({"p":2,"modulus":1,"rules":[{"residue":0,"kind":"sometimes"}]})",
           R"({"p":1,"modulus":1,"rules":[{"residue":0,"kind":"const"}]})",
           R"({"p":2,"modulus":1,"family":"C-atmost-2","rules":[{"residue":0,"kind":"const"}]})",
           R"({"p":2,"modulus":1,"rules":[{"residue":3,"kind":"const"}]})",
           R"({"p":2,)",
       })
    CHECK_THROWS_AS(PatternSpec::from_json(bad), std::invalid_argument);
}

TEST_CASE("period detection") {
  std::mt19937_64 rng(7);
  for (std::size_t q = 1; q <= 20; ++q)
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::uint64_t> block(q);
      for (auto& v : block) v = rng() % 3;
      std::vector<std::uint64_t> seq;
      while (seq.size() < 10 * q + 3) seq.push_back(block[seq.size() % q]);
      const auto expected = brute_min_period(seq);
      const auto rep = detect_period(seq, 3);
      REQUIRE(rep.found());
      REQUIRE(*rep.period == expected);
      REQUIRE(expected <= q);
      // a primitive block keeps its full length
      if (brute_min_period(block) == q) REQUIRE(*rep.period == q);
    }
  const std::vector<std::uint64_t> ones(12, 1);
  CHECK(*detect_period(ones, 4).period == 1);
  CHECK_THROWS_AS(detect_period(std::vector<std::uint64_t>(8, 1), 3), window_error);
  // aperiodic tail: no candidate
  std::vector<std::uint64_t> s(30, 0);
  s.back() = 1;
  const auto none = detect_period(s, 2);
  CHECK_FALSE(none.found());
  CHECK(none.repetitions == 1);
}

TEST_CASE("residue periods") {
  for (const auto& claim : builtin_period_claims()) {
    PeriodReport rep;
    const auto r = check_period_claim(claim, 3000, &rep);
    CHECK_MESSAGE(r.pass(), claim.name << " " << first_inputs(r));
    CHECK(rep.repetitions >= 3);
  }
  auto wrong = builtin_period_claims().front();
  wrong.block = {1, 2, 1};
  const auto r = check_period_claim(wrong, 300);
  CHECK_FALSE(r.pass());
  CHECK(r.failures.front().inputs == "block[1]");
}

TEST_CASE("conjectured 2-adic rules for singleton-free partitions") {
  const auto r = scan_conjecture_B_assoc(400);
  CHECK(r.report_only);
  CHECK(r.pass());
  const auto& notes = r.notes;
  REQUIRE(notes.size() == 7);
  CHECK(notes[2].find("consistent") != std::string::npos);
  CHECK(notes.back().find("13:7 109:8 205:7 301:9") != std::string::npos);
  const auto b = bell_seq_fast(TriangleSpec::second_at_least(2), 25);
  CHECK(nu_p(2, b[25]) == 5);
  CHECK(count_partitions(7, Constraint::at_least(2)) == b[7]);
}
