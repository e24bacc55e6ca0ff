#include "rbell/identities.hpp"

#include "rbell/enumerate.hpp"
#include "rbell/hankel.hpp"
#include "rbell/series.hpp"
#include "rbell/shape.hpp"
#include "rbell/triangle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rbell {
namespace {

std::string pair_str(const char* a, long x, const char* b, long y) {
  return std::string(a) + "=" + std::to_string(x) + " " + b + "=" + std::to_string(y);
}

std::string nm_range(int nm_max) { return "n+m <= " + std::to_string(nm_max); }

bool rat_equals(const Rat& r, const Int& x) { return r.get_den() == 1 && r.get_num() == x; }

// Rational sides must come out integral. A fractional one is reported by
// its floor; the failure is recorded either way.
Int floor_of(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

std::optional<int> third(int x) {
  if (x < 0 || x % 3 != 0) return std::nullopt;
  return x / 3;
}

Int pow2(unsigned e) {
  Int r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
  return r;
}

}  // namespace

std::size_t mixed_slot(unsigned size, unsigned from_first) {
  return 2 + from_first + static_cast<std::size_t>(size - 1) * (size - 2) / 2;
}

std::vector<MixedBlockType> mixed_block_types(Constraint c, unsigned max_size) {
  std::vector<MixedBlockType> types;
  for (unsigned i = 2; i <= max_size; ++i) {
    if (!c.admits(i)) continue;
    for (unsigned j = 1; j < i; ++j) types.push_back({i, j, mixed_slot(i, j)});
  }
  return types;
}

std::optional<int> SpiveyTerm::a_ij() const { return third(2 * i - j - k); }
std::optional<int> SpiveyTerm::a_ji() const { return third(2 * j - i - k); }

Restricted3Sums spivey_restricted3_sums(int n, int m, std::span<const Nat> b3, TermFilter filter) {
  if (n < 0 || m < 0) throw std::invalid_argument("spivey_restricted3_sums: negative argument");
  if (b3.size() <= static_cast<std::size_t>(std::max(n, m)))
    throw std::invalid_argument("spivey_restricted3_sums: sequence too short");
  Restricted3Sums out{0, 0, 0};
  const Nat fn = factorial(n), fm = factorial(m);
  for (int i = 0; i <= n; ++i) {
    const int j_lo = filter == TermFilter::Congruence ? (i + 1) / 2 : 0;
    const int j_hi = filter == TermFilter::Congruence ? std::min(m, 2 * i) : m;
    for (int j = j_lo; j <= j_hi; ++j) {
      int k_lo = 0, k_hi = std::min(i, j), step = 1;
      if (filter == TermFilter::Congruence) {
        k_hi = std::min({i, j, 2 * i - j, 2 * j - i});
        k_lo = ((-(i + j)) % 3 + 3) % 3;
        step = 3;
      }
      for (int k = k_lo; k <= k_hi; k += step) {
        const SpiveyTerm t{i, j, k};
        const auto aij = t.a_ij(), aji = t.a_ji();
        if (!aij || !aji) continue;
        ++out.terms;
        const int p = *aij, q = *aji;
        // (2a)! / 2^a is an integer: pairings times orderings
        Int w = factorial(2 * p) * factorial(2 * q);
        mpz_fdiv_q_2exp(w.get_mpz_t(), w.get_mpz_t(), p + q);
        out.binomial_form += binomial(n, i) * b3[n - i] * binomial(m, j) * b3[m - j] *
                             binomial(i, k) * binomial(j, k) * factorial(k) *
                             binomial(i - k, q) * binomial(j - k, p) * w;
        const Int num = fn * fm * b3[n - i] * b3[m - j];
        const Int den = factorial(k) * factorial(n - i) * factorial(m - j) * factorial(p) *
                        factorial(q) * pow2((i + j - 2 * k) / 3);
        Rat term(num, den);
        term.canonicalize();
        out.factorial_form += term;
      }
    }
  }
  return out;
}

GeneralSpiveySum spivey_general_sum(const TriangleSpec& family, unsigned n, unsigned m,
                                    std::span<const Nat> seq, std::size_t cap) {
  if (seq.size() <= std::max(n, m))
    throw std::invalid_argument("spivey_general_sum: sequence too short");
  const auto types = mixed_block_types(family.constraint(), n + m);
  std::vector<Rat> weight;
  weight.reserve(types.size());
  for (const auto& t : types) {
    Rat w;
    if (family.is_second_kind())
      w = Rat(Int(1), factorial(t.from_first) * factorial(t.size - t.from_first));
    else
      w = Rat(binomial(t.size, t.from_first), Int(t.size));
    w.canonicalize();
    weight.push_back(w);
  }

  GeneralSpiveySum out{0, 0};
  const Rat scale(factorial(n) * factorial(m));
  // Lexicographic over (a_t) with pruning on both element budgets.
  auto walk = [&](auto&& self, std::size_t idx, unsigned used1, unsigned used2, const Rat& prod) -> void {
    if (idx == types.size()) {
      if (++out.terms > cap) throw budget_error("spivey_general_sum: composition set exceeds cap");
      const unsigned a1 = n - used1, a2 = m - used2;
      Rat leaf(seq[a1] * seq[a2], factorial(a1) * factorial(a2));
      leaf.canonicalize();
      out.value += prod * leaf;
      return;
    }
    const auto& t = types[idx];
    const unsigned d1 = t.from_first, d2 = t.size - t.from_first;
    Rat p = prod;
    for (unsigned a = 0;; ++a) {
      self(self, idx + 1, used1 + a * d1, used2 + a * d2, p);
      if (used1 + (a + 1) * d1 > n || used2 + (a + 1) * d2 > m) break;
      p *= weight[idx];
      p /= a + 1;
    }
  };
  walk(walk, 0, 0, 0, Rat(1));
  out.value *= scale;
  return out;
}

Rat factorial_restricted3_display(int n, int m, std::span<const Nat> a3) {
  if (n < 0 || m < 0) throw std::invalid_argument("factorial_restricted3_display: negative argument");
  if (a3.size() <= static_cast<std::size_t>(std::max(n, m)))
    throw std::invalid_argument("factorial_restricted3_display: sequence too short");
  Rat total = 0;
  const Nat nm = factorial(n) * factorial(m);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= m; ++j)
      for (int l = 0; l <= std::min(n - i, m - j); ++l) {
        if (((i + j - n - m - l) % 3 + 3) % 3 != 0) continue;
        const auto b = third(2 * m - n + i - 2 * j - l);
        const auto c = third(2 * n - m - 2 * i + j - l);
        if (!b || !c) continue;
        Rat term(nm * a3[i] * a3[j],
                 factorial(i) * factorial(j) * factorial(l) * factorial(*b) * factorial(*c));
        term.canonicalize();
        total += term;
      }
  return total;
}

// ---------------------------------------------------------------------------

namespace {

IdentityReport spivey_classic_into(int n, int m, const std::vector<Nat>& bell, TriangleTable& s2,
                                   IdentityReport report) {
  Int rhs = 0;
  for (int k = 0; k <= n; ++k) {
    Int inner = 0;
    for (int j = 0; j <= m; ++j) {
      Int jp;
      mpz_ui_pow_ui(jp.get_mpz_t(), j, n - k);
      inner += jp * s2.at(m, j);
    }
    rhs += inner * binomial(n, k) * bell[k];
  }
  report.expect_equal(pair_str("n", n, "m", m), bell[n + m], rhs);
  return report;
}

Int involution_convolution_rhs(int n1, int n2, const std::vector<Nat>& b2) {
  Int rhs = 0;
  for (int k = 0; k <= std::min(n1, n2); ++k)
    rhs += factorial(k) * binomial(n1, k) * binomial(n2, k) * b2[n1 - k] * b2[n2 - k];
  return rhs;
}

}  // namespace

IdentityReport check_spivey_classic(int n, int m) {
  IdentityReport report("spivey-classic", pair_str("n", n, "m", m));
  ReportTimer timer(report);
  TriangleTable s2(TriangleSpec::second_at_least(1));
  report = spivey_classic_into(n, m, classical_bell(n + m), s2, std::move(report));
  return report;
}

IdentityReport check_spivey_classic_range(int nm_max) {
  IdentityReport report("spivey-classic", nm_range(nm_max));
  ReportTimer timer(report);
  const auto bell = classical_bell(nm_max);
  TriangleTable s2(TriangleSpec::second_at_least(1));
  for (int n = 0; n <= nm_max; ++n)
    for (int m = 0; n + m <= nm_max; ++m) report = spivey_classic_into(n, m, bell, s2, std::move(report));
  return report;
}

IdentityReport check_involution_convolution(int n1, int n2) {
  IdentityReport report("involution-convolution", pair_str("n1", n1, "n2", n2));
  ReportTimer timer(report);
  const auto b2 = bell_seq_fast(TriangleSpec::second_at_most(2), n1 + n2);
  report.expect_equal(report.range, b2[n1 + n2], involution_convolution_rhs(n1, n2, b2));
  return report;
}

IdentityReport check_involution_convolution_range(int nm_max) {
  IdentityReport report("involution-convolution", "n1+n2 <= " + std::to_string(nm_max));
  ReportTimer timer(report);
  const auto b2 = bell_seq_fast(TriangleSpec::second_at_most(2), nm_max);
  for (int n1 = 0; n1 <= nm_max; ++n1)
    for (int n2 = 0; n1 + n2 <= nm_max; ++n2)
      report.expect_equal(pair_str("n1", n1, "n2", n2), b2[n1 + n2],
                          involution_convolution_rhs(n1, n2, b2));
  return report;
}

namespace {

void restricted3_into(int n, int m, const std::vector<Nat>& b3, IdentityReport& report) {
  const auto sums = spivey_restricted3_sums(n, m, b3);
  const auto inputs = pair_str("n", n, "m", m);
  const Nat& engine = b3[n + m];
  report.expect_equal(inputs + " binomial-form", sums.binomial_form, engine);
  ++report.cases;
  if (!rat_equals(sums.factorial_form, engine))
    report.fail(inputs + " factorial-form", floor_of(sums.factorial_form), engine);
  ++report.cases;
  if (!rat_equals(sums.factorial_form, sums.binomial_form))
    report.fail(inputs + " forms-agree", floor_of(sums.factorial_form),
                sums.binomial_form);
}

}  // namespace

IdentityReport check_spivey_restricted3(int n, int m) {
  IdentityReport report("spivey-restricted3", pair_str("n", n, "m", m));
  ReportTimer timer(report);
  const auto b3 = bell_seq_fast(TriangleSpec::second_at_most(3), n + m);
  restricted3_into(n, m, b3, report);
  return report;
}

IdentityReport check_spivey_restricted3_range(int nm_max) {
  IdentityReport report("spivey-restricted3", nm_range(nm_max));
  ReportTimer timer(report);
  const auto b3 = bell_seq_fast(TriangleSpec::second_at_most(3), nm_max);
  for (int n = 0; n <= nm_max; ++n)
    for (int m = 0; n + m <= nm_max; ++m) restricted3_into(n, m, b3, report);
  return report;
}

namespace {

void general_into(const TriangleSpec& family, int n, int m, const std::vector<Nat>& seq,
                  std::size_t cap, IdentityReport& report) {
  const auto inputs = family.name() + " " + pair_str("n", n, "m", m);
  const auto sum = spivey_general_sum(family, n, m, seq, cap);
  ++report.cases;
  if (!rat_equals(sum.value, seq[n + m]))
    report.fail(inputs, floor_of(sum.value), seq[n + m]);

  if (family == TriangleSpec::first_at_most(3)) {
    const Rat display = factorial_restricted3_display(n, m, seq);
    ++report.cases;
    if (display != sum.value)
      report.fail(inputs + " display", floor_of(display),
                  floor_of(sum.value));
  }
  if (family == TriangleSpec::second_at_most(2)) {
    // one composition vector per pair count k of the involution convolution
    report.expect_equal(inputs + " term-count", Int(static_cast<unsigned long>(sum.terms)),
                        Int(std::min(n, m) + 1));
    ++report.cases;
    if (!rat_equals(sum.value, involution_convolution_rhs(n, m, seq)))
      report.fail(inputs + " vs-convolution", floor_of(sum.value),
                  involution_convolution_rhs(n, m, seq));
  }
}

}  // namespace

IdentityReport check_spivey_general(const TriangleSpec& family, int n, int m, std::size_t cap) {
  IdentityReport report("spivey-general:" + family.name(), pair_str("n", n, "m", m));
  ReportTimer timer(report);
  general_into(family, n, m, bell_seq_fast(family, n + m), cap, report);
  return report;
}

IdentityReport check_spivey_general_range(const TriangleSpec& family, int nm_max, std::size_t cap) {
  IdentityReport report("spivey-general:" + family.name(), nm_range(nm_max));
  ReportTimer timer(report);
  const auto seq = bell_seq_fast(family, nm_max);
  for (int n = 0; n <= nm_max; ++n)
    for (int m = 0; n + m <= nm_max; ++m) general_into(family, n, m, seq, cap, report);
  return report;
}

IdentityReport check_binomial_transform_involutions(int n_max) {
  IdentityReport report("binomial-transform-involutions", "n <= " + std::to_string(n_max));
  ReportTimer timer(report);
  const auto b2 = bell_seq_fast(TriangleSpec::second_at_most(2), n_max);
  const auto t = binomial_transform(std::vector<Int>(b2.begin(), b2.end()), true);
  for (int n = 0; n <= n_max; ++n)
    report.expect_equal("n=" + std::to_string(n), t[n], n % 2 ? Int(0) : double_factorial_odd(n));
  return report;
}

IdentityReport check_assoc_bell_relations(int n_max, int k_max) {
  IdentityReport report("assoc-bell-relations",
                        "n <= " + std::to_string(n_max) + ", 2 <= k <= " + std::to_string(k_max));
  ReportTimer timer(report);
  const auto bell = classical_bell(n_max + 1);
  const auto b_ge2 = bell_seq_fast(TriangleSpec::second_at_least(2), n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    report.expect_equal("(a) n=" + std::to_string(n), bell[n], b_ge2[n] + b_ge2[n + 1]);
    Int alt = 0;
    for (int i = 0; i <= n; ++i) {
      if (i % 2) alt -= binomial(n, i) * bell[n - i];
      else alt += binomial(n, i) * bell[n - i];
    }
    report.expect_equal("(b) n=" + std::to_string(n), b_ge2[n], alt);
  }
  for (int k = 2; k <= k_max; ++k) {
    const auto ge = bell_seq_fast(TriangleSpec::second_at_least(k), n_max);
    const auto le = bell_seq_fast(TriangleSpec::second_at_most(k - 1), n_max);
    for (int n = 0; n <= n_max; ++n) {
      Int rhs = bell[n];
      for (int i = 1; i <= n; ++i) rhs -= binomial(n, i) * le[i] * ge[n - i];
      report.expect_equal("(c) " + pair_str("k", k, "n", n), ge[n], rhs);
    }
  }
  return report;
}

IdentityReport check_genaigner(int k, int n_max) {
  if (k < 2) throw std::invalid_argument("check_genaigner: k must be at least 2");
  IdentityReport report("genaigner:k=" + std::to_string(k), "1 <= n <= " + std::to_string(n_max));
  ReportTimer timer(report);
  // values from the triangle, independent of the single-sequence recurrence
  TriangleTable table(TriangleSpec::first_at_least(k));
  table.fill_to(n_max);
  std::vector<Nat> a;
  for (int n = 0; n <= n_max; ++n) a.push_back(table.row_sum(n));
  for (int n = 1; n <= n_max; ++n) {
    Int rhs = (n - 1) * a[n - 1];
    if (n >= k) rhs += falling_factorial(n - 1, k - 1) * a[n - k];
    report.expect_equal("n=" + std::to_string(n), a[n], rhs);
  }
  return report;
}

IdentityReport check_derangement_recurrences(int n_max) {
  IdentityReport report("derangements", "n <= " + std::to_string(n_max));
  ReportTimer timer(report);
  const auto d = bell_seq_fast(TriangleSpec::first_at_least(2), n_max);
  for (int n = 1; n <= n_max; ++n) {
    const Int sign = n % 2 ? -1 : 1;
    report.expect_equal("first n=" + std::to_string(n), d[n], n * d[n - 1] + sign);
    if (n >= 2) report.expect_equal("second n=" + std::to_string(n), d[n], (n - 1) * (d[n - 1] + d[n - 2]));
  }
  return report;
}

namespace {

unsigned long mod10(const Nat& x) { return mpz_fdiv_ui(x.get_mpz_t(), 10); }

}  // namespace

IdentityReport check_mezo_congruences(int n_max) {
  IdentityReport report("mezo-congruences", "n <= " + std::to_string(n_max));
  ReportTimer timer(report);
  const auto b2 = bell_seq_fast(TriangleSpec::second_at_most(2), n_max + 5);
  const auto b3 = bell_seq_fast(TriangleSpec::second_at_most(3), n_max + 5);
  for (int n = 2; n <= n_max; ++n)
    report.expect_equal("<=2 n=" + std::to_string(n), mod10(b2[n]), mod10(b2[n + 5]));
  for (int n = 4; n <= n_max; ++n)
    report.expect_equal("<=3 n=" + std::to_string(n), mod10(b3[n]), mod10(b3[n + 5]));
  return report;
}

IdentityReport scan_mezo_cross_family(int n_max) {
  IdentityReport report("mezo-cross-family", "3 < n <= " + std::to_string(n_max));
  report.report_only = true;
  ReportTimer timer(report);
  const auto b2 = bell_seq_fast(TriangleSpec::second_at_most(2), n_max + 5);
  const auto b3 = bell_seq_fast(TriangleSpec::second_at_most(3), n_max + 5);
  for (int n = 4; n <= n_max; ++n)
    report.expect_equal("n=" + std::to_string(n), mod10(b3[n]), mod10(b2[n + 5]));
  report.notes.push_back("B_{n,<=3} mod 10 vs B_{n+5,<=2} mod 10: " +
                         std::to_string(report.failure_count) + " of " +
                         std::to_string(report.cases) + " indices differ");
  return report;
}

IdentityReport check_orthogonality(int n_max) {
  IdentityReport report("orthogonality", "n, j <= " + std::to_string(n_max));
  ReportTimer timer(report);
  TriangleTable s2(TriangleSpec::second_at_least(1));
  TriangleTable s1(TriangleSpec::first_at_least(1));
  for (int n = 0; n <= n_max; ++n)
    for (int j = 0; j <= n_max; ++j) {
      Int acc = 0;
      for (int k = 0; k <= n; ++k) {
        const Int term = s2.at(n, k) * s1.at(k, j);
        if ((n - k) % 2) acc -= term;
        else acc += term;
      }
      report.expect_equal(pair_str("n", n, "j", j), acc, Int(n == j ? 1 : 0));
    }
  return report;
}

IdentityReport check_hankel_transforms(int order) {
  IdentityReport report("hankel", "order <= " + std::to_string(order));
  ReportTimer timer(report);
  const std::size_t len = 2 * static_cast<std::size_t>(order) + 1;
  auto as_int = [](const std::vector<Nat>& v) { return std::vector<Int>(v.begin(), v.end()); };
  const auto b_le2 = as_int(bell_seq_fast(TriangleSpec::second_at_most(2), len));
  const auto b_ge2 = as_int(bell_seq_fast(TriangleSpec::second_at_least(2), len));
  const auto a_ge2 = as_int(bell_seq_fast(TriangleSpec::first_at_least(2), len));
  std::vector<Int> aerated;
  for (std::size_t n = 0; n <= len; ++n) aerated.push_back(n % 2 ? Int(0) : double_factorial_odd(n));

  const auto h_le2 = hankel_transform(b_le2, order);
  const auto h_ge2 = hankel_transform(b_ge2, order);
  const auto h_aer = hankel_transform(aerated, order);
  const auto h_der = hankel_transform(a_ge2, order);
  for (int n = 0; n <= order; ++n) {
    const Nat sf = superfactorial(n);
    const auto at = "n=" + std::to_string(n);
    report.expect_equal("B<=2 " + at, h_le2[n], sf);
    report.expect_equal("B>=2 " + at, h_ge2[n], sf);
    report.expect_equal("aerated " + at, h_aer[n], sf);
    report.expect_equal("A>=2 " + at, h_der[n], sf * sf);
  }
  return report;
}

IdentityReport check_log_shapes(int m_max, int n_max) {
  IdentityReport report("log-shapes",
                        "m <= " + std::to_string(m_max) + ", n <= " + std::to_string(n_max));
  ReportTimer timer(report);
  auto record = [&](const std::string& what, const std::vector<Nat>& seq, const ShapeVerdict& v,
                    bool convex, bool over_factorial) {
    ++report.cases;
    if (v) return;
    const std::size_t n = *v.first_violation;
    Int lhs = seq[n] * seq[n + 2], rhs = seq[n + 1] * seq[n + 1];
    if (over_factorial) {
      lhs *= n + 1;
      rhs *= n + 2;
    }
    report.fail(what + " n=" + std::to_string(n) + (convex ? " (convex)" : " (concave)"), lhs, rhs);
  };
  for (int m = 1; m <= m_max; ++m)
    for (const auto& spec : {TriangleSpec::second_at_most(m), TriangleSpec::first_at_most(m)}) {
      const auto seq = bell_seq_fast(spec, n_max);
      record(spec.name(), seq, is_log_convex(seq), true, false);
      record(spec.name() + "/n!", seq, is_log_concave_over_factorial(seq), false, true);
    }
  return report;
}

IdentityReport check_egfs(int m_max, int order, int m_min) {
  IdentityReport report("egf", "m in [" + std::to_string(m_min) + "," + std::to_string(m_max) + "], n <= " +
                                   std::to_string(order));
  ReportTimer timer(report);
  for (int m = m_min; m <= m_max; ++m)
    for (const auto& spec : {TriangleSpec::second_at_most(m), TriangleSpec::first_at_most(m),
                             TriangleSpec::second_at_least(m), TriangleSpec::first_at_least(m)}) {
      const auto sub = egf_check(spec, order);
      for (auto f : sub.failures) {
        f.inputs = spec.name() + " " + f.inputs;
        report.fail(f.inputs, f.lhs, f.rhs);
      }
      report.failure_count += sub.failure_count - sub.failures.size();
      report.cases += sub.cases;
    }
  return report;
}

}  // namespace rbell
