#include "rbell/valuation.hpp"

#include "rbell/triangle.hpp"

#include "json.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace rbell {

ValuationProfile valuation_profile(std::uint64_t p, const TriangleSpec& family, std::size_t n_max) {
  const auto seq = bell_seq_fast(family, n_max);
  return valuation_profile(p, family, seq);
}

ValuationProfile valuation_profile(std::uint64_t p, const TriangleSpec& family, std::span<const Nat> seq) {
  if (p < 2) throw std::invalid_argument("valuation_profile: p must be at least 2");
  ValuationProfile prof;
  prof.p = p;
  prof.family = family;
  prof.values.reserve(seq.size());
  for (std::size_t n = 0; n < seq.size(); ++n) {
    if (seq[n] == 0) {
      prof.values.emplace_back();
      prof.undefined_at.push_back(n);
    } else {
      prof.values.emplace_back(nu_p(p, seq[n]));
    }
  }
  return prof;
}

std::optional<std::int64_t> ClassRule::predict(std::uint64_t p, std::uint64_t k) const {
  const auto kk = static_cast<std::int64_t>(k);
  switch (kind) {
    case RuleKind::Const: return c;
    case RuleKind::AffineK: return kk + c;
    case RuleKind::NuShift:
      if (k == 0) return std::nullopt;
      return static_cast<std::int64_t>(nu_p(p, k)) + c;
    case RuleKind::NuAffineK:
      if (k == 0) return std::nullopt;
      return static_cast<std::int64_t>(nu_p(p, k)) + kk + c;
    case RuleKind::AtLeast:
    case RuleKind::Unknown: return std::nullopt;
  }
  return std::nullopt;
}

namespace {

constexpr std::pair<RuleKind, const char*> kRuleNames[] = {
    {RuleKind::Const, "const"},          {RuleKind::AffineK, "affine_k"},
    {RuleKind::NuShift, "nu_shift"},     {RuleKind::NuAffineK, "nu_affine_k"},
    {RuleKind::AtLeast, "at_least"},     {RuleKind::Unknown, "unknown"},
};

bool is_nu_rule(RuleKind k) { return k == RuleKind::NuShift || k == RuleKind::NuAffineK; }

}  // namespace

std::string to_string(RuleKind kind) {
  for (const auto& [k, name] : kRuleNames)
    if (k == kind) return name;
  return "?";
}

RuleKind parse_rule_kind(const std::string& name) {
  for (const auto& [k, n] : kRuleNames)
    if (name == n) return k;
  throw std::invalid_argument("unknown rule kind '" + name + "'");
}

void PatternSpec::validate() const {
  if (p < 2) throw std::invalid_argument("pattern " + name + ": p must be at least 2");
  if (modulus < 1) throw std::invalid_argument("pattern " + name + ": modulus must be positive");
  if (rules.size() != modulus)
    throw std::invalid_argument("pattern " + name + ": expected " + std::to_string(modulus) +
                                " class rules, got " + std::to_string(rules.size()));
  for (std::size_t r = 0; r < rules.size(); ++r)
    if (is_nu_rule(rules[r].kind) && rules[r].k_min < 1)
      throw std::invalid_argument("pattern " + name + ": class " + std::to_string(r) +
                                  " uses nu_p(k) and needs k_min >= 1");
}

std::string PatternSpec::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["p"] = p;
  j["family"] = family ? nlohmann::ordered_json(family->name()) : nlohmann::ordered_json(nullptr);
  j["modulus"] = modulus;
  j["n_max"] = n_max;
  auto& arr = j["rules"] = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < rules.size(); ++r) {
    nlohmann::ordered_json rule;
    rule["residue"] = r;
    rule["kind"] = to_string(rules[r].kind);
    rule["c"] = rules[r].c;
    rule["k_min"] = rules[r].k_min;
    arr.push_back(std::move(rule));
  }
  return j.dump(indent);
}

PatternSpec PatternSpec::from_json(const std::string& text) {
  PatternSpec spec;
  try {
    const auto j = nlohmann::json::parse(text);
    spec.name = j.value("name", std::string("unnamed"));
    spec.p = j.at("p").get<std::uint64_t>();
    if (j.contains("family") && !j["family"].is_null())
      spec.family = TriangleSpec::parse(j["family"].get<std::string>());
    spec.modulus = j.at("modulus").get<std::uint64_t>();
    spec.n_max = j.value("n_max", std::size_t{2000});
    if (spec.modulus < 1 || spec.modulus > 1'000'000)
      throw std::invalid_argument("modulus out of range");
    std::vector<std::optional<ClassRule>> slots(spec.modulus);
    for (const auto& item : j.at("rules")) {
      const auto r = item.at("residue").get<std::uint64_t>();
      if (r >= spec.modulus) throw std::invalid_argument("residue " + std::to_string(r) + " out of range");
      if (slots[r]) throw std::invalid_argument("duplicate rule for residue " + std::to_string(r));
      ClassRule rule;
      rule.kind = parse_rule_kind(item.at("kind").get<std::string>());
      rule.c = item.value("c", std::int64_t{0});
      rule.k_min = item.value("k_min", std::uint64_t{is_nu_rule(rule.kind) ? 1u : 0u});
      slots[r] = rule;
    }
    for (std::size_t r = 0; r < slots.size(); ++r) {
      if (!slots[r]) throw std::invalid_argument("no rule for residue " + std::to_string(r));
      spec.rules.push_back(*slots[r]);
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed pattern: ") + e.what());
  }
  spec.validate();
  return spec;
}

namespace {

std::string histogram_note(std::size_t r, const char* label, const std::map<std::uint64_t, std::size_t>& hist,
                           std::size_t undefined) {
  std::ostringstream os;
  os << "class " << r << " (" << label << "): ";
  std::size_t total = 0;
  for (const auto& [v, c] : hist) total += c;
  os << total << " indices";
  if (!hist.empty()) {
    os << ", values";
    for (const auto& [v, c] : hist) os << " " << v << "x" << c;
  }
  if (undefined) os << ", " << undefined << " undefined";
  return os.str();
}

}  // namespace

IdentityReport check_pattern(const ValuationProfile& profile, const PatternSpec& pattern) {
  pattern.validate();
  if (profile.p != pattern.p)
    throw std::invalid_argument("check_pattern: profile is for p=" + std::to_string(profile.p) +
                                ", pattern " + pattern.name + " for p=" + std::to_string(pattern.p));
  if (pattern.family && *pattern.family != profile.family)
    throw std::invalid_argument("check_pattern: pattern " + pattern.name + " is for " +
                                pattern.family->name() + ", profile is " + profile.family.name());
  const std::uint64_t M = pattern.modulus;
  if (profile.values.size() < 3 * M)
    throw std::invalid_argument("check_pattern: profile covers fewer than three periods of " +
                                std::to_string(M));

  IdentityReport report("pattern:" + pattern.name,
                        "p=" + std::to_string(profile.p) + " " + profile.family.name() + " n <= " +
                            std::to_string(profile.n_max()));
  ReportTimer timer(report);
  std::vector<std::map<std::uint64_t, std::size_t>> observed(M);
  std::vector<std::size_t> undefined(M, 0);

  for (std::size_t n = 0; n < profile.values.size(); ++n) {
    const std::uint64_t r = n % M, k = n / M;
    const auto& rule = pattern.rules[r];
    if (k < rule.k_min) continue;
    const auto& v = profile.values[n];
    const auto at = "n=" + std::to_string(n);
    if (rule.kind == RuleKind::Unknown || rule.kind == RuleKind::AtLeast) {
      if (v) ++observed[r][*v];
      else ++undefined[r];
    }
    if (rule.kind == RuleKind::Unknown) continue;
    ++report.cases;
    if (!v) {
      // a zero term contradicts any finite valuation claim
      report.fail(at + " (s_n = 0)", Int(-1), Int(rule.kind == RuleKind::AtLeast ? rule.c : *rule.predict(profile.p, k)));
      continue;
    }
    const Int got(static_cast<unsigned long>(*v));
    if (rule.kind == RuleKind::AtLeast) {
      if (got < rule.c) report.fail(at + " (>= " + std::to_string(rule.c) + ")", got, Int(static_cast<long>(rule.c)));
      continue;
    }
    const auto want = rule.predict(profile.p, k);
    report.expect_equal(at, got, Int(static_cast<long>(*want)));
  }
  for (std::uint64_t r = 0; r < M; ++r) {
    const auto kind = pattern.rules[r].kind;
    if (kind == RuleKind::Unknown) report.notes.push_back(histogram_note(r, "unknown", observed[r], undefined[r]));
    else if (kind == RuleKind::AtLeast)
      report.notes.push_back(histogram_note(r, ("at least " + std::to_string(pattern.rules[r].c)).c_str(),
                                            observed[r], undefined[r]));
  }
  return report;
}

std::vector<PatternSpec> builtin_patterns() {
  using R = ClassRule;
  auto make = [](std::string name, std::uint64_t p, TriangleSpec fam, std::vector<ClassRule> rules,
                 std::size_t n_max) {
    PatternSpec s;
    s.name = std::move(name);
    s.p = p;
    s.family = fam;
    s.modulus = rules.size();
    s.rules = std::move(rules);
    s.n_max = n_max;
    return s;
  };
  const auto b2 = TriangleSpec::second_at_most(2), b3 = TriangleSpec::second_at_most(3);
  const auto bell = TriangleSpec::second_at_least(1), bge2 = TriangleSpec::second_at_least(2);
  const auto age2 = TriangleSpec::first_at_least(2), age3 = TriangleSpec::first_at_least(3);
  const auto ale3 = TriangleSpec::first_at_most(3);
  return {
      make("nu2-B-atmost-2", 2, b2, {R::affine_k(0), R::affine_k(0), R::affine_k(1), R::affine_k(2)}, 4000),
      // nu_2(B_n) = 0 off n == 2 mod 3; on it the values cycle 1, 2, 2, 1
      make("nu2-bell", 2, bell,
           {R::constant(0), R::constant(0), R::constant(1), R::constant(0), R::constant(0), R::constant(2),
            R::constant(0), R::constant(0), R::constant(2), R::constant(0), R::constant(0), R::constant(1)},
           2000),
      // B_{1,>=2} = 0, hence k_min on class 1
      make("nu2-B-atleast-2", 2, bge2, {R::constant(0), R::at_least(1, 1), R::constant(0)}, 2000),
      make("nu2-A-atleast-2", 2, age2, {R::constant(0), R::nu_shift(1, 1)}, 2000),
      make("nu2-A-atmost-3", 2, ale3, {R::affine_k(0), R::affine_k(0), R::affine_k(1), R::affine_k(1)}, 2000),
      make("nu2-A-atleast-3", 2, age3, {R::affine_k(0), R::nu_affine_k(2, 1), R::nu_affine_k(4, 1), R::affine_k(1)},
           2000),
      make("nu5-B-atmost-3", 5, b3,
           {R::constant(0), R::constant(0), R::constant(0), R::constant(1), R::constant(0)}, 2000),
      make("nu7-B-atmost-3", 7, b3,
           {R::constant(0), R::constant(0), R::constant(0), R::constant(0), R::unknown(), R::constant(0),
            R::constant(0)},
           2000),
      // n = 3k+1, 3k+2: nu_3(3k) = nu_3(k) + 1; k = 0 left out
      make("nu3-A-atleast-3", 3, age3, {R::constant(0), R::nu_shift(1, 1), R::nu_shift(1, 1)}, 2000),
      make("nu3-B-atmost-2", 3, b2, {R::constant(0)}, 2000),
      make("nu3-B-atmost-3", 3, b3, {R::constant(0)}, 2000),
  };
}

PatternSpec builtin_pattern(const std::string& name) {
  for (auto& p : builtin_patterns())
    if (p.name == name) return p;
  throw std::invalid_argument("no built-in pattern named '" + name + "'");
}

// ---------------------------------------------------------------------------

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m); }
u64 addmod(u64 a, u64 b, u64 m) { return static_cast<u64>((static_cast<unsigned __int128>(a) + b) % m); }

// C(n, 0..w) mod M, advanced one n at a time.
struct PascalWindow {
  std::vector<u64> c;
  u64 mod;
  u64 n = 0;
  PascalWindow(std::size_t w, u64 m) : c(w + 1, 0), mod(m) { c[0] = 1 % m; }
  void advance() {
    ++n;
    for (std::size_t k = std::min<std::size_t>(n, c.size() - 1); k >= 1; --k) c[k] = addmod(c[k], c[k - 1], mod);
  }
};

}  // namespace

std::vector<std::uint64_t> residues_mod(const TriangleSpec& spec, std::uint64_t M, std::size_t n_max) {
  if (M < 2) throw std::invalid_argument("residues_mod: modulus must be at least 2");
  const unsigned m = spec.m();
  std::vector<u64> s(n_max + 1, 0);
  s[0] = 1;

  if (spec.is_at_most() && spec.is_second_kind()) {
    PascalWindow pas(m, M);  // holds C(n-1, .)
    for (std::size_t n = 1; n <= n_max; ++n) {
      if (n >= 2) pas.advance();
      u64 acc = 0;
      for (std::size_t k = 0; k < m && k < n; ++k) acc = addmod(acc, mulmod(pas.c[k], s[n - 1 - k], M), M);
      s[n] = acc;
    }
    return s;
  }
  if (spec.is_at_most()) {
    for (std::size_t n = 1; n <= n_max; ++n) {
      u64 acc = 0, coef = 1 % M;
      for (std::size_t j = 0; j < m && j < n; ++j) {
        if (j > 0) coef = mulmod(coef, (n - j) % M, M);
        acc = addmod(acc, mulmod(coef, s[n - 1 - j], M), M);
      }
      s[n] = acc;
    }
    return s;
  }
  if (!spec.is_second_kind()) {
    for (std::size_t n = 1; n <= n_max; ++n) {
      u64 acc = mulmod((n - 1) % M, s[n - 1], M);
      if (n >= m) {
        u64 ff = 1 % M;
        for (std::size_t i = 0; i + 1 < m; ++i) ff = mulmod(ff, (n - 1 - i) % M, M);
        acc = addmod(acc, mulmod(ff, s[n - m], M), M);
      }
      s[n] = acc;
    }
    return s;
  }

  // B AtLeast: T(n+1,k) = k T(n,k) + C(n,m-1) T(n-m+1,k-1), rows mod M.
  // Row n is nonzero only for k <= n/m, so rows are kept that short.
  std::deque<std::vector<u64>> window;  // rows n-m+1 .. n (m = 1: just row n)
  window.push_back({1 % M});
  PascalWindow pas(m, M);  // holds C(n, .)
  for (std::size_t n = 0; n < n_max; ++n) {
    const auto& cur = window.back();
    const std::vector<u64>* lagged = nullptr;
    if (n + 1 >= m) lagged = &window[window.size() - m];
    const std::size_t len = (n + 1) / m + 1;
    std::vector<u64> next(len, 0);
    const u64 coef = pas.c[m - 1];
    for (std::size_t k = 1; k < len; ++k) {
      u64 v = k < cur.size() ? mulmod(k % M, cur[k], M) : 0;
      if (lagged && k - 1 < lagged->size()) v = addmod(v, mulmod(coef, (*lagged)[k - 1], M), M);
      next[k] = v;
    }
    u64 sum = 0;
    for (u64 v : next) sum = addmod(sum, v, M);
    s[n + 1] = sum;
    window.push_back(std::move(next));
    if (window.size() > m) window.pop_front();
    pas.advance();
  }
  return s;
}

PeriodReport detect_period(std::span<const std::uint64_t> residues, std::uint64_t modulus, std::size_t n_lo) {
  const std::size_t len = residues.size();
  if (modulus == 0 || len < 3 * modulus)
    throw window_error("detect_period: window of " + std::to_string(len) + " terms is shorter than 3M = " +
                       std::to_string(3 * modulus));
  PeriodReport rep;
  rep.modulus = modulus;
  rep.n_lo = n_lo;
  rep.n_hi = n_lo + len - 1;
  // prefix function: len - pi[len-1] is the least q with s[i] == s[i+q]
  std::vector<std::size_t> pi(len, 0);
  for (std::size_t i = 1; i < len; ++i) {
    std::size_t j = pi[i - 1];
    while (j > 0 && residues[i] != residues[j]) j = pi[j - 1];
    if (residues[i] == residues[j]) ++j;
    pi[i] = j;
  }
  const std::size_t q = len - pi[len - 1];
  rep.repetitions = len / q;
  if (rep.repetitions >= kMinRepetitions) {
    rep.period = q;
    rep.block.assign(residues.begin(), residues.begin() + q);
  }
  return rep;
}

std::vector<PeriodClaim> builtin_period_claims() {
  return {
      {"B-atmost-2-mod-3", TriangleSpec::second_at_most(2), 3, 0, {1, 1, 2}},
      {"B-atmost-3-mod-3", TriangleSpec::second_at_most(3), 3, 0, {1, 1, 2, 2, 2, 1}},
      {"B-atmost-5-mod-7", TriangleSpec::second_at_most(5), 7, 0, {1, 1, 2, 5, 1, 3, 6}},
      {"A-atmost-5-mod-7", TriangleSpec::first_at_most(5), 7, 0, {1, 1, 2, 6, 3, 1, 5}},
  };
}

IdentityReport check_period_claim(const PeriodClaim& claim, std::size_t n_max, PeriodReport* detail) {
  IdentityReport report("period:" + claim.name,
                        "n in [" + std::to_string(claim.n_lo) + "," + std::to_string(n_max) + "]");
  ReportTimer timer(report);
  const auto res = residues_mod(claim.family, claim.modulus, n_max);
  const std::span<const std::uint64_t> window(res.begin() + std::min(claim.n_lo, res.size()), res.end());
  const auto rep = detect_period(window, claim.modulus, claim.n_lo);
  if (detail) *detail = rep;
  report.expect_equal("period", Int(static_cast<unsigned long>(rep.period.value_or(0))),
                      Int(static_cast<unsigned long>(claim.block.size())));
  ++report.cases;
  if (rep.block != claim.block) {
    std::size_t i = 0;
    while (i < rep.block.size() && i < claim.block.size() && rep.block[i] == claim.block[i]) ++i;
    const Int got = i < rep.block.size() ? Int(static_cast<unsigned long>(rep.block[i])) : Int(-1);
    const Int want = i < claim.block.size() ? Int(static_cast<unsigned long>(claim.block[i])) : Int(-1);
    report.fail("block[" + std::to_string(i) + "]", got, want);
  }
  std::ostringstream note;
  note << "candidate period " << (rep.period ? std::to_string(*rep.period) : std::string("none")) << " with "
       << rep.repetitions << " repetitions over n in [" << rep.n_lo << "," << rep.n_hi << "]";
  report.notes.push_back(note.str());
  return report;
}

// ---------------------------------------------------------------------------

IdentityReport scan_conjecture_B_assoc(std::size_t n_max) {
  const auto seq = bell_seq_fast(TriangleSpec::second_at_least(2), n_max);
  return scan_conjecture_B_assoc(seq);
}

IdentityReport scan_conjecture_B_assoc(std::span<const Nat> b_ge2) {
  const std::size_t n_max = b_ge2.empty() ? 0 : b_ge2.size() - 1;
  IdentityReport report("conjecture-nu2-B-atleast-2", "n == 1 mod 3, 1 < n <= " + std::to_string(n_max));
  report.report_only = true;
  ReportTimer timer(report);

  struct Rule {
    const char* name;
    bool (*applies)(std::size_t);
    std::int64_t (*predict)(std::size_t);
    std::size_t cases = 0;
    std::size_t violations = 0;
    std::string first;
  };
  Rule rules[] = {
      {"n == 4 mod 12 -> 2", [](std::size_t n) { return n % 12 == 4; }, [](std::size_t) -> std::int64_t { return 2; }, 0, 0, {}},
      {"n == 7, 10 mod 12 -> 1", [](std::size_t n) { return n % 12 == 7 || n % 12 == 10; },
       [](std::size_t) -> std::int64_t { return 1; }, 0, 0, {}},
      {"n = 24t+1, t >= 1 -> 5 + nu2(t)", [](std::size_t n) { return n % 24 == 1 && n > 1; },
       [](std::size_t n) -> std::int64_t { return 5 + static_cast<std::int64_t>(nu_p(2, std::uint64_t(n / 24))); }, 0, 0, {}},
      {"n = 48t+37 -> 5", [](std::size_t n) { return n % 48 == 37; }, [](std::size_t) -> std::int64_t { return 5; }, 0, 0, {}},
      {"n = 96t+61 -> 6", [](std::size_t n) { return n % 96 == 61; }, [](std::size_t) -> std::int64_t { return 6; }, 0, 0, {}},
  };

  std::ostringstream residual;
  std::size_t residual_count = 0;
  std::map<std::uint64_t, std::size_t> class13;
  for (std::size_t n = 4; n <= n_max; n += 3) {
    const std::uint64_t v = nu_p(2, b_ge2[n]);
    if (n % 24 == 13) ++class13[v];
    bool covered = false;
    for (auto& rule : rules) {
      if (!rule.applies(n)) continue;
      covered = true;
      ++rule.cases;
      const auto want = rule.predict(n);
      if (report.expect_equal(rule.name + std::string(" n=") + std::to_string(n), Int(static_cast<unsigned long>(v)),
                              Int(static_cast<long>(want))))
        continue;
      if (rule.violations++ == 0)
        rule.first = "n=" + std::to_string(n) + " value " + std::to_string(v) + " predicted " + std::to_string(want);
    }
    if (!covered) {
      residual << (residual_count++ ? " " : "") << n << ":" << v;
    }
  }
  for (const auto& rule : rules) {
    std::ostringstream os;
    os << "rule " << rule.name << ": ";
    if (rule.violations == 0) os << "consistent over " << rule.cases << " indices";
    else os << rule.violations << " of " << rule.cases << " indices violate, first " << rule.first;
    report.notes.push_back(os.str());
  }
  report.notes.push_back(histogram_note(13, "n mod 24, unresolved", class13, 0));
  report.notes.push_back("unexplained (n == 13 mod 96) n:value " + std::to_string(residual_count) + " indices: " +
                         residual.str());
  return report;
}

}  // namespace rbell
