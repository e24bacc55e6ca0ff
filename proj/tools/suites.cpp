#include "suites.hpp"

#include "rbell/conjectures.hpp"
#include "rbell/family.hpp"
#include "rbell/identities.hpp"
#include "rbell/valuation.hpp"

#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>

namespace rbell::cli {
namespace {

std::vector<TriangleSpec> four_families(unsigned m) {
  return {TriangleSpec::second_at_most(m), TriangleSpec::first_at_most(m), TriangleSpec::second_at_least(m),
          TriangleSpec::first_at_least(m)};
}

std::vector<Suite> make_suites() {
  std::vector<Suite> s;
  s.push_back({"spivey", "convolution identities (classical, involutions, blocks <= 3, composition sets)", false,
               [](const VerifyOptions& o) {
                 const int nm = o.nm_max.value_or(10);
                 const int m_max = o.m.value_or(4);
                 std::vector<Task> t{
                     [nm] { return check_spivey_classic_range(nm); },
                     [nm] { return check_involution_convolution_range(nm); },
                     [nm] { return check_spivey_restricted3_range(nm); },
                 };
                 for (int m = 1; m <= m_max; ++m)
                   for (const auto& fam : four_families(m))
                     t.push_back([fam, nm] { return check_spivey_general_range(fam, nm); });
                 return t;
               }});
  s.push_back({"hankel", "Hankel transforms equal to superfactorials", false, [](const VerifyOptions& o) {
                 const int order = o.n_max.value_or(8);
                 return std::vector<Task>{[order] { return check_hankel_transforms(order); }};
               }});
  s.push_back({"binomial", "alternating binomial transform of involution numbers", false, [](const VerifyOptions& o) {
                 const int n = o.n_max.value_or(30);
                 return std::vector<Task>{[n] { return check_binomial_transform_involutions(n); }};
               }});
  s.push_back({"egf", "exponential generating functions of all families", false, [](const VerifyOptions& o) {
                 const int m = o.m.value_or(5), n = o.n_max.value_or(24);
                 std::vector<Task> t;
                 for (int k = 1; k <= m; ++k) t.push_back([k, n] { return check_egfs(k, n, k); });
                 return t;
               }});
  s.push_back({"assoc", "associated Bell relations, generalized Aigner recurrence, derangements", false,
               [](const VerifyOptions& o) {
                 const int n = o.n_max.value_or(20);
                 const int k_max = o.m.value_or(5);
                 std::vector<Task> t{[n, k_max] { return check_assoc_bell_relations(n, k_max); }};
                 const int n_rec = o.n_max.value_or(100);
                 for (int k = 2; k <= k_max; ++k) t.push_back([k, n_rec] { return check_genaigner(k, n_rec); });
                 t.push_back([n_rec] { return check_derangement_recurrences(n_rec); });
                 return t;
               }});
  s.push_back({"mezo", "last-digit congruences of restricted Bell numbers", false, [](const VerifyOptions& o) {
                 const int n = o.n_max.value_or(1000);
                 return std::vector<Task>{[n] { return check_mezo_congruences(n); },
                                          [n] { return scan_mezo_cross_family(n); }};
               }});
  s.push_back({"orthogonality", "orthogonality of the two classical triangles", false, [](const VerifyOptions& o) {
                 const int n = o.n_max.value_or(20);
                 return std::vector<Task>{[n] { return check_orthogonality(n); }};
               }});
  s.push_back({"logshape", "log-convexity of B<=m and A<=m, log-concavity after dividing by n!", false,
               [](const VerifyOptions& o) {
                 const int m = o.m.value_or(5), n = o.n_max.value_or(200);
                 return std::vector<Task>{[m, n] { return check_log_shapes(m, n); }};
               }});
  s.push_back({"valuation", "built-in p-adic valuation patterns", false, [](const VerifyOptions& o) {
                 std::vector<Task> t;
                 for (const auto& pat : builtin_patterns()) {
                   const std::size_t n = o.n_max ? static_cast<std::size_t>(*o.n_max) : pat.n_max;
                   t.push_back([pat, n] { return check_pattern(valuation_profile(pat.p, *pat.family, n), pat); });
                 }
                 return t;
               }});
  s.push_back({"period", "periodic residue sequences", false, [](const VerifyOptions& o) {
                 std::vector<Task> t;
                 const std::size_t n = static_cast<std::size_t>(o.n_max.value_or(10000));
                 for (const auto& claim : builtin_period_claims())
                   t.push_back([claim, n] { return check_period_claim(claim, n); });
                 return t;
               }});
  s.push_back({"conjecture1", "real-rootedness of restricted Bell polynomials (report only)", true,
               [](const VerifyOptions& o) {
                 const unsigned lo = o.m ? static_cast<unsigned>(*o.m) : 1u;
                 const unsigned hi = o.m ? static_cast<unsigned>(*o.m) : 6u;
                 const std::size_t n = static_cast<std::size_t>(o.n_max.value_or(30));
                 return std::vector<Task>{[lo, hi, n] { return scan_real_rootedness(lo, hi, n); }};
               }});
  s.push_back({"conjecture2", "log-concavity of restricted Stirling rows (report only)", true,
               [](const VerifyOptions& o) {
                 const unsigned m = static_cast<unsigned>(o.m.value_or(5));
                 const std::size_t n = static_cast<std::size_t>(o.n_max.value_or(60));
                 return std::vector<Task>{[m, n] { return scan_row_log_concavity(m, n); }};
               }});
  s.push_back({"conjecture3", "2-adic rules for singleton-free partitions, n == 1 mod 3 (report only)", true,
               [](const VerifyOptions& o) {
                 const std::size_t n = static_cast<std::size_t>(o.n_max.value_or(4000));
                 return std::vector<Task>{[n] { return scan_conjecture_B_assoc(n); }};
               }});
  return s;
}

}  // namespace

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = make_suites();
  return all;
}

std::vector<const Suite*> select_suites(const std::string& selector) {
  std::vector<const Suite*> out;
  auto add = [&](const Suite* s) {
    for (auto* p : out)
      if (p == s) return;
    out.push_back(s);
  };
  std::size_t start = 0;
  while (start <= selector.size()) {
    const auto end = std::min(selector.find(',', start), selector.size());
    const auto name = selector.substr(start, end - start);
    if (name == "all") {
      for (const auto& s : suites()) add(&s);
    } else {
      const Suite* found = nullptr;
      for (const auto& s : suites())
        if (s.name == name) found = &s;
      if (!found) throw std::invalid_argument("unknown suite '" + name + "'");
      add(found);
    }
    start = end + 1;
  }
  return out;
}

std::vector<IdentityReport> run_suites(const std::vector<const Suite*>& selected, const VerifyOptions& opt) {
  std::vector<Task> tasks;
  std::vector<bool> conjecture;
  for (const auto* s : selected)
    for (auto& t : s->expand(opt)) {
      tasks.push_back(std::move(t));
      conjecture.push_back(s->conjecture);
    }
  std::vector<IdentityReport> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      try {
        results[i] = tasks[i]();
        if (conjecture[i]) results[i].report_only = true;
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace rbell::cli
