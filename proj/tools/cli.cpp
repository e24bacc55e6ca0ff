#include "cli.hpp"

#include "output.hpp"
#include "suites.hpp"

#include "rbell/enumerate.hpp"
#include "rbell/hankel.hpp"
#include "rbell/sturm.hpp"
#include "rbell/triangle.hpp"
#include "rbell/valuation.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace rbell::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FamilyFlags {
  std::string family;
  std::string kind;
  std::string constraint;
  int m = 0;

  void attach(CLI::App* sub) {
    sub->add_option("--family", family, "family as <B|A>-<atmost|atleast>-<m>");
    sub->add_option("--kind", kind, "B (partitions) or A (permutations)")->check(CLI::IsMember({"B", "A"}));
    sub->add_option("--constraint", constraint, "atmost or atleast")->check(CLI::IsMember({"atmost", "atleast"}));
    sub->add_option("--m", m, "block or cycle size bound")->check(CLI::PositiveNumber);
  }

  TriangleSpec resolve() const {
    if (!family.empty()) {
      try {
        return TriangleSpec::parse(family);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    if (kind.empty() || constraint.empty() || m < 1)
      throw UsageError("give --family, or all of --kind, --constraint and --m");
    return TriangleSpec::parse(kind + "-" + constraint + "-" + std::to_string(m));
  }
};

Format resolve_format(const std::string& flag) {
  std::string name = flag;
  if (name.empty()) {
    const char* env = std::getenv(kFormatEnv);
    name = env && *env ? env : "pretty";
  }
  const auto f = parse_format(name);
  if (!f) throw UsageError("unknown output format '" + name + "' (csv, json, bfile, pretty)");
  return *f;
}

void add_format(CLI::App* sub, std::string& target) {
  sub->add_option("--format", target, std::string("csv, json, bfile or pretty; default from ") + kFormatEnv)
      ->check(CLI::IsMember({"csv", "json", "bfile", "pretty"}));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int report_exit(const std::vector<IdentityReport>& reports) {
  for (const auto& r : reports)
    if (!r.report_only && !r.pass()) return kExitCheckFailed;
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Restricted and associated Stirling, Bell and factorial numbers", "rbell"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "help for every subcommand");

  // seq / triangle
  FamilyFlags seq_fam, tri_fam;
  int seq_n = 0, tri_n = 0;
  std::int64_t seq_offset = 0, tri_offset = 0;
  std::string seq_format, tri_format;
  auto* seq = app.add_subcommand("seq", "sequence s_0..s_n of a family");
  seq_fam.attach(seq);
  seq->add_option("--n", seq_n, "last index")->required()->check(CLI::NonNegativeNumber);
  seq->add_option("--offset", seq_offset, "index printed for s_0");
  add_format(seq, seq_format);

  auto* tri = app.add_subcommand("triangle", "rows T(n,0..n) for n <= N");
  tri_fam.attach(tri);
  tri->add_option("--n", tri_n, "last row")->required()->check(CLI::NonNegativeNumber);
  tri->add_option("--offset", tri_offset, "first index of the flattened b-file");
  add_format(tri, tri_format);

  // verify
  std::string suite_sel = "all", ver_format;
  int nm_max = -1, n_max = -1, ver_m = -1;
  unsigned jobs = 1;
  bool list_suites = false;
  auto* ver = app.add_subcommand("verify", "run identity, valuation and conjecture suites");
  ver->add_option("--suite", suite_sel, "comma-separated suite names, or all");
  ver->add_option("--nm-max", nm_max, "bound on n+m for convolution suites")->check(CLI::NonNegativeNumber);
  ver->add_option("--n-max", n_max, "range bound for the selected suites")->check(CLI::NonNegativeNumber);
  ver->add_option("--m", ver_m, "constraint bound for the selected suites")->check(CLI::PositiveNumber);
  ver->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  ver->add_flag("--list", list_suites, "list suites and exit");
  add_format(ver, ver_format);

  // hankel
  std::string hk_family, hk_format;
  int hk_n = 0;
  auto* hk = app.add_subcommand("hankel", "Hankel transform det H_0..det H_n of a family's sequence");
  hk->add_option("--family", hk_family, "family as <B|A>-<atmost|atleast>-<m>")->required();
  hk->add_option("--n", hk_n, "last order")->required()->check(CLI::NonNegativeNumber);
  add_format(hk, hk_format);

  // valuation
  std::string val_family, val_pattern, val_builtin, val_dump, val_format;
  std::uint64_t val_p = 0;
  int val_n = -1;
  bool val_check = false, val_list = false;
  auto* val = app.add_subcommand("valuation", "p-adic valuations of a family, optionally checked against a pattern");
  val->add_option("--p", val_p, "prime")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 62));
  val->add_option("--family", val_family, "family as <B|A>-<atmost|atleast>-<m>");
  val->add_option("--n", val_n, "last index")->check(CLI::NonNegativeNumber);
  auto* pat_opt = val->add_option("--pattern", val_pattern, "JSON pattern file to check");
  auto* bi_opt = val->add_option("--builtin", val_builtin, "built-in pattern to check");
  auto* chk_opt = val->add_flag("--check", val_check, "check the built-in pattern for this p and family");
  pat_opt->excludes(bi_opt)->excludes(chk_opt);
  bi_opt->excludes(chk_opt);
  val->add_option("--dump", val_dump, "print a built-in pattern as JSON and exit");
  val->add_flag("--list", val_list, "list built-in patterns and exit");
  add_format(val, val_format);

  // period
  FamilyFlags per_fam;
  std::uint64_t per_mod = 0;
  int per_n = 0;
  std::size_t per_from = 0;
  std::string per_format;
  auto* per = app.add_subcommand("period", "candidate period of s_n mod M over a window");
  per_fam.attach(per);
  per->add_option("--mod", per_mod, "modulus")->required()->check(CLI::Range(std::uint64_t{2}, ~std::uint64_t{0}));
  per->add_option("--n", per_n, "window end")->required()->check(CLI::NonNegativeNumber);
  per->add_option("--from", per_from, "window start");
  add_format(per, per_format);

  // poly
  unsigned poly_m = 0;
  int poly_n = 0;
  bool poly_roots = false;
  std::string poly_format;
  auto* poly = app.add_subcommand("poly", "coefficients of the restricted Bell polynomial B_{n,<=m}(x)");
  poly->add_option("--m", poly_m, "largest block size")->required()->check(CLI::PositiveNumber);
  poly->add_option("--n", poly_n, "degree index n")->required()->check(CLI::NonNegativeNumber);
  poly->add_flag("--roots", poly_roots, "report real-rootedness instead of coefficients");
  add_format(poly, poly_format);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const auto parsed = app.get_subcommands();
    err << (parsed.empty() ? app.help() : parsed.front()->help());
    return kExitUsage;
  }

  CLI::App* active = app.get_subcommands().front();
  try {
    if (active == seq) {
      const auto spec = seq_fam.resolve();
      const auto values = bell_seq_fast(spec, static_cast<std::size_t>(seq_n));
      const auto terms = indexed(values, seq_offset);
      write_sequence(out, resolve_format(seq_format), spec.name(), terms);
      return kExitOk;
    }
    if (active == tri) {
      const auto spec = tri_fam.resolve();
      TriangleTable table(spec);
      table.fill_to(static_cast<std::size_t>(tri_n));
      std::vector<std::vector<Nat>> rows;
      for (int n = 0; n <= tri_n; ++n) rows.push_back(table.row(n));
      write_triangle(out, resolve_format(tri_format), spec.name(), rows, tri_offset);
      return kExitOk;
    }
    if (active == ver) {
      const auto fmt = resolve_format(ver_format);
      if (list_suites) {
        for (const auto& s : suites()) out << s.name << "  " << s.summary << "\n";
        return kExitOk;
      }
      if (fmt == Format::Bfile) throw UsageError("verify reports cannot be written as a b-file");
      std::vector<const Suite*> selected;
      try {
        selected = select_suites(suite_sel);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      VerifyOptions opt;
      if (nm_max >= 0) opt.nm_max = nm_max;
      if (n_max >= 0) opt.n_max = n_max;
      if (ver_m >= 1) opt.m = ver_m;
      opt.jobs = jobs;
      const auto reports = run_suites(selected, opt);
      write_reports(out, fmt, reports);
      return report_exit(reports);
    }
    if (active == hk) {
      TriangleSpec spec = TriangleSpec::second_at_most(1);
      try {
        spec = TriangleSpec::parse(hk_family);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const auto seq_values = bell_seq_fast(spec, 2 * static_cast<std::size_t>(hk_n));
      const std::vector<Int> as_int(seq_values.begin(), seq_values.end());
      const auto dets = hankel_transform(as_int, hk_n);
      std::vector<Term> terms;
      for (int n = 0; n <= hk_n; ++n) terms.push_back({n, dets[n]});
      write_sequence(out, resolve_format(hk_format), "hankel " + spec.name(), terms);
      return kExitOk;
    }
    if (active == val) {
      const auto fmt = resolve_format(val_format);
      if (val_list) {
        for (const auto& p : builtin_patterns())
          out << p.name << "  p=" << p.p << " " << p.family->name() << " mod " << p.modulus << "\n";
        return kExitOk;
      }
      if (!val_dump.empty()) {
        try {
          out << builtin_pattern(val_dump).to_json() << "\n";
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
        return kExitOk;
      }
      std::optional<PatternSpec> pattern;
      try {
        if (!val_pattern.empty()) pattern = PatternSpec::from_json(read_file(val_pattern));
        if (!val_builtin.empty()) pattern = builtin_pattern(val_builtin);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      std::optional<TriangleSpec> spec;
      if (!val_family.empty()) {
        try {
          spec = TriangleSpec::parse(val_family);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      }
      if (pattern && !spec) spec = pattern->family;
      if (pattern && val_p == 0) val_p = pattern->p;
      if (!spec || val_p == 0) throw UsageError("give --p and --family (or a pattern that names them)");
      if (val_check) {
        for (const auto& p : builtin_patterns())
          if (p.p == val_p && *p.family == *spec) pattern = p;
        if (!pattern) throw UsageError("no built-in pattern for p=" + std::to_string(val_p) + " and " + spec->name());
      }
      const std::size_t n = val_n >= 0 ? static_cast<std::size_t>(val_n) : (pattern ? pattern->n_max : 100);
      const auto profile = valuation_profile(val_p, *spec, n);
      if (!pattern) {
        std::vector<Term> terms;
        for (std::size_t i = 0; i < profile.values.size(); ++i)
          terms.push_back({static_cast<std::int64_t>(i),
                           profile.values[i] ? std::optional<Int>(Int(static_cast<unsigned long>(*profile.values[i])))
                                             : std::nullopt});
        write_sequence(out, fmt, "nu_" + std::to_string(val_p) + " " + spec->name(), terms);
        return kExitOk;
      }
      if (fmt == Format::Bfile) throw UsageError("pattern reports cannot be written as a b-file");
      std::vector<IdentityReport> reports;
      try {
        reports.push_back(check_pattern(profile, *pattern));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      write_reports(out, fmt, reports);
      return report_exit(reports);
    }
    if (active == per) {
      const auto fmt = resolve_format(per_format);
      if (fmt == Format::Bfile) throw UsageError("period reports cannot be written as a b-file");
      const auto spec = per_fam.resolve();
      if (per_from > static_cast<std::size_t>(per_n)) throw UsageError("--from is past --n");
      const auto res = residues_mod(spec, per_mod, static_cast<std::size_t>(per_n));
      PeriodReport rep;
      try {
        rep = detect_period(std::span<const std::uint64_t>(res).subspan(per_from), per_mod, per_from);
      } catch (const window_error& e) {
        throw UsageError(e.what());
      }
      write_period(out, fmt, spec.name(), rep);
      return kExitOk;
    }
    if (active == poly) {
      const auto fmt = resolve_format(poly_format);
      const auto p = bell_poly_restricted(poly_m, static_cast<std::size_t>(poly_n));
      const std::string label = "B_{" + std::to_string(poly_n) + ",<=" + std::to_string(poly_m) + "}(x)";
      if (!poly_roots) {
        write_sequence(out, fmt, label, indexed(p.coeffs()));
        return kExitOk;
      }
      if (fmt == Format::Bfile) throw UsageError("root reports cannot be written as a b-file");
      const auto r = real_roots_nonpositive(p);
      const std::string nonpos = r.all_nonpositive ? (*r.all_nonpositive ? "yes" : "no") : "n/a";
      if (fmt == Format::Json) {
        out << "{\n  \"label\": \"" << label << "\",\n  \"degree\": " << r.degree << ",\n  \"real_rooted\": "
            << (r.real_rooted ? "true" : "false") << ",\n  \"all_nonpositive\": "
            << (r.all_nonpositive ? (*r.all_nonpositive ? "true" : "false") : "null")
            << ",\n  \"distinct_real_roots\": " << r.distinct_real_roots << ",\n  \"squarefree_degree\": "
            << r.squarefree_degree << ",\n  \"zero_multiplicity\": " << r.zero_multiplicity << "\n}\n";
      } else if (fmt == Format::Csv) {
        out << "label,degree,real_rooted,all_nonpositive,distinct_real_roots,squarefree_degree,zero_multiplicity\n"
            << csv_field(label) << "," << r.degree << "," << (r.real_rooted ? "yes" : "no") << "," << nonpos << ","
            << r.distinct_real_roots << "," << r.squarefree_degree << "," << r.zero_multiplicity << "\n";
      } else {
        out << label << " = " << p.to_string() << "\n"
            << "degree " << r.degree << ", real-rooted " << (r.real_rooted ? "yes" : "no") << ", roots <= 0 "
            << nonpos << ", distinct real roots " << r.distinct_real_roots << " of " << r.squarefree_degree
            << ", root 0 with multiplicity " << r.zero_multiplicity << "\n";
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << active->help();
    return kExitUsage;
  } catch (const budget_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace rbell::cli
