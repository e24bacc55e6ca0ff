#include "output.hpp"

#include "json.hpp"

#include <sstream>
#include <stdexcept>

namespace rbell::cli {

using ojson = nlohmann::ordered_json;
using rbell::to_string;

std::optional<Format> parse_format(std::string_view name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  if (name == "bfile") return Format::Bfile;
  if (name == "pretty") return Format::Pretty;
  return std::nullopt;
}

std::string to_string(Format f) {
  switch (f) {
    case Format::Csv: return "csv";
    case Format::Json: return "json";
    case Format::Bfile: return "bfile";
    case Format::Pretty: return "pretty";
  }
  return "?";
}

std::vector<Term> indexed(std::span<const Nat> values, std::int64_t offset) {
  std::vector<Term> out;
  out.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out.push_back({offset + static_cast<std::int64_t>(i), values[i]});
  return out;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void write_sequence(std::ostream& os, Format f, const std::string& label, std::span<const Term> terms) {
  switch (f) {
    case Format::Csv:
      os << "n,value\n";
      for (const auto& t : terms) os << t.n << "," << (t.value ? to_string(*t.value) : "") << "\n";
      return;
    case Format::Bfile:
      for (const auto& t : terms)
        if (t.value) os << t.n << " " << to_string(*t.value) << "\n";
      return;
    case Format::Json: {
      ojson j;
      j["label"] = label;
      j["offset"] = terms.empty() ? 0 : terms.front().n;
      auto& vals = j["values"] = ojson::array();
      for (const auto& t : terms) vals.push_back(t.value ? ojson(to_string(*t.value)) : ojson(nullptr));
      os << j.dump(2) << "\n";
      return;
    }
    case Format::Pretty: {
      os << label << "\n";
      std::size_t width = 1;
      for (const auto& t : terms) width = std::max(width, std::to_string(t.n).size());
      for (const auto& t : terms) {
        const auto idx = std::to_string(t.n);
        os << std::string(width - idx.size(), ' ') << idx << "  " << (t.value ? to_string(*t.value) : "undefined")
           << "\n";
      }
      return;
    }
  }
}

void write_triangle(std::ostream& os, Format f, const std::string& label, const std::vector<std::vector<Nat>>& rows,
                    std::int64_t offset) {
  switch (f) {
    case Format::Csv:
      os << "n,k,value\n";
      for (std::size_t n = 0; n < rows.size(); ++n)
        for (std::size_t k = 0; k < rows[n].size(); ++k) os << n << "," << k << "," << to_string(rows[n][k]) << "\n";
      return;
    case Format::Bfile: {
      std::int64_t i = offset;
      for (const auto& row : rows)
        for (const auto& v : row) os << i++ << " " << to_string(v) << "\n";
      return;
    }
    case Format::Json: {
      ojson j;
      j["label"] = label;
      auto& arr = j["rows"] = ojson::array();
      for (const auto& row : rows) {
        auto r = ojson::array();
        for (const auto& v : row) r.push_back(to_string(v));
        arr.push_back(std::move(r));
      }
      os << j.dump(2) << "\n";
      return;
    }
    case Format::Pretty:
      os << label << "\n";
      for (std::size_t n = 0; n < rows.size(); ++n) {
        os << "n=" << n << ":";
        for (const auto& v : rows[n]) os << " " << to_string(v);
        os << "\n";
      }
      return;
  }
}

std::string status_of(const IdentityReport& r) {
  if (r.report_only) return "report";
  return r.pass() ? "pass" : "fail";
}

namespace {

ojson report_json(const IdentityReport& r) {
  ojson j;
  j["id"] = r.id;
  j["range"] = r.range;
  j["status"] = status_of(r);
  j["cases"] = r.cases;
  j["failure_count"] = r.failure_count;
  auto& fs = j["failures"] = ojson::array();
  for (const auto& f : r.failures) fs.push_back({{"inputs", f.inputs}, {"lhs", to_string(f.lhs)}, {"rhs", to_string(f.rhs)}});
  j["notes"] = r.notes;
  return j;
}

}  // namespace

void write_reports(std::ostream& os, Format f, std::span<const IdentityReport> reports) {
  bool failed = false;
  for (const auto& r : reports) failed |= !r.report_only && !r.pass();
  switch (f) {
    case Format::Bfile: throw std::invalid_argument("reports have no bfile encoding");
    case Format::Json: {
      ojson j;
      j["status"] = failed ? "fail" : "pass";
      auto& arr = j["reports"] = ojson::array();
      for (const auto& r : reports) arr.push_back(report_json(r));
      os << j.dump(2) << "\n";
      return;
    }
    case Format::Csv:
      os << "id,range,status,cases,failure_count,first_inputs,first_lhs,first_rhs\n";
      for (const auto& r : reports) {
        os << csv_field(r.id) << "," << csv_field(r.range) << "," << status_of(r) << "," << r.cases << ","
           << r.failure_count << ",";
        if (!r.failures.empty()) {
          const auto& f0 = r.failures.front();
          os << csv_field(f0.inputs) << "," << to_string(f0.lhs) << "," << to_string(f0.rhs);
        } else {
          os << ",,";
        }
        os << "\n";
      }
      return;
    case Format::Pretty:
      for (const auto& r : reports) {
        std::string tag = status_of(r);
        for (auto& c : tag) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        os << tag << std::string(7 - tag.size(), ' ') << r.id << "  [" << r.range << "]  cases " << r.cases;
        if (r.failure_count) os << ", " << (r.report_only ? "findings " : "failures ") << r.failure_count;
        os << "\n";
        if (!r.failures.empty()) {
          const auto& f0 = r.failures.front();
          os << "       first: " << f0.inputs << "  lhs=" << to_string(f0.lhs) << "  rhs=" << to_string(f0.rhs) << "\n";
        }
        for (const auto& note : r.notes) os << "       " << note << "\n";
      }
      os << (failed ? "FAILED" : "OK") << "\n";
      return;
  }
}

void write_period(std::ostream& os, Format f, const std::string& label, const PeriodReport& rep) {
  auto block_str = [&](const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < rep.block.size(); ++i) s += (i ? sep : "") + std::to_string(rep.block[i]);
    return s;
  };
  switch (f) {
    case Format::Bfile: throw std::invalid_argument("period reports have no bfile encoding");
    case Format::Json: {
      ojson j;
      j["label"] = label;
      j["modulus"] = rep.modulus;
      j["window"] = {rep.n_lo, rep.n_hi};
      j["candidate_period"] = rep.period ? ojson(*rep.period) : ojson(nullptr);
      j["block"] = rep.block;
      j["repetitions"] = rep.repetitions;
      os << j.dump(2) << "\n";
      return;
    }
    case Format::Csv:
      os << "label,modulus,n_lo,n_hi,candidate_period,repetitions,block\n";
      os << csv_field(label) << "," << rep.modulus << "," << rep.n_lo << "," << rep.n_hi << ","
         << (rep.period ? std::to_string(*rep.period) : "") << "," << rep.repetitions << "," << block_str(" ") << "\n";
      return;
    case Format::Pretty:
      os << label << " mod " << rep.modulus << ", n in [" << rep.n_lo << "," << rep.n_hi << "]\n";
      if (rep.period)
        os << "candidate period " << *rep.period << " (" << rep.repetitions << " repetitions), block {"
           << block_str(", ") << "}\n";
      else
        os << "no period with at least " << kMinRepetitions << " repetitions in the window\n";
      return;
  }
}

namespace {

Int parse_int(std::string_view s) {
  Int v;
  if (s.empty() || v.set_str(std::string(s), 10) != 0) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  return v;
}

std::int64_t parse_index(std::string_view s) {
  try {
    std::size_t pos = 0;
    const auto v = std::stoll(std::string(s), &pos);
    if (pos != s.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad index '" + std::string(s) + "'");
  }
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out(1);
  for (char c : line) {
    if (c == sep) out.emplace_back();
    else out.back() += c;
  }
  return out;
}

std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream is{std::string(text)};
  for (std::string line; std::getline(is, line);)
    if (!line.empty() && line[0] != '#') out.push_back(line);
  return out;
}

}  // namespace

std::vector<Term> parse_sequence(Format f, std::string_view text) {
  std::vector<Term> out;
  switch (f) {
    case Format::Csv: {
      const auto lines = lines_of(text);
      if (lines.empty() || lines[0] != "n,value") throw std::invalid_argument("csv: missing header");
      for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto fields = split(lines[i], ',');
        if (fields.size() != 2) throw std::invalid_argument("csv: expected two fields");
        out.push_back({parse_index(fields[0]), fields[1].empty() ? std::nullopt : std::optional<Int>(parse_int(fields[1]))});
      }
      return out;
    }
    case Format::Bfile:
      for (const auto& line : lines_of(text)) {
        const auto fields = split(line, ' ');
        if (fields.size() != 2) throw std::invalid_argument("bfile: expected 'n value'");
        out.push_back({parse_index(fields[0]), parse_int(fields[1])});
      }
      return out;
    case Format::Json:
      try {
        const auto j = nlohmann::json::parse(text);
        std::int64_t n = j.at("offset").get<std::int64_t>();
        for (const auto& v : j.at("values")) {
          out.push_back({n++, v.is_null() ? std::nullopt : std::optional<Int>(parse_int(v.get<std::string>()))});
        }
      } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("json: ") + e.what());
      }
      return out;
    case Format::Pretty: break;
  }
  throw std::invalid_argument("pretty output is not meant to be parsed");
}

std::vector<std::vector<Int>> parse_triangle(Format f, std::string_view text) {
  std::vector<std::vector<Int>> rows;
  if (f == Format::Csv) {
    const auto lines = lines_of(text);
    if (lines.empty() || lines[0] != "n,k,value") throw std::invalid_argument("csv: missing header");
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const auto fields = split(lines[i], ',');
      if (fields.size() != 3) throw std::invalid_argument("csv: expected three fields");
      const auto n = static_cast<std::size_t>(parse_index(fields[0]));
      const auto k = static_cast<std::size_t>(parse_index(fields[1]));
      if (n != rows.size() - (rows.empty() ? 0 : 1) && n != rows.size()) throw std::invalid_argument("csv: rows out of order");
      if (n == rows.size()) rows.emplace_back();
      if (k != rows[n].size()) throw std::invalid_argument("csv: entries out of order");
      rows[n].push_back(parse_int(fields[2]));
    }
    return rows;
  }
  if (f == Format::Json) {
    try {
      const auto j = nlohmann::json::parse(text);
      for (const auto& row : j.at("rows")) {
        rows.emplace_back();
        for (const auto& v : row) rows.back().push_back(parse_int(v.get<std::string>()));
      }
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("json: ") + e.what());
    }
    return rows;
  }
  throw std::invalid_argument("triangles parse from csv or json only");
}

}  // namespace rbell::cli
