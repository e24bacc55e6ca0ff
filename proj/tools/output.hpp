#pragma once

// Encoders for the CLI's four output formats and the matching parsers used
// by the round-trip tests. Numbers are always written in full decimal; JSON
// carries them as strings so no reader has to guess at precision.

#include "rbell/exact.hpp"
#include "rbell/report.hpp"
#include "rbell/valuation.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rbell::cli {

enum class Format { Csv, Json, Bfile, Pretty };

std::optional<Format> parse_format(std::string_view name);
std::string to_string(Format f);

/// One term of an indexed sequence; an empty value marks an undefined term
/// (a valuation of zero).
struct Term {
  std::int64_t n;
  std::optional<Int> value;
  bool operator==(const Term&) const = default;
};

std::vector<Term> indexed(std::span<const Nat> values, std::int64_t offset = 0);

/// bfile drops undefined terms: every line is exactly "n value".
void write_sequence(std::ostream& os, Format f, const std::string& label, std::span<const Term> terms);

/// Rows T(n, 0..n). bfile flattens by rows with a running index from offset.
void write_triangle(std::ostream& os, Format f, const std::string& label,
                    const std::vector<std::vector<Nat>>& rows, std::int64_t offset = 0);

/// Throws std::invalid_argument for bfile, which has no report encoding.
void write_reports(std::ostream& os, Format f, std::span<const IdentityReport> reports);

void write_period(std::ostream& os, Format f, const std::string& label, const PeriodReport& rep);

/// Inverse of write_sequence for csv, json and bfile. Throws
/// std::invalid_argument on malformed text.
std::vector<Term> parse_sequence(Format f, std::string_view text);

/// Inverse of write_triangle for csv and json.
std::vector<std::vector<Int>> parse_triangle(Format f, std::string_view text);

/// "pass", "fail" or "report"
std::string status_of(const IdentityReport& r);

std::string csv_field(std::string_view s);

}  // namespace rbell::cli
