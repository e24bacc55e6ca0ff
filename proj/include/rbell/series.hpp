#pragma once

// Truncated power series over Q, used for exponential generating functions.

#include "rbell/exact.hpp"
#include "rbell/family.hpp"
#include "rbell/report.hpp"

#include <cstddef>
#include <vector>

namespace rbell {

/// c_0 + c_1 x + ... + c_N x^N, all arithmetic truncated at order N.
class TruncatedSeriesQ {
 public:
  explicit TruncatedSeriesQ(std::size_t order) : coeffs_(order + 1, Rat(0)) {}
  TruncatedSeriesQ(std::size_t order, std::vector<Rat> coeffs);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  const Rat& operator[](std::size_t i) const { return coeffs_[i]; }
  Rat& operator[](std::size_t i) { return coeffs_[i]; }

  TruncatedSeriesQ& operator+=(const TruncatedSeriesQ& o);
  TruncatedSeriesQ& operator-=(const TruncatedSeriesQ& o);
  TruncatedSeriesQ& operator*=(const Rat& c);

  friend TruncatedSeriesQ operator+(TruncatedSeriesQ a, const TruncatedSeriesQ& b) { return a += b; }
  friend TruncatedSeriesQ operator-(TruncatedSeriesQ a, const TruncatedSeriesQ& b) { return a -= b; }
  friend TruncatedSeriesQ operator-(TruncatedSeriesQ a) { return a *= Rat(-1); }
  friend TruncatedSeriesQ operator*(const TruncatedSeriesQ& a, const TruncatedSeriesQ& b);
  friend bool operator==(const TruncatedSeriesQ&, const TruncatedSeriesQ&) = default;

  /// n! [x^n] as an integer when exact; throws std::domain_error otherwise.
  Int egf_coefficient(std::size_t n) const;

 private:
  std::vector<Rat> coeffs_;
};

/// exp(s) for s with zero constant term, from E' = s' E:
///   n e_n = sum_{k=1}^{n} k s_k e_{n-k}.
/// Throws std::invalid_argument if s_0 != 0.
TruncatedSeriesQ series_exp(const TruncatedSeriesQ& s);

TruncatedSeriesQ exp_x_series(std::size_t order);

/// log(1/(1-x)) = sum_{n>=1} x^n / n
TruncatedSeriesQ log_one_over_one_minus_x(std::size_t order);

/// The series whose exponential is the family's EGF:
///   B AtMost m:  sum_{i=1}^{m} x^i/i!
///   A AtMost m:  sum_{i=1}^{m} x^i/i
///   B AtLeast m: exp(x) - sum_{i<m} x^i/i!
///   A AtLeast m: log(1/(1-x)) - sum_{i<m} x^i/i
TruncatedSeriesQ egf_exponent(const TriangleSpec& spec, std::size_t order);

/// Checks n! [x^n] exp(egf_exponent) against the engine for n <= order.
IdentityReport egf_check(const TriangleSpec& spec, std::size_t order);

}  // namespace rbell
