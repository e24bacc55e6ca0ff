#include "rbell/series.hpp"

#include "rbell/triangle.hpp"

#include <stdexcept>

namespace rbell {

TruncatedSeriesQ::TruncatedSeriesQ(std::size_t order, std::vector<Rat> coeffs)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1, Rat(0));
}

TruncatedSeriesQ& TruncatedSeriesQ::operator+=(const TruncatedSeriesQ& o) {
  if (o.order() != order()) throw std::invalid_argument("series order mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TruncatedSeriesQ& TruncatedSeriesQ::operator-=(const TruncatedSeriesQ& o) {
  if (o.order() != order()) throw std::invalid_argument("series order mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

TruncatedSeriesQ& TruncatedSeriesQ::operator*=(const Rat& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TruncatedSeriesQ operator*(const TruncatedSeriesQ& a, const TruncatedSeriesQ& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
  TruncatedSeriesQ out(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= a.order(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

Int TruncatedSeriesQ::egf_coefficient(std::size_t n) const {
  Rat scaled = coeffs_.at(n) * Rat(factorial(n));
  if (scaled.get_den() != 1)
    throw std::domain_error("n! [x^n] is not an integer at n = " + std::to_string(n));
  return scaled.get_num();
}

TruncatedSeriesQ series_exp(const TruncatedSeriesQ& s) {
  if (s[0] != 0) throw std::invalid_argument("series_exp: constant term must be zero");
  const std::size_t order = s.order();
  TruncatedSeriesQ e(order);
  e[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    Rat acc = 0;
    for (std::size_t k = 1; k <= n; ++k)
      if (s[k] != 0) acc += s[k] * e[n - k] * static_cast<unsigned long>(k);
    e[n] = acc / static_cast<unsigned long>(n);
  }
  return e;
}

TruncatedSeriesQ exp_x_series(std::size_t order) {
  TruncatedSeriesQ s(order);
  Nat fact = 1;
  for (std::size_t i = 0; i <= order; ++i) {
    if (i > 0) fact *= static_cast<unsigned long>(i);
    s[i] = Rat(1) / Rat(fact);
  }
  return s;
}

TruncatedSeriesQ log_one_over_one_minus_x(std::size_t order) {
  TruncatedSeriesQ s(order);
  for (std::size_t i = 1; i <= order; ++i) s[i] = Rat(1) / Rat(static_cast<unsigned long>(i));
  return s;
}

TruncatedSeriesQ egf_exponent(const TriangleSpec& spec, std::size_t order) {
  const bool second = spec.is_second_kind();
  auto term = [&](std::size_t i) -> Rat {
    return second ? Rat(1) / Rat(factorial(i)) : Rat(1) / Rat(static_cast<unsigned long>(i));
  };
  if (spec.is_at_most()) {
    TruncatedSeriesQ s(order);
    for (std::size_t i = 1; i <= spec.m() && i <= order; ++i) s[i] = term(i);
    return s;
  }
  TruncatedSeriesQ s = second ? exp_x_series(order) : log_one_over_one_minus_x(order);
  for (std::size_t i = 0; i < spec.m() && i <= order; ++i) {
    if (!second && i == 0) continue;  // log(1/(1-x)) has no constant term
    s[i] -= term(i);
  }
  return s;
}

IdentityReport egf_check(const TriangleSpec& spec, std::size_t order) {
  IdentityReport report("egf:" + spec.name(), "n <= " + std::to_string(order));
  ReportTimer timer(report);
  const auto egf = series_exp(egf_exponent(spec, order));
  const auto seq = bell_seq_fast(spec, order);
  for (std::size_t n = 0; n <= order; ++n)
    report.expect_equal("n=" + std::to_string(n), egf.egf_coefficient(n), seq[n]);
  return report;
}

}  // namespace rbell
