#pragma once

// Dense univariate polynomials with exact coefficients. Index = degree.
// The coefficient vector never carries a zero leading coefficient; the
// zero polynomial is the empty vector.

#include "rbell/exact.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace rbell {

template <typename Coeff>
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  DensePoly(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }

  static DensePoly constant(Coeff c) { return DensePoly(std::vector<Coeff>{std::move(c)}); }
  static DensePoly monomial(std::size_t degree, Coeff c = Coeff(1)) {
    std::vector<Coeff> v(degree + 1, Coeff(0));
    v[degree] = std::move(c);
    return DensePoly(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i, zero past the end.
  Coeff coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff(0); }
  const Coeff& leading() const { return coeffs_.back(); }

  template <typename X>
  X evaluate(const X& x) const {
    X acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  DensePoly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Coeff> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return DensePoly(std::move(d));
  }

  /// Multiplies by x^k.
  DensePoly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Coeff> v(k, Coeff(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return DensePoly(std::move(v));
  }

  /// Number of trailing zero coefficients, i.e. the multiplicity of 0 as a root.
  std::size_t low_order_zeros() const {
    std::size_t i = 0;
    while (i < coeffs_.size() && coeffs_[i] == 0) ++i;
    return i;
  }

  DensePoly& operator+=(const DensePoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  DensePoly& operator-=(const DensePoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  DensePoly& operator*=(const Coeff& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
  }

  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  friend DensePoly operator*(DensePoly a, const Coeff& c) { return a *= c; }
  friend DensePoly operator-(DensePoly a) { return a *= Coeff(-1); }

  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> v(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return DensePoly(std::move(v));
  }

  friend bool operator==(const DensePoly& a, const DensePoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (long i = degree(); i >= 0; --i) {
      const Coeff& c = coeffs_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      std::string term = rbell::to_string(c);
      if (!out.empty()) {
        if (term.front() == '-') {
          out += " - ";
          term.erase(0, 1);
        } else {
          out += " + ";
        }
      }
      if (i > 0 && term == "1") term.clear();
      if (i > 0 && term == "-1") term = "-";
      out += term;
      if (i >= 1) out += "x";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using DensePolyZ = DensePoly<Int>;
using DensePolyQ = DensePoly<Rat>;

DensePolyQ to_rational(const DensePolyZ& p);

/// Quotient and remainder over Q. Throws std::domain_error on a zero divisor.
std::pair<DensePolyQ, DensePolyQ> divmod(const DensePolyQ& num, const DensePolyQ& den);

/// Monic gcd over Q (zero if both inputs are zero).
DensePolyQ gcd(DensePolyQ a, DensePolyQ b);

/// Scales p by a positive rational so its coefficients are coprime
/// integers. Sign pattern and roots are preserved.
DensePolyQ primitive_part(const DensePolyQ& p);

}  // namespace rbell
