#include "rbell/poly.hpp"

#include <stdexcept>

namespace rbell {

DensePolyQ to_rational(const DensePolyZ& p) {
  std::vector<Rat> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return DensePolyQ(std::move(v));
}

std::pair<DensePolyQ, DensePolyQ> divmod(const DensePolyQ& num, const DensePolyQ& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  if (num.degree() < den.degree()) return {DensePolyQ{}, num};

  std::vector<Rat> rem = num.coeffs();
  const auto& d = den.coeffs();
  const std::size_t dn = d.size() - 1;
  std::vector<Rat> quot(rem.size() - dn, Rat(0));
  for (std::size_t i = rem.size(); i-- > dn;) {
    if (rem[i] == 0) continue;
    Rat q = rem[i] / d[dn];
    quot[i - dn] = q;
    for (std::size_t j = 0; j <= dn; ++j) rem[i - dn + j] -= q * d[j];
  }
  rem.resize(dn);
  return {DensePolyQ(std::move(quot)), DensePolyQ(std::move(rem))};
}

DensePolyQ gcd(DensePolyQ a, DensePolyQ b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = primitive_part(r);
  }
  if (a.is_zero()) return a;
  Rat lead = a.leading();
  return a * Rat(1 / lead);
}

DensePolyQ primitive_part(const DensePolyQ& p) {
  if (p.is_zero()) return p;
  Int num_gcd = 0;
  Int den_lcm = 1;
  for (const auto& c : p.coeffs()) {
    if (c == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  return p * scale;
}

}  // namespace rbell
