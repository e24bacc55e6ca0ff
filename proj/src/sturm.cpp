#include "rbell/sturm.hpp"

#include <stdexcept>

namespace rbell {

namespace {

int sign_at_infinity(const DensePolyQ& p, bool negative) {
  const int lead = sgn(p.leading());
  return negative && p.degree() % 2 ? -lead : lead;
}

std::size_t count_variations(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

SturmChain::SturmChain(const DensePolyQ& p) {
  if (p.is_zero()) throw std::invalid_argument("SturmChain: zero polynomial");
  chain_.push_back(primitive_part(p));
  if (p.degree() == 0) return;
  chain_.push_back(primitive_part(p.derivative()));
  while (true) {
    auto rem = divmod(chain_[chain_.size() - 2], chain_.back()).second;
    if (rem.is_zero()) break;
    chain_.push_back(primitive_part(-rem));
  }
}

std::size_t SturmChain::variations_at(const Rat& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(sgn(q.evaluate(x)));
  return count_variations(signs);
}

std::size_t SturmChain::variations_at_neg_infinity() const {
  std::vector<int> signs;
  for (const auto& q : chain_) signs.push_back(sign_at_infinity(q, true));
  return count_variations(signs);
}

std::size_t SturmChain::variations_at_pos_infinity() const {
  std::vector<int> signs;
  for (const auto& q : chain_) signs.push_back(sign_at_infinity(q, false));
  return count_variations(signs);
}

std::size_t SturmChain::count_roots(const Rat& a, const Rat& b) const {
  if (!(a < b)) throw std::invalid_argument("count_roots: need a < b");
  return variations_at(a) - variations_at(b);
}

std::size_t SturmChain::count_real_roots() const {
  return variations_at_neg_infinity() - variations_at_pos_infinity();
}

std::size_t SturmChain::count_roots_above(const Rat& x) const {
  return variations_at(x) - variations_at_pos_infinity();
}

DensePolyQ squarefree_part(const DensePolyQ& p) {
  if (p.degree() <= 0) return primitive_part(p);
  const auto g = gcd(p, p.derivative());
  return primitive_part(divmod(p, g).first);
}

RootReport real_roots_nonpositive(const DensePolyZ& p) {
  if (p.is_zero()) throw std::invalid_argument("real_roots_nonpositive: zero polynomial");
  RootReport r;
  r.degree = static_cast<std::size_t>(p.degree());
  r.zero_multiplicity = p.low_order_zeros();

  std::vector<Int> rest(p.coeffs().begin() + static_cast<long>(r.zero_multiplicity), p.coeffs().end());
  const auto stripped = to_rational(DensePolyZ(std::move(rest)));
  const auto sf = squarefree_part(stripped);
  r.squarefree_degree = static_cast<std::size_t>(sf.degree());

  const SturmChain chain(sf);
  r.distinct_real_roots = chain.count_real_roots();
  r.distinct_positive_roots = chain.count_roots_above(Rat(0));
  r.real_rooted = r.distinct_real_roots == r.squarefree_degree;
  if (r.real_rooted) r.all_nonpositive = r.distinct_positive_roots == 0;
  return r;
}

}  // namespace rbell
