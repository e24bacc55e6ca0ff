#include "rbell/triangle.hpp"

#include <deque>
#include <stdexcept>

namespace rbell {

namespace {

const Nat kZero = 0;

const Nat& get_or_zero(const std::vector<Nat>& row, std::int64_t k) {
  if (k < 0 || static_cast<std::size_t>(k) >= row.size()) return kZero;
  return row[static_cast<std::size_t>(k)];
}

// C(n, j) for the second kind, n!/(n-j)! for the first kind.
Nat lag_coefficient(Kind kind, std::uint64_t n, std::uint64_t j) {
  return kind == Kind::SecondKind ? binomial(n, static_cast<std::int64_t>(j))
                                  : falling_factorial(n, j);
}

}  // namespace

std::int64_t lagged_row_index(const TriangleSpec& spec, std::size_t n) {
  const auto lag = static_cast<std::int64_t>(spec.is_at_most() ? spec.m() : spec.m() - 1);
  return static_cast<std::int64_t>(n) - lag;
}

std::vector<Nat> next_triangle_row(const TriangleSpec& spec, std::size_t n,
                                   const std::vector<Nat>& current,
                                   const std::vector<Nat>& lagged) {
  std::vector<Nat> next(n + 2);
  next[0] = 0;
  const unsigned lag_j = spec.is_at_most() ? spec.m() : spec.m() - 1;
  const Nat c = lagged.empty() ? Nat(0) : lag_coefficient(spec.kind(), n, lag_j);
  const bool second = spec.is_second_kind();

  for (std::size_t k = 1; k <= n + 1; ++k) {
    Nat& out = next[k];
    const Nat& same = get_or_zero(current, static_cast<std::int64_t>(k));
    const unsigned long weight = second ? k : n;
    mpz_mul_ui(out.get_mpz_t(), same.get_mpz_t(), weight);
    if (spec.is_at_most()) {
      out += current[k - 1];
      if (!lagged.empty()) {
        const Nat& l = get_or_zero(lagged, static_cast<std::int64_t>(k) - 1);
        if (l != 0) mpz_submul(out.get_mpz_t(), c.get_mpz_t(), l.get_mpz_t());
      }
    } else if (!lagged.empty()) {
      const Nat& l = get_or_zero(lagged, static_cast<std::int64_t>(k) - 1);
      if (l != 0) mpz_addmul(out.get_mpz_t(), c.get_mpz_t(), l.get_mpz_t());
    }
  }
  return next;
}

TriangleTable::TriangleTable(TriangleSpec spec) : spec_(spec) { rows_.push_back({Nat(1)}); }

void TriangleTable::fill_to(std::size_t n) {
  static const std::vector<Nat> kNone;
  while (rows_.size() <= n) {
    const std::size_t cur = rows_.size() - 1;
    const std::int64_t lag = lagged_row_index(spec_, cur);
    const auto& lagged = lag >= 0 ? rows_[static_cast<std::size_t>(lag)] : kNone;
    rows_.push_back(next_triangle_row(spec_, cur, rows_[cur], lagged));
  }
}

const Nat& TriangleTable::at(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return kZero;
  fill_to(static_cast<std::size_t>(n));
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

const Nat& TriangleTable::at(std::int64_t n, std::int64_t k) const {
  if (n < 0 || k < 0 || k > n) return kZero;
  if (static_cast<std::size_t>(n) >= rows_.size())
    throw std::out_of_range("TriangleTable: row " + std::to_string(n) + " not filled");
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

const std::vector<Nat>& TriangleTable::row(std::size_t n) {
  fill_to(n);
  return rows_[n];
}

Nat TriangleTable::row_sum(std::size_t n) {
  Nat s = 0;
  for (const auto& v : row(n)) s += v;
  return s;
}

void for_each_triangle_row(const TriangleSpec& spec, std::size_t n_max,
                           const std::function<void(std::size_t, const std::vector<Nat>&)>& visit) {
  static const std::vector<Nat> kNone;
  // window.front() is row `first`, window.back() is the current row.
  std::deque<std::vector<Nat>> window;
  std::size_t first = 0;
  window.push_back({Nat(1)});
  visit(0, window.back());
  const std::size_t depth = (spec.is_at_most() ? spec.m() : spec.m() - 1) + 1;
  for (std::size_t n = 0; n < n_max; ++n) {
    const std::int64_t lag = lagged_row_index(spec, n);
    const auto& lagged =
        lag >= 0 ? window[static_cast<std::size_t>(lag) - first] : kNone;
    window.push_back(next_triangle_row(spec, n, window.back(), lagged));
    visit(n + 1, window.back());
    while (window.size() > depth) {
      window.pop_front();
      ++first;
    }
  }
}

Nat stirling(const TriangleSpec& spec, std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  TriangleTable table(spec);
  return table.at(n, k);
}

Nat row_sum(const TriangleSpec& spec, std::size_t n) {
  TriangleTable table(spec);
  return table.row_sum(n);
}

std::vector<Nat> bell_seq_fast(const TriangleSpec& spec, std::size_t n_max) {
  std::vector<Nat> s(n_max + 1);
  const unsigned m = spec.m();

  if (spec.is_at_most()) {
    s[0] = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
      Nat acc = 0;
      // coefficient for j = 0 is 1 in both kinds
      Nat coef = 1;
      for (std::size_t j = 0; j < m && j < n; ++j) {
        if (j > 0) {
          if (spec.is_second_kind()) {
            // C(n-1, j) = C(n-1, j-1) (n-j) / j
            coef *= static_cast<unsigned long>(n - j);
            mpz_divexact_ui(coef.get_mpz_t(), coef.get_mpz_t(), j);
          } else {
            coef *= static_cast<unsigned long>(n - j);
          }
        }
        mpz_addmul(acc.get_mpz_t(), coef.get_mpz_t(), s[n - 1 - j].get_mpz_t());
      }
      s[n] = std::move(acc);
    }
    return s;
  }

  if (!spec.is_second_kind()) {
    s[0] = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
      Nat acc = s[n - 1] * static_cast<unsigned long>(n - 1);
      if (n >= m) acc += falling_factorial(n - 1, m - 1) * s[n - m];
      s[n] = std::move(acc);
    }
    return s;
  }

  for_each_triangle_row(spec, n_max, [&](std::size_t n, const std::vector<Nat>& row) {
    Nat acc = 0;
    for (const auto& v : row) acc += v;
    s[n] = std::move(acc);
  });
  return s;
}

std::vector<Nat> classical_bell(std::size_t n_max) {
  std::vector<Nat> bell(n_max + 1);
  // two buffers swapped each step so limbs are reused
  std::vector<Nat> row(n_max + 1), next(n_max + 1);
  row[0] = 1;
  bell[0] = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    next[0] = row[n - 1];
    for (std::size_t i = 0; i < n; ++i)
      mpz_add(next[i + 1].get_mpz_t(), next[i].get_mpz_t(), row[i].get_mpz_t());
    row.swap(next);
    bell[n] = row[0];
  }
  return bell;
}

Nat involution_closed_form(std::size_t n) {
  Nat total = 0;
  for (std::size_t j = 0; 2 * j <= n; ++j)
    total += binomial(n, static_cast<std::int64_t>(2 * j)) * double_factorial_odd(2 * j);
  return total;
}

namespace {

// n! / (i! w^i (n - i b)!) where b is the block size.
Nat block_placement_count(std::size_t n, std::size_t i, std::size_t b, const Nat& w) {
  Nat num = falling_factorial(n, i * b);
  Nat den = factorial(i);
  Nat wp;
  mpz_pow_ui(wp.get_mpz_t(), w.get_mpz_t(), i);
  den *= wp;
  mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return num;
}

Nat block_weight(Kind kind, unsigned size) {
  return kind == Kind::SecondKind ? factorial(size) : Nat(size);
}

}  // namespace

std::vector<Nat> reduce_largest_block_seq(const TriangleSpec& spec, std::size_t n_max) {
  if (!spec.is_at_most() || spec.m() < 2)
    throw std::invalid_argument("reduce_largest_block: needs an AtMost family with m >= 2");
  std::vector<Nat> prev(n_max + 1, Nat(1));  // s_{n,<=1} = 1
  for (unsigned b = 2; b <= spec.m(); ++b) {
    const Nat w = block_weight(spec.kind(), b);
    std::vector<Nat> cur(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
      Nat acc = 0;
      for (std::size_t i = 0; i * b <= n; ++i)
        acc += block_placement_count(n, i, b, w) * prev[n - i * b];
      cur[n] = std::move(acc);
    }
    prev = std::move(cur);
  }
  return prev;
}

Nat reduce_largest_block(const TriangleSpec& spec, std::size_t n) {
  return reduce_largest_block_seq(spec, n)[n];
}

std::vector<Nat> reduce_associated_seq(const TriangleSpec& spec, std::size_t n_max) {
  if (spec.is_at_most() || spec.m() < 2)
    throw std::invalid_argument("reduce_associated: needs an AtLeast family with k >= 2");
  std::vector<Nat> prev;
  if (spec.is_second_kind()) {
    prev = classical_bell(n_max);
  } else {
    prev.resize(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) prev[n] = factorial(n);
  }
  for (unsigned k = 2; k <= spec.m(); ++k) {
    const unsigned b = k - 1;
    const Nat w = block_weight(spec.kind(), b);
    std::vector<Nat> cur(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
      Nat acc = prev[n];
      for (std::size_t i = 1; i * b <= n; ++i)
        acc -= block_placement_count(n, i, b, w) * cur[n - i * b];
      cur[n] = std::move(acc);
    }
    prev = std::move(cur);
  }
  return prev;
}

Nat reduce_associated(const TriangleSpec& spec, std::size_t n) {
  return reduce_associated_seq(spec, n)[n];
}

DensePolyZ row_polynomial(TriangleTable& table, std::size_t n) {
  return DensePolyZ(table.row(n));
}

DensePolyZ bell_poly_restricted(unsigned m, std::size_t n) {
  TriangleTable table(TriangleSpec::second_at_most(m));
  return row_polynomial(table, n);
}

}  // namespace rbell
