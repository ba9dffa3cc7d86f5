#include "hypercert/checks/oracles.hpp"

#include <functional>

#include "hypercert/error.hpp"

namespace hypercert::checks {

Integer count_partitions_enumerated(unsigned n) {
  if (n == 0) return 1;
  std::vector<unsigned> parts{n};
  Integer count = 1;
  for (;;) {
    unsigned rest = 0;
    while (!parts.empty() && parts.back() == 1) {
      parts.pop_back();
      ++rest;
    }
    if (parts.empty()) break;
    const unsigned v = --parts.back();
    ++rest;
    while (rest > v) {
      parts.push_back(v);
      rest -= v;
    }
    parts.push_back(rest);
    ++count;
  }
  return count;
}

Integer count_partitions_dp(unsigned n) {
  std::vector<Integer> ways(n + 1, 0);
  ways[0] = 1;
  for (unsigned part = 1; part <= n; ++part) {
    for (unsigned total = part; total <= n; ++total) ways[total] += ways[total - part];
  }
  return ways[n];
}

namespace {

// Calls `emit` for every nonincreasing row r with r[i] <= bound[i] and
// 1 <= sum(r) <= budget.
void for_each_row(const std::vector<unsigned>& bound, unsigned budget, std::vector<unsigned>& row,
                  unsigned sum, const std::function<void(const std::vector<unsigned>&, unsigned)>& emit) {
  if (!row.empty()) emit(row, sum);
  const std::size_t pos = row.size();
  if (pos == bound.size()) return;
  unsigned cap = bound[pos];
  if (!row.empty()) cap = std::min(cap, row.back());
  for (unsigned v = 1; v <= cap && sum + v <= budget; ++v) {
    row.push_back(v);
    for_each_row(bound, budget, row, sum + v, emit);
    row.pop_back();
  }
}

Integer complete_plane_partition(const std::vector<unsigned>& prev, unsigned remaining) {
  if (remaining == 0) return 1;
  Integer total = 0;
  std::vector<unsigned> row;
  for_each_row(prev, remaining, row, 0, [&](const std::vector<unsigned>& r, unsigned s) {
    total += complete_plane_partition(r, remaining - s);
  });
  return total;
}

}  // namespace

Integer count_plane_partitions_enumerated(unsigned n) {
  return complete_plane_partition(std::vector<unsigned>(n, n), n);
}

Polynomial polynomial_from_roots(std::span<const Rational> roots, const Rational& lead) {
  std::vector<Rational> c{lead};
  for (const auto& r : roots) {
    std::vector<Rational> next(c.size() + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return Polynomial(std::move(c));
}

namespace {

std::vector<Rational> trimmed(std::vector<Rational> c) {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
  return c;
}

std::vector<Rational> long_division_remainder(std::vector<Rational> a, const std::vector<Rational>& b) {
  while (a.size() >= b.size()) {
    const Rational q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= q * b[k];
    a = trimmed(std::move(a));
  }
  return a;
}

}  // namespace

Polynomial euclid_gcd(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> x(a.coefficients().begin(), a.coefficients().end());
  std::vector<Rational> y(b.coefficients().begin(), b.coefficients().end());
  x = trimmed(std::move(x));
  y = trimmed(std::move(y));
  while (!y.empty()) {
    auto r = long_division_remainder(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.empty()) return Polynomial();
  const Rational lead = x.back();
  for (auto& c : x) c /= lead;
  return Polynomial(std::move(x));
}

Rational cofactor_determinant(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rational det = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (sgn(m[0][col]) == 0) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    const Rational term = m[0][col] * cofactor_determinant(minor);
    if (col % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

std::vector<Rational> hankel_minors_from_roots(std::span<const Rational> roots) {
  const std::size_t d = roots.size();
  std::vector<Rational> s(2 * d, 0);
  for (const auto& r : roots) {
    Rational power = 1;
    for (std::size_t m = 0; m < s.size(); ++m) {
      s[m] += power;
      power *= r;
    }
  }
  std::vector<Rational> minors;
  for (std::size_t j = 1; j <= d; ++j) {
    std::vector<std::vector<Rational>> h(j, std::vector<Rational>(j));
    for (std::size_t a = 0; a < j; ++a) {
      for (std::size_t b = 0; b < j; ++b) h[a][b] = s[a + b];
    }
    minors.push_back(cofactor_determinant(h));
  }
  return minors;
}

Rational backward_difference(std::span<const Rational> g, std::size_t i, unsigned k) {
  if (i < k || i >= g.size()) throw ContractError("backward_difference outside the sequence");
  Rational sum = 0;
  Integer c = 1;  // C(k, m), built incrementally
  for (unsigned m = 0; m <= k; ++m) {
    const Rational term = Rational(c) * g[i - m];
    if (m % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    c = c * (k - m) / (m + 1);
  }
  return sum;
}

Rational iterated_laguerre_closed_form(std::span<const Rational> g) {
  if (g.size() < 5) throw ContractError("the closed form needs five terms");
  const Rational a = g[1] * g[2] - g[0] * g[3];
  const Rational b = g[1] * g[1] - g[0] * g[2];
  const Rational c = g[2] * g[2] - g[0] * g[4];
  return a * a - b * c;
}

Rational e_partial_sum(unsigned terms) {
  Rational sum = 0;
  Rational term = 1;
  for (unsigned k = 0; k <= terms; ++k) {
    sum += term;
    term /= k + 1;
  }
  return sum;
}

}  // namespace hypercert::checks
