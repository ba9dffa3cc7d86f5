#include "hypercert/checks/random.hpp"

#include <algorithm>

namespace hypercert::checks {

long Rng::nonzero_integer(long bound) {
  long v = integer(1, bound);
  return coin() ? v : -v;
}

Rational Rng::rational(long bound, long max_den) {
  Rational q(integer(-bound, bound), integer(1, max_den));
  q.canonicalize();
  return q;
}

Rational Rng::positive_rational(long bound, long max_den) {
  Rational q(integer(1, bound), integer(1, max_den));
  q.canonicalize();
  return q;
}

std::vector<Rational> Rng::distinct_rationals(std::size_t count, long bound, long max_den) {
  std::vector<Rational> out;
  while (out.size() < count) {
    Rational q = rational(bound, max_den);
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(std::move(q));
  }
  return out;
}

Polynomial Rng::polynomial(unsigned degree, long bound) {
  std::vector<Rational> c(degree + 1);
  for (unsigned k = 0; k < degree; ++k) c[k] = integer(-bound, bound);
  c[degree] = nonzero_integer(bound);
  return Polynomial(std::move(c));
}

Sequence Rng::sequence(std::size_t length, long bound, Index offset, bool nonzero) {
  std::vector<Rational> terms(length);
  for (auto& t : terms) t = nonzero ? nonzero_integer(bound) : integer(-bound, bound);
  return Sequence(std::move(terms), offset, "random");
}

Sequence Rng::positive_sequence(std::size_t length, long bound, Index offset) {
  std::vector<Rational> terms(length);
  for (auto& t : terms) t = integer(1, bound);
  return Sequence(std::move(terms), offset, "random+");
}

}  // namespace hypercert::checks
