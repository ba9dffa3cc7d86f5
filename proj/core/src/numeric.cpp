#include "hypercert/numeric.hpp"

#include <cctype>
#include <deque>
#include <mutex>
#include <shared_mutex>

#include "hypercert/error.hpp"

namespace hypercert {

std::string to_string(const Integer& z) { return z.get_str(10); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str(10);
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_decimal_integer(text)) {
      throw ParseError("not an exact rational: '" + std::string(text) + "'", 0);
    }
    return Rational(parse_integer(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_decimal_integer(num) || den.empty() || !is_decimal_integer(den) || den.front() == '-' ||
      den.front() == '+') {
    throw ParseError("not an exact rational: '" + std::string(text) + "'", 0);
  }
  Integer d = parse_integer(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", 0);
  Rational q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

const std::vector<Integer>& binomial_row(unsigned d) {
  // Deque keeps references stable while rows are appended.
  static std::deque<std::vector<Integer>> rows{{Integer(1)}};
  static std::shared_mutex mutex;
  {
    std::shared_lock lock(mutex);
    if (d < rows.size()) return rows[d];
  }
  std::unique_lock lock(mutex);
  while (rows.size() <= d) {
    const auto& prev = rows.back();
    std::vector<Integer> next(prev.size() + 1);
    next.front() = 1;
    next.back() = 1;
    for (std::size_t k = 1; k + 1 < next.size(); ++k) next[k] = prev[k - 1] + prev[k];
    rows.push_back(std::move(next));
  }
  return rows[d];
}

Integer pow(const Integer& base, unsigned exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational r(pow(base.get_num(), exponent), pow(base.get_den(), exponent));
  return r;  // already canonical: gcd(num, den) = 1 is preserved by powering
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.kind_ != b.kind_ || !a.is_finite()) {
    return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  }
  const int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string ExtendedRational::to_string() const {
  switch (kind_) {
    case Kind::negative_infinity:
      return "-inf";
    case Kind::positive_infinity:
      return "+inf";
    case Kind::finite:
      break;
  }
  return hypercert::to_string(value_);
}

}  // namespace hypercert
