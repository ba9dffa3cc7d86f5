#pragma once

// Exact scalar types shared by every module.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hypercert {

using Integer = mpz_class;
using Rational = mpq_class;

/// Position in a sequence. Signed so that window arithmetic (i - reach) never wraps.
using Index = std::int64_t;

/// "a" for integers, "a/b" otherwise; always canonical.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "123", "-7", "a/b". Throws ParseError on anything else or a zero denominator.
Rational parse_rational(std::string_view text);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer factorial(unsigned n);

/// Row `d` of Pascal's triangle, C(d,0)..C(d,d). Rows are built by the additive
/// recurrence and cached for the life of the process.
const std::vector<Integer>& binomial_row(unsigned d);

inline const Integer& binomial(unsigned n, unsigned k) { return binomial_row(n).at(k); }

Integer pow(const Integer& base, unsigned exponent);
Rational pow(const Rational& base, unsigned exponent);

/// Rational extended by -infinity and +infinity, used for Sturm interval endpoints.
class ExtendedRational {
 public:
  enum class Kind { negative_infinity, finite, positive_infinity };

  ExtendedRational(Rational value) : kind_(Kind::finite), value_(std::move(value)) {}  // NOLINT
  ExtendedRational(long value) : ExtendedRational(Rational(value)) {}                  // NOLINT

  static ExtendedRational negative_infinity() { return ExtendedRational(Kind::negative_infinity); }
  static ExtendedRational positive_infinity() { return ExtendedRational(Kind::positive_infinity); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  /// Only meaningful when finite.
  const Rational& value() const { return value_; }

  friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);
  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  std::string to_string() const;

 private:
  explicit ExtendedRational(Kind kind) : kind_(kind) {}

  Kind kind_;
  Rational value_;
};

}  // namespace hypercert
