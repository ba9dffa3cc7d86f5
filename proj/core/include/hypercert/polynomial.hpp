#pragma once

// Dense univariate polynomials over Q.

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypercert/numeric.hpp"

namespace hypercert {

/// Coefficient k multiplies x^k. Canonical: the highest stored coefficient is
/// nonzero, and the zero polynomial stores nothing.
class Polynomial {
 public:
  /// Degree reported for the zero polynomial ("negative infinity").
  static constexpr std::int64_t kZeroDegree = std::numeric_limits<std::int64_t>::min();

  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<long> coefficients);

  static Polynomial constant(Rational c);
  static Polynomial monomial(Rational c, std::size_t power);
  /// (x - root)
  static Polynomial linear_factor(const Rational& root);

  bool is_zero() const { return coeffs_.empty(); }
  /// kZeroDegree for the zero polynomial.
  std::int64_t degree() const {
    return coeffs_.empty() ? kZeroDegree : static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  /// Zero above the degree.
  const Rational& coeff(std::size_t k) const;
  std::span<const Rational> coefficients() const { return coeffs_; }
  /// Throws ContractError on the zero polynomial.
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  /// Sign of f at +inf or -inf (0 for the zero polynomial).
  int sign_at_infinity(bool positive) const;

  Polynomial derivative(unsigned times = 1) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  bool has_integer_coefficients() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

/// Exact division over Q. Throws ContractError when the divisor is zero.
struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};
DivisionResult divide(const Polynomial& dividend, const Polynomial& divisor);

/// lc(b)^(deg a - deg b + 1) * a mod b, computed without divisions.
/// Returns `a` unchanged when deg a < deg b.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b);

/// Positive rational c such that f / c has coprime integer coefficients.
Rational content(const Polynomial& f);

/// f / content(f): integer coefficients with gcd 1, sign of f preserved.
Polynomial primitive_part(const Polynomial& f);

/// Primitive gcd with positive leading coefficient, by the primitive
/// pseudo-remainder sequence. gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// f / gcd(f, f'), primitive with positive leading coefficient.
/// Same roots as f, all simple. Throws ContractError on the zero polynomial.
Polynomial squarefree_part(const Polynomial& f);

/// "c0 c1 c2 ..." lowest degree first; the zero polynomial is "0".
std::string to_text(const Polynomial& f);
Polynomial parse_polynomial(std::string_view text);

}  // namespace hypercert
