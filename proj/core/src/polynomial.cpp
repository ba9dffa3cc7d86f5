#include "hypercert/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "hypercert/error.hpp"

namespace hypercert {

namespace {
const Rational kZero(0);
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial::Polynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

Polynomial Polynomial::constant(Rational c) { return Polynomial(std::vector<Rational>{std::move(c)}); }

Polynomial Polynomial::monomial(Rational c, std::size_t power) {
  std::vector<Rational> v(power + 1);
  v[power] = std::move(c);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_factor(const Rational& root) {
  return Polynomial(std::vector<Rational>{-root, Rational(1)});
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const Rational& Polynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : kZero;
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw ContractError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

int Polynomial::sign_at_infinity(bool positive) const {
  if (coeffs_.empty()) return 0;
  const int s = sgn(coeffs_.back());
  return (positive || degree() % 2 == 0) ? s : -s;
}

Polynomial Polynomial::derivative(unsigned times) const {
  if (times == 0) return *this;
  if (static_cast<std::int64_t>(times) > degree()) return {};
  std::vector<Rational> out(coeffs_.size() - times);
  for (std::size_t k = 0; k < out.size(); ++k) {
    // falling factorial (k+times)!/k!
    Integer f = 1;
    for (std::size_t m = k + 1; m <= k + times; ++m) f *= static_cast<unsigned long>(m);
    out[k] = coeffs_[k + times] * f;
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

bool Polynomial::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result = Polynomial::constant(1);
  Polynomial b = base;
  while (exponent) {
    if (exponent & 1u) result = result * b;
    exponent >>= 1u;
    if (exponent) b = b * b;
  }
  return result;
}

DivisionResult divide(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw ContractError("polynomial division by zero");
  if (dividend.degree() < divisor.degree()) return {Polynomial(), dividend};
  const auto db = static_cast<std::size_t>(divisor.degree());
  std::vector<Rational> rem(dividend.coefficients().begin(), dividend.coefficients().end());
  std::vector<Rational> quot(rem.size() - db);
  const Rational& lc = divisor.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    if (sgn(rem[k + db]) == 0) continue;
    Rational q = rem[k + db] / lc;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * divisor.coeff(j);
    quot[k] = std::move(q);
  }
  rem.resize(db);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ContractError("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  const auto db = static_cast<std::size_t>(b.degree());
  const Rational& lc = b.leading();
  std::vector<Rational> r(a.coefficients().begin(), a.coefficients().end());
  auto steps = static_cast<unsigned>(a.degree() - b.degree() + 1);
  for (std::size_t top = r.size(); top-- > db;) {
    const Rational lead = r[top];
    for (auto& c : r) c *= lc;
    if (sgn(lead) != 0) {
      const std::size_t shift = top - db;
      for (std::size_t j = 0; j <= db; ++j) r[shift + j] -= lead * b.coeff(j);
    }
    --steps;
    r.pop_back();
  }
  Polynomial out(std::move(r));
  if (steps) out *= pow(lc, steps);
  return out;
}

Rational content(const Polynomial& f) {
  if (f.is_zero()) return 0;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& c : f.coefficients()) {
    if (sgn(c) == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational r(num_gcd, den_lcm);
  r.canonicalize();
  return r;
}

Polynomial primitive_part(const Polynomial& f) {
  if (f.is_zero()) return f;
  const Rational c = content(f);
  if (c == 1) return f;
  Polynomial out = f;
  out *= Rational(c.get_den(), c.get_num());
  return out;
}

namespace {

Polynomial normalized_primitive(const Polynomial& f) {
  Polynomial p = primitive_part(f);
  if (!p.is_zero() && sgn(p.leading()) < 0) p *= Rational(-1);
  return p;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial u = normalized_primitive(a);
  Polynomial v = normalized_primitive(b);
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    Polynomial r = pseudo_remainder(u, v);
    u = std::move(v);
    v = normalized_primitive(r);
  }
  return normalized_primitive(u);
}

Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_zero()) throw ContractError("squarefree_part of the zero polynomial");
  if (f.degree() == 0) return Polynomial::constant(1);
  const Polynomial g = gcd(f, f.derivative());
  const auto [q, r] = divide(f, g);
  if (!r.is_zero()) throw IntegrityError("gcd(f, f') does not divide f");
  return normalized_primitive(q);
}

std::string to_text(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (std::size_t k = 0; k < f.coefficients().size(); ++k) {
    if (k) s += ' ';
    s += to_string(f.coefficients()[k]);
  }
  return s;
}

Polynomial parse_polynomial(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Rational> coeffs;
  std::string token;
  while (in >> token) coeffs.push_back(parse_rational(token));
  if (coeffs.empty()) throw ParseError("empty polynomial text", 0);
  return Polynomial(std::move(coeffs));
}

}  // namespace hypercert
