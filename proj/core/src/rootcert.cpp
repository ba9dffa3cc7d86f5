#include "hypercert/rootcert.hpp"

#include <nlohmann/json.hpp>

#include "hypercert/error.hpp"

namespace hypercert {

namespace {

// s_m = lc^m * S_m for integer coefficients; stays integral by Newton's identities.
std::vector<Integer> scaled_power_sums(std::span<const Integer> c, std::size_t m_max) {
  const std::size_t d = c.size() - 1;
  const Integer& b = c[d];
  std::vector<Integer> b_pow(m_max + 1);
  b_pow[0] = 1;
  for (std::size_t k = 1; k <= m_max; ++k) b_pow[k] = b_pow[k - 1] * b;

  std::vector<Integer> s(m_max + 1);
  s[0] = static_cast<unsigned long>(d);
  Integer term;
  for (std::size_t m = 1; m <= m_max; ++m) {
    Integer acc;
    for (std::size_t i = 1; i <= std::min(m - 1, d); ++i) {
      if (sgn(c[d - i]) == 0) continue;
      term = c[d - i] * b_pow[i - 1];
      acc += term * s[m - i];
    }
    if (m <= d) acc += c[d - m] * b_pow[m - 1] * static_cast<unsigned long>(m);
    s[m] = -acc;
  }
  return s;
}

std::vector<Integer> integer_coefficients(const Polynomial& f) {
  const Polynomial p = primitive_part(f);
  std::vector<Integer> c;
  c.reserve(p.coefficients().size());
  for (const auto& q : p.coefficients()) c.push_back(q.get_num());
  return c;
}

std::vector<std::vector<Integer>> leading_hankel(const std::vector<Integer>& s, std::size_t j) {
  std::vector<std::vector<Integer>> m(j, std::vector<Integer>(j));
  for (std::size_t r = 0; r < j; ++r) {
    for (std::size_t c = 0; c < j; ++c) m[r][c] = s[r + c];
  }
  return m;
}

std::size_t sign_variations(const std::vector<int>& signs) {
  std::size_t v = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

std::size_t variations_at(const std::vector<Polynomial>& chain, const ExtendedRational& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) {
    switch (x.kind()) {
      case ExtendedRational::Kind::negative_infinity:
        signs.push_back(p.sign_at_infinity(false));
        break;
      case ExtendedRational::Kind::positive_infinity:
        signs.push_back(p.sign_at_infinity(true));
        break;
      case ExtendedRational::Kind::finite:
        signs.push_back(sgn(p(x.value())));
        break;
    }
  }
  return sign_variations(signs);
}

void require_nonzero(const Polynomial& f, const char* what) {
  if (f.is_zero()) throw ContractError(std::string(what) + " of the zero polynomial");
}

}  // namespace

std::vector<Rational> newton_power_sums(const Polynomial& f, std::size_t m_max) {
  require_nonzero(f, "newton_power_sums");
  const auto d = static_cast<std::size_t>(f.degree());
  const Rational& b_d = f.leading();
  std::vector<Rational> s(m_max + 1);
  s[0] = static_cast<unsigned long>(d);
  for (std::size_t m = 1; m <= m_max; ++m) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= std::min(m - 1, d); ++i) acc += f.coeff(d - i) * s[m - i];
    if (m <= d) acc += f.coeff(d - m) * static_cast<unsigned long>(m);
    s[m] = -acc / b_d;
  }
  return s;
}

Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  for (const auto& row : m) {
    if (row.size() != n) throw ContractError("bareiss_determinant needs a square matrix");
  }
  int sign_flip = 1;
  Integer prev = 1;
  Integer t;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m[k][k]) == 0) {
      std::size_t r = k + 1;
      while (r < n && sgn(m[r][k]) == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign_flip = -sign_flip;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        t = m[i][j] * m[k][k];
        t -= m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign_flip > 0 ? m[n - 1][n - 1] : Integer(-m[n - 1][n - 1]);
}

std::vector<Rational> hankel_minors(const Polynomial& f) {
  require_nonzero(f, "hankel_minors");
  const auto d = static_cast<std::size_t>(f.degree());
  if (d == 0) return {};
  const auto c = integer_coefficients(f);
  const auto s = scaled_power_sums(c, 2 * d - 2);
  std::vector<Rational> minors;
  minors.reserve(d);
  for (std::size_t j = 1; j <= d; ++j) {
    Rational dj(bareiss_determinant(leading_hankel(s, j)), pow(c[d], static_cast<unsigned>(j * (j - 1))));
    dj.canonicalize();
    minors.push_back(std::move(dj));
  }
  return minors;
}

Integer cleared_top_minor(std::span<const Integer> coefficients) {
  if (coefficients.empty() || sgn(coefficients.back()) == 0) {
    throw ContractError("cleared_top_minor needs a nonzero leading coefficient");
  }
  const std::size_t d = coefficients.size() - 1;
  if (d == 0) return 1;
  const auto s = scaled_power_sums(coefficients, 2 * d - 2);
  Integer det = bareiss_determinant(leading_hankel(s, d));
  const Integer excess = pow(coefficients.back(), static_cast<unsigned>((d - 1) * (d - 2)));
  if (!mpz_divisible_p(det.get_mpz_t(), excess.get_mpz_t())) {
    throw IntegrityError("Hankel determinant not divisible by the leading-coefficient power");
  }
  mpz_divexact(det.get_mpz_t(), det.get_mpz_t(), excess.get_mpz_t());
  return det;
}

std::vector<Polynomial> sturm_chain(const Polynomial& f) {
  std::vector<Polynomial> chain{squarefree_part(f)};
  if (chain.front().degree() <= 0) return chain;
  chain.push_back(primitive_part(chain.front().derivative()));
  while (true) {
    const Polynomial& a = chain[chain.size() - 2];
    const Polynomial& b = chain.back();
    Polynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem scales the true remainder by lc(b)^(da-db+1); keep the sign of -rem.
    const auto steps = a.degree() - b.degree() + 1;
    const bool flips = sgn(b.leading()) < 0 && steps % 2 == 1;
    r = primitive_part(r);
    if (!flips) r = -r;
    chain.push_back(std::move(r));
    if (chain.back().degree() == 0) break;
  }
  return chain;
}

std::size_t sturm_count(const Polynomial& f, const ExtendedRational& a, const ExtendedRational& b) {
  require_nonzero(f, "sturm_count");
  if (!(a < b)) throw ContractError("sturm_count needs a < b, got (" + a.to_string() + ", " + b.to_string() + "]");
  const auto chain = sturm_chain(f);
  if (chain.front().degree() <= 0) return 0;
  const std::size_t va = variations_at(chain, a);
  const std::size_t vb = variations_at(chain, b);
  if (vb > va) throw IntegrityError("Sturm variation count increased across an interval");
  return va - vb;
}

namespace {

std::size_t real_root_count(const Polynomial& squarefree) {
  if (squarefree.degree() <= 0) return 0;
  return sturm_count(squarefree, ExtendedRational::negative_infinity(),
                     ExtendedRational::positive_infinity());
}

SignProfile sign_profile_given(const Polynomial& f, bool hyperbolic) {
  if (!hyperbolic) return {SignPattern::undetermined, "not hyperbolic"};
  const int lead = sgn(f.leading());
  bool nonnegative = true;
  bool alternating = true;
  for (std::size_t k = 0; k < f.coefficients().size(); ++k) {
    const int s = sgn(f.coefficients()[k]) * lead;
    if (s < 0) nonnegative = false;
    // f(-x) must have coefficients of one sign: (-1)^(d-k) c_k >= 0 after normalizing.
    const bool parity_odd = ((static_cast<std::size_t>(f.degree()) - k) % 2) == 1;
    if ((parity_odd ? -s : s) < 0) alternating = false;
  }
  if (nonnegative) return {SignPattern::all_nonpositive, "coefficients share one sign"};
  if (alternating) return {SignPattern::all_nonnegative, "coefficients alternate in sign"};

  const std::size_t positive = sturm_count(f, 0, ExtendedRational::positive_infinity());
  const std::size_t up_to_zero = sturm_count(f, ExtendedRational::negative_infinity(), 0);
  const std::size_t negative = up_to_zero - (sgn(f(0)) == 0 ? 1 : 0);
  if (positive == 0 || negative == 0) {
    throw IntegrityError("hyperbolic polynomial with mixed coefficient signs has one-signed roots");
  }
  return {SignPattern::mixed, "sturm: " + std::to_string(positive) + " positive and " +
                                  std::to_string(negative) + " negative distinct roots"};
}

}  // namespace

bool is_hyperbolic(const Polynomial& f) {
  require_nonzero(f, "is_hyperbolic");
  const Polynomial g = squarefree_part(f);
  return real_root_count(g) == static_cast<std::size_t>(g.degree());
}

RootCertificate certify_hyperbolic(const Polynomial& f, CertMethod method) {
  require_nonzero(f, "certify_hyperbolic");
  RootCertificate cert;
  cert.method = method;
  cert.degree = f.degree();
  const auto d = static_cast<std::size_t>(f.degree());

  const Polynomial g = squarefree_part(f);
  cert.simple_roots = static_cast<std::size_t>(g.degree()) == d;

  std::optional<std::size_t> sturm_distinct;
  auto run_sturm = [&] {
    if (!sturm_distinct) {
      sturm_distinct = real_root_count(g);
      cert.sturm_hyperbolic = *sturm_distinct == static_cast<std::size_t>(g.degree());
    }
  };

  std::optional<std::size_t> hankel_distinct;
  if (method != CertMethod::sturm) {
    cert.power_sums = newton_power_sums(f, d == 0 ? 0 : 2 * d - 2);
    cert.minors = hankel_minors(f);
    bool any_zero = false;
    bool all_positive = true;
    std::vector<int> signs{1};
    for (const auto& m : *cert.minors) {
      signs.push_back(sgn(m));
      if (sgn(m) == 0) any_zero = true;
      if (sgn(m) <= 0) all_positive = false;
    }
    if (any_zero) {
      cert.hankel = HankelVerdict::undetermined;
    } else if (all_positive) {
      cert.hankel = HankelVerdict::positive_definite;
      hankel_distinct = d;
    } else {
      cert.hankel = HankelVerdict::not_positive_definite;
      // Jacobi: the signature (= number of distinct real roots) is d - 2 * negatives.
      hankel_distinct = d - 2 * sign_variations(signs);
    }
  }

  if (method != CertMethod::hankel || cert.hankel == HankelVerdict::undetermined) run_sturm();

  if (method == CertMethod::hankel && cert.hankel != HankelVerdict::undetermined) {
    cert.hyperbolic = cert.hankel == HankelVerdict::positive_definite;
    cert.distinct_real_roots = *hankel_distinct;
  } else {
    cert.hyperbolic = *cert.sturm_hyperbolic;
    cert.distinct_real_roots = *sturm_distinct;
  }

  if (method == CertMethod::both && cert.hankel != HankelVerdict::undetermined) {
    const bool pd = cert.hankel == HankelVerdict::positive_definite;
    if (cert.simple_roots && pd != *cert.sturm_hyperbolic) {
      throw IntegrityError("Sturm and Hankel verdicts disagree on a square-free polynomial: " +
                           to_text(f));
    }
    if (hankel_distinct != sturm_distinct) {
      throw IntegrityError("Hankel signature and Sturm count disagree on " + to_text(f));
    }
  }

  cert.sign = sign_profile_given(f, cert.hyperbolic);
  return cert;
}

SignProfile root_sign_profile(const Polynomial& f) {
  require_nonzero(f, "root_sign_profile");
  return sign_profile_given(f, is_hyperbolic(f));
}

std::string to_string(CertMethod m) {
  switch (m) {
    case CertMethod::sturm:
      return "sturm";
    case CertMethod::hankel:
      return "hankel";
    case CertMethod::both:
      return "both";
  }
  return "?";
}

CertMethod parse_cert_method(std::string_view text) {
  if (text == "sturm") return CertMethod::sturm;
  if (text == "hankel") return CertMethod::hankel;
  if (text == "both") return CertMethod::both;
  throw ContractError("unknown certification method '" + std::string(text) + "'");
}

std::string to_string(SignPattern p) {
  switch (p) {
    case SignPattern::all_nonpositive:
      return "all_nonpositive";
    case SignPattern::all_nonnegative:
      return "all_nonnegative";
    case SignPattern::mixed:
      return "mixed";
    case SignPattern::undetermined:
      return "undetermined";
  }
  return "?";
}

std::string to_string(HankelVerdict v) {
  switch (v) {
    case HankelVerdict::not_run:
      return "not_run";
    case HankelVerdict::positive_definite:
      return "positive_definite";
    case HankelVerdict::not_positive_definite:
      return "not_positive_definite";
    case HankelVerdict::undetermined:
      return "undetermined";
  }
  return "?";
}

nlohmann::json to_json(const RootCertificate& cert) {
  auto strings = [](const std::vector<Rational>& v) {
    auto arr = nlohmann::json::array();
    for (const auto& q : v) arr.push_back(to_string(q));
    return arr;
  };
  nlohmann::json j;
  j["method"] = to_string(cert.method);
  j["hyperbolic"] = cert.hyperbolic;
  j["degree"] = cert.degree;
  j["distinct_real_roots"] = cert.distinct_real_roots;
  j["simple_roots"] = cert.simple_roots;
  if (cert.hankel != HankelVerdict::not_run) j["hankel"] = to_string(cert.hankel);
  if (cert.sturm_hyperbolic) j["sturm_hyperbolic"] = *cert.sturm_hyperbolic;
  if (cert.power_sums) j["power_sums"] = strings(*cert.power_sums);
  if (cert.minors) j["minors"] = strings(*cert.minors);
  j["sign_profile"] = to_string(cert.sign.pattern);
  j["sign_witness"] = cert.sign.witness;
  return j;
}

}  // namespace hypercert
