#include "hypercert/turan.hpp"

#include <array>
#include <sstream>
#include <vector>

#include "hypercert/error.hpp"
#include "hypercert/rootcert.hpp"

namespace hypercert {

std::string to_string(Anchor a) {
  switch (a) {
    case Anchor::backward:
      return "backward";
    case Anchor::centered:
      return "centered";
    case Anchor::start:
      return "start";
  }
  return "?";
}

Anchor parse_anchor(std::string_view text) {
  if (text == "backward") return Anchor::backward;
  if (text == "centered") return Anchor::centered;
  if (text == "start") return Anchor::start;
  throw ContractError("unknown anchor '" + std::string(text) + "' (backward|centered|start)");
}

Anchor default_anchor(unsigned j) {
  if (j == 1) return Anchor::backward;
  if (j == 2) return Anchor::centered;
  return Anchor::start;
}

Index anchor_reach_back(Anchor a, unsigned j) {
  switch (a) {
    case Anchor::backward:
      return static_cast<Index>(j);
    case Anchor::centered:
      return 1;
    case Anchor::start:
      return 0;
  }
  return 0;
}

Rational turan_closed_form3(std::span<const Rational> w) {
  if (w.size() != 4) throw ContractError("the order-3 closed form needs a window of 4 terms");
  const Rational a = w[1] * w[1] - w[0] * w[2];
  const Rational b = w[2] * w[2] - w[1] * w[3];
  const Rational c = w[1] * w[2] - w[0] * w[3];
  return 4 * a * b - c * c;
}

namespace {

Integer cleared_minor_of_window(const std::vector<Integer>& scaled, unsigned j) {
  const auto& binom = binomial_row(j);
  std::vector<Integer> c(j + 1);
  for (unsigned k = 0; k <= j; ++k) c[k] = binom[k] * scaled[k];
  return cleared_top_minor(c);
}

}  // namespace

Rational turan_hankel_route(std::span<const Rational> window) {
  if (window.size() < 2) throw ContractError("a Turan window needs at least two terms");
  const auto j = static_cast<unsigned>(window.size() - 1);

  // The value is homogeneous of degree 2j-2, so scale to integers and undo at the end.
  Integer lcm = 1;
  for (const auto& w : window) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), w.get_den_mpz_t());
  std::vector<Integer> scaled(window.size());
  for (std::size_t k = 0; k < window.size(); ++k) {
    scaled[k] = window[k].get_num() * (lcm / window[k].get_den());
  }

  Rational value;
  if (sgn(scaled[j]) != 0) {
    value = cleared_minor_of_window(scaled, j);
  } else {
    // Degree <= 2j-2 in the last entry: Lagrange-interpolate at 0 from t = 1..2j-1.
    const unsigned points = 2 * j - 1;
    std::vector<Rational> samples(points);
    for (unsigned t = 1; t <= points; ++t) {
      scaled[j] = t;
      samples[t - 1] = cleared_minor_of_window(scaled, j);
    }
    value = 0;
    for (unsigned a = 1; a <= points; ++a) {
      Rational basis = 1;
      for (unsigned b = 1; b <= points; ++b) {
        if (b == a) continue;
        Rational factor(-static_cast<long>(b), static_cast<long>(a) - static_cast<long>(b));
        factor.canonicalize();
        basis *= factor;
      }
      value += samples[a - 1] * basis;
    }
  }
  Rational scale(pow(lcm, 2 * j - 2));
  return value / scale;
}

Rational turan_quartic_discriminant(std::span<const Rational> window) {
  if (window.size() != 5) throw ContractError("the quartic discriminant needs a window of 5 terms");
  // Degree-6 homogeneous, so work on the integer-scaled window and divide once.
  Integer lcm = 1;
  for (const auto& w : window) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), w.get_den_mpz_t());
  std::array<Integer, 5> s;
  for (std::size_t k = 0; k < 5; ++k) s[k] = window[k].get_num() * (lcm / window[k].get_den());

  // a x^4 + b x^3 + c x^2 + d x + e with coefficients C(4,k) w_k.
  const Integer a = s[4], b = 4 * s[3], c = 6 * s[2], d = 4 * s[1], e = s[0];
  const Integer a2 = a * a, b2 = b * b, c2 = c * c, d2 = d * d, e2 = e * e;
  const Integer bd = b * d, ce = c * e, ae = a * e;
  Integer disc = 256 * a2 * a * e2 * e;
  disc -= 192 * a2 * bd * e2;
  disc -= 128 * a2 * c2 * e2;
  disc += 144 * a2 * c * d2 * e;
  disc -= 27 * a2 * d2 * d2;
  disc += 144 * a * b2 * ce * e;
  disc -= 6 * ae * b2 * d2;
  disc -= 80 * ae * bd * c2;
  disc += 18 * a * bd * c * d2;
  disc += 16 * ae * c2 * c2;
  disc -= 4 * a * c2 * c * d2;
  disc -= 27 * b2 * b2 * e2;
  disc += 18 * b2 * bd * ce;
  disc -= 4 * b2 * bd * d2;
  disc -= 4 * b2 * c2 * ce;
  disc += b2 * c2 * d2;
  return Rational(disc) / Rational(pow(lcm, 6));
}

Rational turan_window_value(std::span<const Rational> w, const TuranOptions& options) {
  switch (w.size()) {
    case 0:
    case 1:
      throw ContractError("turan order must be at least 1");
    case 2:
      return w[1] - w[0];
    case 3:
      return w[1] * w[1] - w[0] * w[2];
    case 4: {
      Rational closed = turan_closed_form3(w);
      if (options.cross_check) {
        const bool lower_positive =
            sgn(w[1] * w[1] - w[0] * w[2]) > 0 && sgn(w[2] * w[2] - w[1] * w[3]) > 0;
        if (lower_positive && sgn(turan_hankel_route(w)) != sgn(closed)) {
          throw IntegrityError("order-3 closed form and Hankel minor disagree in sign");
        }
      }
      return closed;
    }
    case 5:
      return turan_quartic_discriminant(w);
    default:
      return turan_hankel_route(w);
  }
}

namespace {

void require_order(unsigned j) {
  if (j == 0) throw ContractError("turan order j must be at least 1");
}

Index window_start(Index i, unsigned j, Anchor anchor) { return i - anchor_reach_back(anchor, j); }

}  // namespace

Rational turan_value(const Sequence& gamma, unsigned j, Index i, Anchor anchor,
                     const TuranOptions& options) {
  require_order(j);
  const Index lo = window_start(i, j, anchor);
  return turan_window_value(gamma.window(lo, lo + static_cast<Index>(j)), options);
}

Rational turan_hankel_minor(const Sequence& gamma, unsigned j, Index i, Anchor anchor) {
  require_order(j);
  const Index lo = window_start(i, j, anchor);
  const auto w = gamma.window(lo, lo + static_cast<Index>(j));
  const auto& binom = binomial_row(j);
  std::vector<Rational> c(j + 1);
  for (unsigned k = 0; k <= j; ++k) c[k] = w[k] * binom[k];
  const Polynomial f(std::move(c));
  if (f.degree() != static_cast<std::int64_t>(j)) {
    throw ContractError("raw Hankel minor needs a nonzero last window term");
  }
  return hankel_minors(f).back();
}

Sequence turan_apply(const Sequence& seq, unsigned j, Anchor anchor, const WorkerPool& pool,
                     std::optional<Index> last_needed, const TuranOptions& options) {
  require_order(j);
  const Index reach = anchor_reach_back(anchor, j);
  const Index first = seq.offset() + reach;
  Index last = seq.last_index() + reach - static_cast<Index>(j);
  if (last_needed) last = std::min(last, *last_needed);
  const std::string provenance = "T" + std::to_string(j) + "[" + to_string(anchor) + "](" + seq.provenance() + ")";
  if (last < first) return Sequence({}, first, provenance);

  std::vector<Rational> out(static_cast<std::size_t>(last - first + 1));
  pool.parallel_for(out.size(), [&](std::size_t k) {
    const Index i = first + static_cast<Index>(k);
    const Index lo = i - reach;
    out[k] = turan_window_value(seq.window(lo, lo + static_cast<Index>(j)), options);
  });
  return Sequence(std::move(out), first, provenance);
}

IteratedSequence turan_iterate(const Sequence& gamma, unsigned j, unsigned k, Anchor anchor,
                               const WorkerPool& pool, std::optional<Index> last_needed,
                               const TuranOptions& options) {
  require_order(j);
  if (k == 0) throw ContractError("turan_iterate needs k >= 1");
  const Index forward = static_cast<Index>(j) - anchor_reach_back(anchor, j);

  Sequence current = gamma;
  for (unsigned level = 1; level <= k; ++level) {
    std::optional<Index> limit;
    if (last_needed) limit = *last_needed + static_cast<Index>(k - level) * forward;
    current = turan_apply(current, j, anchor, pool, limit, options);
    if (current.empty()) {
      throw RangeError("T_" + std::to_string(j) + "^(" + std::to_string(level) +
                       ") has an empty domain on " + gamma.provenance());
    }
  }
  return IteratedSequence{std::move(current), j, k, anchor};
}

std::string to_csv(const IteratedSequence& seq) {
  std::ostringstream out;
  out << "index,value,sign\n";
  Index i = seq.first_index();
  for (const auto& v : seq.values.terms()) {
    out << i++ << ',' << to_string(v) << ',' << sign(v) << '\n';
  }
  return out.str();
}

}  // namespace hypercert
