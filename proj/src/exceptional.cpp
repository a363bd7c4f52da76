#include "prioritaire/exceptional.hpp"

#include <cstdlib>
#include <mutex>
#include <string>

#include "prioritaire/errors.hpp"

namespace prioritaire {

// ---------------------------------------------------------------------------
// Dyadic

Dyadic::Dyadic(Integer numerator, unsigned exponent)
    : numerator_(std::move(numerator)), exponent_(exponent) {
  if (numerator_ == 0) exponent_ = 0;
  while (exponent_ > 0 && mpz_even_p(numerator_.get_mpz_t())) {
    numerator_ /= 2;
    --exponent_;
  }
}

Dyadic Dyadic::parse(std::string_view text) {
  const std::string s(text);
  if (const auto caret = s.find("/2^"); caret != std::string::npos) {
    const Integer num = parse_integer(s.substr(0, caret));
    const Integer q = parse_integer(s.substr(caret + 3));
    if (q < 0 || q > 4096) throw ParseError("dyadic exponent out of range in '" + s + "'");
    return {num, static_cast<unsigned>(q.get_ui())};
  }
  const Rational r = Rational::parse(s);
  const Integer den = r.den();
  if (mpz_popcount(den.get_mpz_t()) != 1) throw ParseError("'" + s + "' is not dyadic");
  return {r.num(), static_cast<unsigned>(mpz_sizeinbase(den.get_mpz_t(), 2) - 1)};
}

Rational Dyadic::value() const {
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, exponent_);
  return {numerator_, den};
}

Integer Dyadic::floor() const { return value().floor(); }

std::string Dyadic::str() const {
  if (exponent_ == 0) return numerator_.get_str();
  return numerator_.get_str() + "/2^" + std::to_string(exponent_);
}

Dyadic midpoint(const Dyadic& a, const Dyadic& b) {
  const unsigned e = std::max(a.exponent(), b.exponent());
  Integer na = a.numerator();
  Integer nb = b.numerator();
  mpz_mul_2exp(na.get_mpz_t(), na.get_mpz_t(), e - a.exponent());
  mpz_mul_2exp(nb.get_mpz_t(), nb.get_mpz_t(), e - b.exponent());
  return {na + nb, e + 1};
}

// ---------------------------------------------------------------------------
// ExceptionalBundle

ExceptionalBundle::ExceptionalBundle(Rational slope, ChernData chern, Rational delta)
    : slope_(std::move(slope)), chern_(std::move(chern)), delta_(std::move(delta)) {}

ExceptionalBundle ExceptionalBundle::line(const Integer& k) {
  return {Rational(k), ChernData(1, k, 0), Rational(0)};
}

ExceptionalBundle ExceptionalBundle::from_slope(const Rational& slope) {
  const Integer r = slope.den();
  const Integer c1 = slope.num();
  // c2 = (r - 1)(r + 1 + c1^2) / (2r)
  const Integer twice_r = 2 * r;
  const Integer numer = (r - 1) * (r + 1 + c1 * c1);
  if (!mpz_divisible_p(numer.get_mpz_t(), twice_r.get_mpz_t())) {
    throw InternalInconsistency("slope " + slope.str() + " has non-integral c2");
  }
  ChernData cd(r, c1, Integer(numer / twice_r));
  const Rational delta = (Rational(1) - Rational(1) / Rational(r * r)) / 2;
  if (discriminant(cd) != delta || euler_pairing(cd, cd) != 1) {
    throw InternalInconsistency("slope " + slope.str() + " is not exceptional");
  }
  return {slope, std::move(cd), delta};
}

ExceptionalBundle ExceptionalBundle::twisted(const Integer& k) const {
  return {slope_ + Rational(k), twist(chern_, k), delta_};
}

ExceptionalBundle ExceptionalBundle::dual() const {
  return {-slope_, prioritaire::dual(chern_), delta_};
}

std::string ExceptionalBundle::name() const {
  const Integer shift = normalizing_shift(slope_);
  const Rational base = slope_ + Rational(shift);
  const Integer k = -shift;
  const std::string suffix = k == 0 ? "" : "(" + k.get_str() + ")";
  if (base == 0) return "O" + suffix;
  if (base == Rational(-1, 2)) return "Q*" + suffix;
  return "E_{" + slope_.str() + "}";
}

// ---------------------------------------------------------------------------
// Composition and epsilon

ExceptionalBundle compose(const ExceptionalBundle& a, const ExceptionalBundle& b) {
  if (a.slope() >= b.slope()) {
    throw PreconditionError("compose needs increasing slopes, got " + a.slope().str() + " and " +
                            b.slope().str());
  }
  const Rational gamma = (a.slope() + b.slope()) / 2 -
                         (a.delta() - b.delta()) / (Rational(3) + a.slope() - b.slope());
  ExceptionalBundle c = ExceptionalBundle::from_slope(gamma);
  if (euler_pairing(c.chern(), a.chern()) != 0 || euler_pairing(b.chern(), c.chern()) != 0) {
    throw InternalInconsistency("composition of " + a.slope().str() + " and " + b.slope().str() +
                                " is not orthogonal");
  }
  return c;
}

ExceptionalBundle ExceptionalCatalog::epsilon(const Dyadic& d) {
  const Integer k = d.floor();
  if (d.is_integer()) return ExceptionalBundle::line(k);
  // Reduce into (-1, 0) and twist back.
  Integer shifted = d.numerator();
  Integer step = k + 1;
  mpz_mul_2exp(step.get_mpz_t(), step.get_mpz_t(), d.exponent());
  shifted -= step;
  return reduced(Dyadic(shifted, d.exponent())).twisted(k + 1);
}

ExceptionalBundle ExceptionalCatalog::reduced(const Dyadic& d) {
  {
    std::shared_lock lock(mutex_);
    if (const auto it = memo_.find(d); it != memo_.end()) return it->second;
  }
  // d = (2p + 1) / 2^(q+1)
  const Integer p = (d.numerator() - 1) / 2;
  const unsigned q = d.exponent() - 1;
  ExceptionalBundle value = compose(epsilon(Dyadic(p, q)), epsilon(Dyadic(p + 1, q)));
  std::unique_lock lock(mutex_);
  return memo_.emplace(d, std::move(value)).first->second;
}

std::size_t ExceptionalCatalog::size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

ExceptionalCatalog& default_catalog() {
  static ExceptionalCatalog catalog;
  return catalog;
}

ExceptionalBundle epsilon(const Dyadic& d) { return default_catalog().epsilon(d); }

// ---------------------------------------------------------------------------
// Intervals

QuadSurd width(const ExceptionalBundle& f) {
  const Integer& r = f.rank();
  QuadSurd x(Rational(3, 2), -Rational(1) / Rational(2 * r), 9 * r * r - 4);
  if (x.sign() != Sign::Positive || surd_cmp_rational(x, Rational(1, 2)) >= 0) {
    throw InternalInconsistency("width outside (0, 1/2) at rank " + r.get_str());
  }
  return x;
}

QuadSurd inverse_width(const ExceptionalBundle& f) {
  const Integer& r = f.rank();
  return {Rational(3 * r * r, 2), Rational(r, 2), 9 * r * r - 4};
}

bool interval_contains(const ExceptionalBundle& f, const Rational& mu) {
  const auto c = surd_cmp_rational(width(f), (mu - f.slope()).abs());
  if (c == 0) throw InternalInconsistency("rational point on an exceptional interval boundary");
  return c > 0;
}

int default_max_depth() {
  if (const char* env = std::getenv("PRIORITAIRE_MAX_DEPTH")) {
    try {
      const int value = std::stoi(env);
      if (value > 0) return value;
    } catch (const std::exception&) {
      // fall through to the default
    }
  }
  return 64;
}

ExceptionalBundle locate_exceptional(const Rational& mu, int max_depth) {
  if (mu < Rational(-1) || mu > Rational(0)) {
    throw PreconditionError("locate_exceptional expects -1 <= mu <= 0, got " + mu.str());
  }
  Dyadic lo(-1);
  Dyadic hi(0);
  ExceptionalBundle left = epsilon(lo);
  ExceptionalBundle right = epsilon(hi);
  for (int depth = 0;; ++depth) {
    if (mu == left.slope() || interval_contains(left, mu)) return left;
    if (mu == right.slope() || interval_contains(right, mu)) return right;
    if (depth >= max_depth) {
      throw DepthExhausted("no exceptional interval found for " + mu.str() + " within depth " +
                           std::to_string(max_depth) + "; bracketed by " + left.slope().str() +
                           " and " + right.slope().str());
    }
    const Dyadic mid = midpoint(lo, hi);
    ExceptionalBundle middle = epsilon(mid);
    if (mu == middle.slope()) return middle;
    if (mu < middle.slope()) {
      hi = mid;
      right = std::move(middle);
    } else {
      lo = mid;
      left = std::move(middle);
    }
  }
}

std::vector<ExceptionalBundle> enumerate(unsigned level_max) {
  std::map<Rational, ExceptionalBundle> by_slope;
  for (unsigned q = 0; q <= level_max; ++q) {
    Integer count;
    mpz_ui_pow_ui(count.get_mpz_t(), 2, q);
    for (Integer p = -count; p <= 0; ++p) {
      ExceptionalBundle e = epsilon(Dyadic(p, q));
      by_slope.emplace(e.slope(), std::move(e));
    }
  }
  std::vector<ExceptionalBundle> out;
  out.reserve(by_slope.size());
  for (auto& [s, e] : by_slope) out.push_back(std::move(e));
  return out;
}

}  // namespace prioritaire
