#include "prioritaire/quad_surd.hpp"

#include <cmath>
#include <ostream>
#include <regex>
#include <stdexcept>

#include "prioritaire/errors.hpp"

namespace prioritaire {

namespace {

int to_int(Sign s) { return static_cast<int>(s); }

Sign from_int(int s) { return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero); }

const Integer& common_radicand(const QuadSurd& x, const QuadSurd& y) {
  if (x.is_rational()) return y.radicand();
  if (y.is_rational() || x.radicand() == y.radicand()) return x.radicand();
  throw std::domain_error("surd arithmetic across radicands " + x.radicand().get_str() + " and " +
                          y.radicand().get_str());
}

}  // namespace

QuadSurd::QuadSurd(const Rational& a) : a_(a) {}

QuadSurd::QuadSurd(const Rational& a, const Rational& b, const Integer& d) : a_(a), b_(b), d_(d) {
  if (d_ < 0) throw std::domain_error("negative radicand");
  normalize();
}

void QuadSurd::normalize() {
  // Pull out squares of small primes so that common radicands print reduced.
  static constexpr unsigned long kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                              43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  if (b_.sign() != 0 && d_ > 1) {
    for (const unsigned long p : kPrimes) {
      while (mpz_divisible_ui_p(d_.get_mpz_t(), p * p)) {
        d_ /= p * p;
        b_ *= Rational(static_cast<long>(p));
      }
    }
  }
  if (b_.sign() != 0 && mpz_perfect_square_p(d_.get_mpz_t())) {
    Integer root;
    mpz_sqrt(root.get_mpz_t(), d_.get_mpz_t());
    a_ += b_ * Rational(root);
    b_ = Rational();
  }
  if (b_.sign() == 0) d_ = 0;
}

Sign QuadSurd::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return from_int(sa);
  if (sa == 0 || sa == sb) return from_int(sb);
  const auto c = a_.square() <=> b_.square() * Rational(d_);
  if (c > 0) return from_int(sa);
  if (c < 0) return from_int(sb);
  return Sign::Zero;
}

QuadSurd QuadSurd::conjugate() const { return {a_, -b_, d_}; }

QuadSurd QuadSurd::inverse() const {
  if (is_rational()) return {Rational(1) / a_};
  const Rational norm = a_.square() - b_.square() * Rational(d_);
  if (norm.sign() == 0) throw std::domain_error("inverse of zero surd");
  return {a_ / norm, -b_ / norm, d_};
}

double QuadSurd::to_double() const {
  if (is_rational()) return a_.to_double();
  return a_.to_double() + b_.to_double() * std::sqrt(d_.get_d());
}

std::string QuadSurd::str() const {
  if (is_rational()) return a_.str();
  const char* op = b_.sign() < 0 ? " - " : " + ";
  const Rational coefficient = b_.abs();
  const std::string scale = coefficient == 1 ? "" : coefficient.str() + "*";
  return a_.str() + op + scale + "sqrt(" + d_.get_str() + ")";
}

QuadSurd QuadSurd::parse(std::string_view text) {
  static const std::regex pattern(
      R"(^\s*([-+]?[0-9]+(?:/[0-9]+)?)\s*([-+])\s*(?:([0-9]+(?:/[0-9]+)?)\*)?sqrt\(([0-9]+)\)\s*$)");
  const std::string s(text);
  if (s.find("sqrt") == std::string::npos) return {Rational::parse(s)};
  std::smatch m;
  if (!std::regex_match(s, m, pattern)) throw ParseError("malformed surd '" + s + "'");
  Rational b = m[3].matched ? Rational::parse(m[3].str()) : Rational(1);
  if (m[2].str() == "-") b = -b;
  return {Rational::parse(m[1].str()), b, Integer(m[4].str(), 10)};
}

QuadSurd QuadSurd::operator-() const { return {-a_, -b_, d_}; }

QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) {
  const Integer& d = common_radicand(x, y);
  return {x.a_ + y.a_, x.b_ + y.b_, d};
}

QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) { return x + (-y); }

QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
  const Integer& d = common_radicand(x, y);
  const Rational rd(d);
  return {x.a_ * y.a_ + x.b_ * y.b_ * rd, x.a_ * y.b_ + x.b_ * y.a_, d};
}

Sign surd_sign(const QuadSurd& s) { return s.sign(); }

std::strong_ordering surd_cmp_rational(const QuadSurd& s, const Rational& r) {
  switch ((s - QuadSurd(r)).sign()) {
    case Sign::Negative:
      return std::strong_ordering::less;
    case Sign::Positive:
      return std::strong_ordering::greater;
    case Sign::Zero:
      break;
  }
  return std::strong_ordering::equal;
}

Sign sign_of_sum(const QuadSurd& x, const QuadSurd& y) {
  if (x.is_rational() || y.is_rational() || x.radicand() == y.radicand()) return (x + y).sign();
  // q + u*sqrt(m) + v*sqrt(n) with u, v nonzero and m != n.
  const Rational q = x.rational_part() + y.rational_part();
  const Rational& u = x.surd_coefficient();
  const Rational& v = y.surd_coefficient();
  const Rational um = u.square() * Rational(x.radicand());
  const Rational vn = v.square() * Rational(y.radicand());

  int irrational_sign = u.sign();
  if (u.sign() != v.sign()) {
    const auto c = um <=> vn;
    irrational_sign = c > 0 ? u.sign() : (c < 0 ? v.sign() : 0);
  }
  if (irrational_sign == 0) return from_int(q.sign());
  if (q.sign() == 0 || q.sign() == irrational_sign) return from_int(irrational_sign);

  // Opposite signs: compare squares. T^2 - q^2 = um + vn - q^2 + 2uv sqrt(mn).
  const QuadSurd excess(um + vn - q.square(), Rational(2) * u * v,
                        x.radicand() * y.radicand());
  const int e = to_int(excess.sign());
  if (e > 0) return from_int(irrational_sign);
  if (e < 0) return from_int(q.sign());
  return Sign::Zero;
}

std::string to_decimal(const QuadSurd& value, unsigned digits) {
  if (value.is_rational()) return to_decimal(value.rational_part(), digits);
  const Rational scale(pow10(digits));
  const QuadSurd scaled = value * QuadSurd(scale);

  // Bracket c*sqrt(d) between consecutive multiples of 1/w using an integer root.
  const Rational& c = scaled.surd_coefficient();
  const Rational c2d = c.square() * Rational(scaled.radicand());
  Integer root;
  const Integer uw = c2d.num() * c2d.den();
  mpz_sqrt(root.get_mpz_t(), uw.get_mpz_t());
  const Rational w(c2d.den());
  Rational lo = c.sign() > 0 ? Rational(root) / w : -(Rational(root) + 1) / w;
  lo += scaled.rational_part();
  const Rational hi = lo + Rational(1) / w;

  Integer floor_value = lo.floor();
  const Integer last = hi.floor();
  for (; floor_value <= last; ++floor_value) {
    if (surd_cmp_rational(scaled, Rational(floor_value + 1)) < 0) break;
  }
  const auto half = surd_cmp_rational(scaled, Rational(floor_value) + Rational(1, 2));
  const int vs_half = half < 0 ? -1 : (half > 0 ? 1 : 0);
  return detail::format_scaled(detail::round_half_even(floor_value, vs_half), digits);
}

std::ostream& operator<<(std::ostream& os, const QuadSurd& value) { return os << value.str(); }

}  // namespace prioritaire
