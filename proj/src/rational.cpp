#include "prioritaire/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "prioritaire/errors.hpp"

namespace prioritaire {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Integer parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) throw ParseError("expected an integer, got '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
      throw ParseError("expected an integer, got '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Integer pow10(unsigned exponent) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, exponent);
  return out;
}

namespace {

std::string trim(std::string_view text) {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return std::string(text.substr(b, e - b));
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const std::string s = trim(text);
  if (s.empty()) throw ParseError("empty rational");
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const Integer den = parse_integer(trim(s.substr(slash + 1)));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    return {parse_integer(trim(s.substr(0, slash))), den};
  }
  if (const auto dot = s.find('.'); dot != std::string::npos) {
    const std::string frac = s.substr(dot + 1);
    std::string whole = s.substr(0, dot);
    const bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    for (char c : frac) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad decimal '" + s + "'");
    }
    Integer int_part = parse_integer(whole);
    if (int_part < 0) int_part = -int_part;
    const Integer scale = pow10(static_cast<unsigned>(frac.size()));
    Integer magnitude = int_part * scale + (frac.empty() ? Integer(0) : Integer(frac, 10));
    return {negative ? Integer(-magnitude) : magnitude, scale};
  }
  return Rational(parse_integer(s));
}

Integer Rational::floor() const {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return out;
}

Integer Rational::ceil() const {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return out;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational out;
  out.value_ = -value_;
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.sign() == 0) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

namespace detail {

std::string format_scaled(const Integer& n, unsigned digits) {
  const bool negative = n < 0;
  const Integer magnitude = negative ? Integer(-n) : n;
  std::string body = magnitude.get_str();
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  if (digits > 0) body.insert(body.size() - digits, ".");
  return negative ? "-" + body : body;
}

Integer round_half_even(const Integer& floor_value, int sign_vs_half) {
  if (sign_vs_half > 0) return floor_value + 1;
  if (sign_vs_half < 0) return floor_value;
  return mpz_even_p(floor_value.get_mpz_t()) ? floor_value : Integer(floor_value + 1);
}

}  // namespace detail

std::string to_decimal(const Rational& value, unsigned digits) {
  const Rational scaled = value * Rational(pow10(digits));
  const Integer fl = scaled.floor();
  const Rational excess = scaled - Rational(fl) - Rational(1, 2);
  return detail::format_scaled(detail::round_half_even(fl, excess.sign()), digits);
}

}  // namespace prioritaire
