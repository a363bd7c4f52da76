#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

namespace prioritaire {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT(implicit)
  Rational(const Integer& value) : value_(value) {}        // NOLINT(implicit)
  /// Throws std::domain_error when `den` is zero.
  Rational(const Integer& num, const Integer& den);

  /// Accepts "p", "p/q" and finite decimals such as "-0.375".
  static Rational parse(std::string_view text);

  [[nodiscard]] Integer num() const { return value_.get_num(); }
  [[nodiscard]] Integer den() const { return value_.get_den(); }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] Integer floor() const;
  [[nodiscard]] Integer ceil() const;
  [[nodiscard]] Rational abs() const;
  [[nodiscard]] Rational square() const { return *this * *this; }
  [[nodiscard]] double to_double() const { return value_.get_d(); }
  /// "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  [[nodiscard]] const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// Parses a signed decimal integer; throws ParseError.
Integer parse_integer(std::string_view text);

/// Integer power of ten.
Integer pow10(unsigned exponent);

/// Fixed-point decimal rendering with `digits` places, ties rounded to even.
std::string to_decimal(const Rational& value, unsigned digits = 12);

namespace detail {
/// Renders n / 10^digits as a fixed-point string.
std::string format_scaled(const Integer& n, unsigned digits);
/// Rounds x given floor(x) and the exact sign of x - (floor(x) + 1/2).
Integer round_half_even(const Integer& floor_value, int sign_vs_half);
}  // namespace detail

}  // namespace prioritaire
