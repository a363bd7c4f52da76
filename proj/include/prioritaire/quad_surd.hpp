#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "prioritaire/rational.hpp"

namespace prioritaire {

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

/// The real number a + b*sqrt(d), with d a nonnegative integer.
///
/// Normal form: when b = 0 or d is a perfect square the value is folded into
/// `a` and both b and d are zero. Squares of primes below 100 are divided
/// out of the radicand; larger square factors are kept. Binary arithmetic between two irrational surds requires identical
/// radicands and throws std::domain_error otherwise.
class QuadSurd {
 public:
  QuadSurd() = default;
  QuadSurd(const Rational& a);  // NOLINT(implicit)
  QuadSurd(const Rational& a, const Rational& b, const Integer& d);

  /// Accepts the output of str(): "a", "a + b*sqrt(d)" or "a - b*sqrt(d)".
  static QuadSurd parse(std::string_view text);

  [[nodiscard]] const Rational& rational_part() const { return a_; }
  [[nodiscard]] const Rational& surd_coefficient() const { return b_; }
  [[nodiscard]] const Integer& radicand() const { return d_; }
  [[nodiscard]] bool is_rational() const { return b_.sign() == 0; }

  /// Exact sign, decided by a single integer comparison of a^2 against b^2 d.
  [[nodiscard]] Sign sign() const;
  [[nodiscard]] QuadSurd conjugate() const;
  /// Throws std::domain_error for zero.
  [[nodiscard]] QuadSurd inverse() const;
  [[nodiscard]] double to_double() const;
  [[nodiscard]] std::string str() const;

  QuadSurd operator-() const;
  friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator/(const QuadSurd& x, const QuadSurd& y) { return x * y.inverse(); }

  friend bool operator==(const QuadSurd& x, const QuadSurd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }

 private:
  void normalize();

  Rational a_;
  Rational b_;
  Integer d_;
};

Sign surd_sign(const QuadSurd& s);

/// Ordering of s against r; equals surd_sign(s - r).
std::strong_ordering surd_cmp_rational(const QuadSurd& s, const Rational& r);

/// Exact sign of x + y where x and y may carry different radicands.
Sign sign_of_sum(const QuadSurd& x, const QuadSurd& y);

/// Fixed-point decimal rendering, ties to even (ties only occur for rationals).
std::string to_decimal(const QuadSurd& value, unsigned digits = 12);

std::ostream& operator<<(std::ostream& os, const QuadSurd& value);

}  // namespace prioritaire
