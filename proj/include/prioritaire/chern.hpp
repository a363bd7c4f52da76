#pragma once

#include <string>

#include "prioritaire/rational.hpp"

namespace prioritaire {

/// Additive coordinates (rank, c1, ch2) of a class in K-theory of the plane.
/// Any rank is allowed here so that differences of sheaves can be formed.
struct ChernCharacter {
  Integer rank;
  Integer c1;
  Rational ch2;

  ChernCharacter& operator+=(const ChernCharacter& rhs);
  ChernCharacter& operator-=(const ChernCharacter& rhs);
  friend ChernCharacter operator+(ChernCharacter a, const ChernCharacter& b) { return a += b; }
  friend ChernCharacter operator-(ChernCharacter a, const ChernCharacter& b) { return a -= b; }
  friend ChernCharacter operator*(const Integer& k, const ChernCharacter& c);
  friend bool operator==(const ChernCharacter&, const ChernCharacter&) = default;

  [[nodiscard]] std::string str() const;
};

/// Rank and Chern classes (r, c1, c2) of a sheaf of positive rank.
class ChernData {
 public:
  /// Throws PreconditionError when rank < 1.
  ChernData(Integer rank, Integer c1, Integer c2);
  /// Throws PreconditionError unless the character is integral with rank >= 1.
  static ChernData from_character(const ChernCharacter& ch);

  [[nodiscard]] const Integer& rank() const { return rank_; }
  [[nodiscard]] const Integer& c1() const { return c1_; }
  [[nodiscard]] const Integer& c2() const { return c2_; }
  [[nodiscard]] ChernCharacter character() const;
  [[nodiscard]] std::string str() const;

  friend bool operator==(const ChernData&, const ChernData&) = default;

 private:
  Integer rank_;
  Integer c1_;
  Integer c2_;
};

/// P(X) = X^2/2 + 3X/2 + 1, so that chi(E) = r (P(mu) - Delta).
Rational hirzebruch_p(const Rational& x);

Rational slope(const ChernData& cd);
Rational discriminant(const ChernData& cd);

/// Riemann-Roch: r (P(mu) - Delta).
Rational euler_char(const ChernData& cd);

/// chi(a, b) = r_a r_b (P(mu_b - mu_a) - Delta_a - Delta_b).
Rational euler_pairing(const ChernData& a, const ChernData& b);

/// chi(a, b) computed from additive coordinates against the Todd class;
/// defined for every rank, including zero and negative virtual classes.
Rational euler_pairing(const ChernCharacter& a, const ChernCharacter& b);

/// Tensor with O(k).
ChernCharacter twist(const ChernCharacter& ch, const Integer& k);
ChernData twist(const ChernData& cd, const Integer& k);
ChernData dual(const ChernData& cd);
ChernCharacter dual(const ChernCharacter& ch);

struct Normalized {
  ChernData data;
  /// The twist applied: data = twist(input, shift), with -1 < slope(data) <= 0.
  Integer shift;
};

Normalized normalize(const ChernData& cd);

/// The shift k with -1 < mu + k <= 0.
Integer normalizing_shift(const Rational& mu);

}  // namespace prioritaire
