#pragma once

#include <compare>
#include <map>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "prioritaire/chern.hpp"
#include "prioritaire/quad_surd.hpp"
#include "prioritaire/rational.hpp"

namespace prioritaire {

/// A dyadic rational numerator / 2^exponent, kept with an odd numerator
/// unless the exponent is zero.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(Integer numerator, unsigned exponent);
  Dyadic(long value) : Dyadic(Integer(value), 0) {}  // NOLINT(implicit)

  /// Accepts "p/2^q", "p/q" with q a power of two, integers and exact decimals.
  static Dyadic parse(std::string_view text);

  [[nodiscard]] const Integer& numerator() const { return numerator_; }
  [[nodiscard]] unsigned exponent() const { return exponent_; }
  [[nodiscard]] Rational value() const;
  [[nodiscard]] bool is_integer() const { return exponent_ == 0; }
  [[nodiscard]] Integer floor() const;
  [[nodiscard]] std::string str() const;

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    return a.value() <=> b.value();
  }

 private:
  Integer numerator_;
  unsigned exponent_ = 0;
};

Dyadic midpoint(const Dyadic& a, const Dyadic& b);

/// An exceptional bundle on the plane. It is determined by its slope; all
/// other invariants are derived and validated on construction.
class ExceptionalBundle {
 public:
  /// The line bundle O(k).
  static ExceptionalBundle line(const Integer& k);
  /// Throws InternalInconsistency if the slope does not carry integral
  /// exceptional invariants (c2 must come out integral).
  static ExceptionalBundle from_slope(const Rational& slope);

  [[nodiscard]] const Rational& slope() const { return slope_; }
  [[nodiscard]] const Integer& rank() const { return chern_.rank(); }
  [[nodiscard]] const Integer& c1() const { return chern_.c1(); }
  [[nodiscard]] const Integer& c2() const { return chern_.c2(); }
  [[nodiscard]] const Rational& delta() const { return delta_; }
  [[nodiscard]] const ChernData& chern() const { return chern_; }
  [[nodiscard]] ChernCharacter character() const { return chern_.character(); }

  [[nodiscard]] ExceptionalBundle twisted(const Integer& k) const;
  [[nodiscard]] ExceptionalBundle dual() const;
  /// Short display name: O(k), Q*(k), or E_{slope}.
  [[nodiscard]] std::string name() const;

  friend bool operator==(const ExceptionalBundle& a, const ExceptionalBundle& b) {
    return a.slope_ == b.slope_;
  }

 private:
  ExceptionalBundle(Rational slope, ChernData chern, Rational delta);

  Rational slope_;
  ChernData chern_;
  Rational delta_;
};

/// The composition law on exceptional slopes: the bundle C with
/// chi(C, a) = chi(b, C) = 0, slope (a+b)/2 - (Delta_a - Delta_b)/(3 + a - b).
/// Requires slope(a) < slope(b).
ExceptionalBundle compose(const ExceptionalBundle& a, const ExceptionalBundle& b);

/// Memoized dyadic-to-exceptional map. Lookups take a shared lock; inserts
/// take an exclusive one.
class ExceptionalCatalog {
 public:
  ExceptionalBundle epsilon(const Dyadic& d);
  [[nodiscard]] std::size_t size() const;

 private:
  ExceptionalBundle reduced(const Dyadic& d);

  mutable std::shared_mutex mutex_;
  std::map<Dyadic, ExceptionalBundle> memo_;
};

/// Process-wide catalog shared by the free functions below.
ExceptionalCatalog& default_catalog();

ExceptionalBundle epsilon(const Dyadic& d);

/// Half-width x_F of the exceptional interval around slope(f): the smaller
/// root of X^2 - 3X + 1/r^2, i.e. (3r - sqrt(9r^2 - 4)) / (2r).
QuadSurd width(const ExceptionalBundle& f);

/// 1 / x_F = r (3r + sqrt(9r^2 - 4)) / 2.
QuadSurd inverse_width(const ExceptionalBundle& f);

/// True when mu lies in the open interval ]slope - x_F, slope + x_F[.
bool interval_contains(const ExceptionalBundle& f, const Rational& mu);

/// Descent cap for tree searches. Reads PRIORITAIRE_MAX_DEPTH, default 64.
int default_max_depth();

/// The unique exceptional F with |mu - slope(F)| < x_F, for -1 <= mu <= 0.
/// Throws DepthExhausted if the dyadic descent exceeds `max_depth`.
ExceptionalBundle locate_exceptional(const Rational& mu, int max_depth = default_max_depth());

/// Every epsilon(p / 2^q) with -2^q <= p <= 0 and q <= level_max, sorted by slope.
std::vector<ExceptionalBundle> enumerate(unsigned level_max);

}  // namespace prioritaire
