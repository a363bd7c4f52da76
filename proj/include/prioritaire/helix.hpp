#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "prioritaire/exceptional.hpp"

namespace prioritaire {

/// A helix basis (left, middle, right) of exceptional bundles with slopes in
/// [-1, 0], as produced by repeated mutation of (O(-1), Q*, O).
///
/// `left` and `right` are epsilon of the dyadic endpoints `lo` and `hi`;
/// `middle` is epsilon of their midpoint. `kernel` is the kernel of the
/// evaluation map left (x) Hom(left, middle) -> middle; it bounds the
/// triangle from below.
struct Triad {
  ExceptionalBundle left;
  ExceptionalBundle middle;
  ExceptionalBundle right;
  ExceptionalBundle kernel;
  unsigned level = 0;
  Integer index;
  Dyadic lo;
  Dyadic hi;
};

/// (O(-1), Q*, O) with kernel O(-2).
Triad root();

/// The adjacent triads (left, H, middle) and (middle, K, right), where H and
/// K come from mutation bookkeeping and are cross-checked against epsilon.
std::pair<Triad, Triad> children(const Triad& t);

/// All triads of levels 0..depth, ordered by (level, index).
std::vector<Triad> enumerate_triads(unsigned depth);

/// The triad whose middle term is `f`. Requires -1 < slope(f) < 0.
Triad triad_with_middle(const ExceptionalBundle& f, int max_depth = default_max_depth());

/// One side of a triangle: Delta = P(direction * (mu - center)) - offset.
struct ConicSide {
  Rational center;
  int direction = 1;
  Rational offset;
  /// Upper sides bound Delta from above, the lower side from below.
  bool upper = true;

  [[nodiscard]] Rational at(const Rational& mu) const;
  /// Coefficients (a0, a1, a2) of the side as a polynomial in mu.
  [[nodiscard]] std::array<Rational, 3> coefficients() const;
  [[nodiscard]] bool admits(const Rational& mu, const Rational& d, bool strict) const;
};

/// The conic-sided tile of a triad in the (mu, Delta) plane.
class Triangle {
 public:
  explicit Triangle(Triad owner);

  [[nodiscard]] const Triad& owner() const { return owner_; }
  /// Sides through (left, middle), (middle, right) and (left, right).
  [[nodiscard]] const std::array<ConicSide, 3>& sides() const { return sides_; }
  [[nodiscard]] bool contains(const Rational& mu, const Rational& d, bool strict) const;

 private:
  Triad owner_;
  std::array<ConicSide, 3> sides_;
};

bool triangle_contains(const Triad& t, const Rational& mu, const Rational& d, bool strict);

/// The shallowest triad whose closed triangle contains (mu, d). Descends
/// from the root toward the child whose slope range holds mu.
/// Throws NotCovered when mu hits a middle slope without containment and
/// DepthExhausted past `max_depth`.
Triad locate_triangle(const Rational& mu, const Rational& d, int max_depth = default_max_depth());

/// The consecutive pair (G0, G1) of the left exceptional series of f with
/// slope(G1) - slope(G0) >= 1.
std::pair<ExceptionalBundle, ExceptionalBundle> initial_pair(const ExceptionalBundle& f);

/// Terms G_n, n_min <= n <= n_max, of the left exceptional series of f: the
/// bundles with (G_n, G_{n+1}, f) a triad, extended by
/// ch(G_{n+1}) = chi(G0, G1) ch(G_n) - ch(G_{n-1}).
std::vector<ExceptionalBundle> series(const ExceptionalBundle& f, int n_min, int n_max);

/// The right series H_n = G_n(3).
std::vector<ExceptionalBundle> series_right(const ExceptionalBundle& f, int n_min, int n_max);

/// Ext dimensions between (twists of) exceptional bundles. Entries the
/// vanishing rules cannot decide stay empty.
struct ExtDims {
  std::optional<Integer> hom;
  std::optional<Integer> ext1;
  std::optional<Integer> ext2;
};

ExtDims ext_dims(const ExceptionalBundle& a, const ExceptionalBundle& b);

enum class Answer { Yes, No, Unknown };

std::string_view to_string(Answer answer);

using Multiple = std::pair<ExceptionalBundle, Integer>;

/// Whether the direct sum is prioritary, i.e. Ext^2(A, B(-1)) = 0 for every
/// ordered pair of summands.
Answer is_prioritary_sum(std::span<const Multiple> summands);

}  // namespace prioritaire
