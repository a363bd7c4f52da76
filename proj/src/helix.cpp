#include "prioritaire/helix.hpp"

#include <map>

#include "prioritaire/errors.hpp"

namespace prioritaire {

namespace {

ExceptionalBundle bundle_from_character(const ChernCharacter& ch) {
  if (ch.rank < 1) throw InternalInconsistency("mutation produced rank " + ch.rank.get_str());
  ExceptionalBundle e = ExceptionalBundle::from_slope(Rational(ch.c1, ch.rank));
  if (e.character() != ch) {
    throw InternalInconsistency("character " + ch.str() + " is not exceptional");
  }
  return e;
}

Integer chi(const ExceptionalBundle& a, const ExceptionalBundle& b) {
  return euler_pairing(a.chern(), b.chern()).num();
}

void require(bool ok, const std::string& what, const Triad& t) {
  if (!ok) {
    throw InternalInconsistency(what + " fails for triad (" + t.left.slope().str() + ", " +
                                t.middle.slope().str() + ", " + t.right.slope().str() + ")");
  }
}

Triad make_triad(ExceptionalBundle left, ExceptionalBundle middle, ExceptionalBundle right,
                 unsigned level, Integer index, Dyadic lo, Dyadic hi) {
  const Integer hom_lm = chi(left, middle);
  ExceptionalBundle kernel = bundle_from_character(hom_lm * left.character() - middle.character());
  Triad t{std::move(left), std::move(middle), std::move(right), std::move(kernel),
          level,           std::move(index),  std::move(lo),    std::move(hi)};

  const Integer& re = t.left.rank();
  const Integer& rf = t.middle.rank();
  const Integer& rg = t.right.rank();
  require(t.left.slope() < t.middle.slope() && t.middle.slope() < t.right.slope(), "slope order", t);
  require(chi(t.middle, t.left) == 0 && chi(t.right, t.middle) == 0 && chi(t.right, t.left) == 0,
          "orthogonality", t);
  require(re * re + rf * rf + rg * rg == 3 * re * rf * rg, "Markov identity", t);
  require(hom_lm == 3 * rg && chi(t.middle, t.right) == 3 * re &&
              chi(t.left, t.right) == 3 * (3 * re * rg - rf),
          "hom-dimension identity", t);
  return t;
}

}  // namespace

Triad root() {
  return make_triad(ExceptionalBundle::line(-1), ExceptionalBundle::from_slope(Rational(-1, 2)),
                    ExceptionalBundle::line(0), 0, 0, Dyadic(-1), Dyadic(0));
}

std::pair<Triad, Triad> children(const Triad& t) {
  const Dyadic mid = midpoint(t.lo, t.hi);
  if (epsilon(mid) != t.middle) throw InternalInconsistency("triad middle is not epsilon(midpoint)");

  // Kernel of middle (x) Hom(middle, right) -> right, and cokernel of
  // left -> middle (x) Hom(left, middle)^*.
  const ExceptionalBundle h =
      bundle_from_character(chi(t.middle, t.right) * t.middle.character() - t.right.character());
  const ExceptionalBundle k =
      bundle_from_character(chi(t.left, t.middle) * t.middle.character() - t.left.character());

  const Dyadic left_mid = midpoint(t.lo, mid);
  const Dyadic right_mid = midpoint(mid, t.hi);
  if (epsilon(left_mid) != h || epsilon(right_mid) != k) {
    throw InternalInconsistency("mutation disagrees with epsilon below " + t.middle.slope().str());
  }
  return {make_triad(t.left, h, t.middle, t.level + 1, 2 * t.index, t.lo, mid),
          make_triad(t.middle, k, t.right, t.level + 1, 2 * t.index + 1, mid, t.hi)};
}

std::vector<Triad> enumerate_triads(unsigned depth) {
  std::vector<Triad> out{root()};
  std::size_t level_begin = 0;
  for (unsigned level = 0; level < depth; ++level) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      auto [l, r] = children(out[i]);
      out.push_back(std::move(l));
      out.push_back(std::move(r));
    }
    level_begin = level_end;
  }
  return out;
}

Triad triad_with_middle(const ExceptionalBundle& f, int max_depth) {
  if (f.slope() <= Rational(-1) || f.slope() >= Rational(0)) {
    throw PreconditionError("triad_with_middle needs -1 < slope < 0, got " + f.slope().str());
  }
  Triad t = root();
  for (int depth = 0; depth <= max_depth; ++depth) {
    if (f.slope() == t.middle.slope()) return t;
    auto [l, r] = children(t);
    t = f.slope() < t.middle.slope() ? std::move(l) : std::move(r);
  }
  throw DepthExhausted("no triad with middle " + f.slope().str() + " within depth " +
                       std::to_string(max_depth));
}

// ---------------------------------------------------------------------------
// Triangles

Rational ConicSide::at(const Rational& mu) const {
  const Rational x = direction > 0 ? mu - center : center - mu;
  return hirzebruch_p(x) - offset;
}

std::array<Rational, 3> ConicSide::coefficients() const {
  // (mu - c)^2/2 + (3s/2)(mu - c) + 1 - offset
  const Rational s(direction);
  return {center.square() / 2 - Rational(3, 2) * s * center + 1 - offset,
          -center + Rational(3, 2) * s, Rational(1, 2)};
}

bool ConicSide::admits(const Rational& mu, const Rational& d, bool strict) const {
  const Rational bound = at(mu);
  if (upper) return strict ? d < bound : d <= bound;
  return strict ? d > bound : d >= bound;
}

Triangle::Triangle(Triad owner) : owner_(std::move(owner)) {
  sides_[0] = {owner_.right.slope(), 1, owner_.right.delta(), true};
  sides_[1] = {owner_.left.slope(), -1, owner_.left.delta(), true};
  sides_[2] = {owner_.kernel.slope(), -1, owner_.kernel.delta(), false};
}

bool Triangle::contains(const Rational& mu, const Rational& d, bool strict) const {
  for (const auto& side : sides_) {
    if (!side.admits(mu, d, strict)) return false;
  }
  return true;
}

bool triangle_contains(const Triad& t, const Rational& mu, const Rational& d, bool strict) {
  return Triangle(t).contains(mu, d, strict);
}

Triad locate_triangle(const Rational& mu, const Rational& d, int max_depth) {
  if (mu < Rational(-1) || mu > Rational(0)) {
    throw PreconditionError("locate_triangle expects -1 <= mu <= 0, got " + mu.str());
  }
  Triad t = root();
  for (int depth = 0;; ++depth) {
    if (triangle_contains(t, mu, d, false)) return t;
    if (mu == t.middle.slope()) {
      throw NotCovered("(" + mu.str() + ", " + d.str() + ") is below no triangle vertex");
    }
    if (depth >= max_depth) {
      throw DepthExhausted("no triangle contains (" + mu.str() + ", " + d.str() +
                           ") within depth " + std::to_string(max_depth));
    }
    auto [l, r] = children(t);
    t = mu < t.middle.slope() ? std::move(l) : std::move(r);
  }
}

// ---------------------------------------------------------------------------
// Exceptional series

std::pair<ExceptionalBundle, ExceptionalBundle> initial_pair(const ExceptionalBundle& f) {
  const Integer shift = normalizing_shift(f.slope());
  const ExceptionalBundle g = f.twisted(shift);
  if (g.slope() == 0) {
    return {ExceptionalBundle::line(-2).twisted(-shift), ExceptionalBundle::line(-1).twisted(-shift)};
  }
  const Triad t = triad_with_middle(g);
  return {t.right.twisted(-3 - shift), t.left.twisted(-shift)};
}

std::vector<ExceptionalBundle> series(const ExceptionalBundle& f, int n_min, int n_max) {
  if (n_min > n_max) throw PreconditionError("series range is empty");
  const auto [g0, g1] = initial_pair(f);
  const Integer step = chi(g0, g1);
  if (step != 3 * f.rank()) throw InternalInconsistency("initial pair is not part of a triad");

  std::map<int, ChernCharacter> terms{{0, g0.character()}, {1, g1.character()}};
  for (int n = 1; n < n_max; ++n) terms[n + 1] = step * terms[n] - terms[n - 1];
  for (int n = 0; n > n_min; --n) terms[n - 1] = step * terms[n] - terms[n + 1];

  std::vector<ExceptionalBundle> out;
  out.reserve(static_cast<std::size_t>(n_max - n_min + 1));
  for (int n = n_min; n <= n_max; ++n) {
    ExceptionalBundle g = bundle_from_character(terms.at(n));
    if (chi(f, g) != 0) throw InternalInconsistency("series term off the conic of " + f.name());
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<ExceptionalBundle> series_right(const ExceptionalBundle& f, int n_min, int n_max) {
  std::vector<ExceptionalBundle> out = series(f, n_min, n_max);
  for (auto& g : out) g = g.twisted(3);
  return out;
}

// ---------------------------------------------------------------------------
// Ext dimensions

namespace {

Integer sections(const Integer& degree) {
  if (degree < 0) return 0;
  return (degree + 1) * (degree + 2) / 2;
}

std::optional<Integer> hom_by_stability(const ExceptionalBundle& a, const ExceptionalBundle& b) {
  if (a.slope() > b.slope()) return Integer(0);
  // Equal slopes mean the same exceptional bundle.
  if (a.slope() == b.slope()) return Integer(1);
  return std::nullopt;
}

}  // namespace

ExtDims ext_dims(const ExceptionalBundle& a, const ExceptionalBundle& b) {
  if (a.rank() == 1 && b.rank() == 1) {
    const Integer degree = b.c1() - a.c1();
    return {sections(degree), Integer(0), sections(-3 - degree)};
  }
  ExtDims out;
  out.hom = hom_by_stability(a, b);
  out.ext2 = hom_by_stability(b, a.twisted(-3));  // Serre duality
  if (a.slope() <= b.slope()) out.ext1 = Integer(0);

  const Integer euler = chi(a, b);
  const int unknown = !out.hom + !out.ext1 + !out.ext2;
  if (unknown == 1) {
    if (!out.hom) {
      if (const Integer v = euler + *out.ext1 - *out.ext2; v >= 0) out.hom = v;
    } else if (!out.ext1) {
      if (const Integer v = *out.hom + *out.ext2 - euler; v >= 0) out.ext1 = v;
    } else {
      if (const Integer v = euler - *out.hom + *out.ext1; v >= 0) out.ext2 = v;
    }
  }
  return out;
}

std::string_view to_string(Answer answer) {
  switch (answer) {
    case Answer::Yes:
      return "Yes";
    case Answer::No:
      return "No";
    case Answer::Unknown:
      return "Unknown";
  }
  return "?";
}

Answer is_prioritary_sum(std::span<const Multiple> summands) {
  bool unknown = false;
  for (const auto& a : summands) {
    for (const auto& b : summands) {
      const auto e = ext_dims(a.first, b.first.twisted(-1)).ext2;
      if (!e) {
        unknown = true;
      } else if (*e > 0) {
        return Answer::No;
      }
    }
  }
  return unknown ? Answer::Unknown : Answer::Yes;
}

}  // namespace prioritaire
