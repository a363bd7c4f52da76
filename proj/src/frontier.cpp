#include "prioritaire/frontier.hpp"

#include "prioritaire/errors.hpp"

namespace prioritaire {

std::string_view to_string(RegionTag tag) {
  switch (tag) {
    case RegionTag::NoPrioritary:
      return "NoPrioritary";
    case RegionTag::SemistablePositiveDim:
      return "SemistablePositiveDim";
    case RegionTag::SemistableExceptional:
      return "SemistableExceptional";
    case RegionTag::AboveDeltaPrime:
      return "AboveDeltaPrime";
    case RegionTag::SpecialC0C21:
      return "SpecialC0C21";
    case RegionTag::BelowDeltaPrime:
      return "BelowDeltaPrime";
  }
  return "?";
}

std::string_view to_string(SemistableKind kind) {
  switch (kind) {
    case SemistableKind::PositiveDim:
      return "PositiveDim";
    case SemistableKind::ExceptionalPoint:
      return "ExceptionalPoint";
    case SemistableKind::None:
      return "None";
  }
  return "?";
}

Rational prioritary_bound(const Rational& mu) { return -(mu * (mu + 1)) / 2; }

namespace {

Rational in_unit_interval(const Rational& mu) {
  if (mu >= Rational(-1) && mu <= Rational(0)) return mu;
  return mu + Rational(normalizing_shift(mu));
}

}  // namespace

FrontierValues frontier_at(const Rational& slope_in) {
  const Rational mu = in_unit_interval(slope_in);
  ExceptionalBundle f = locate_exceptional(mu);
  const Rational offset = mu - f.slope();
  const Rational on_curve = offset.sign() <= 0 ? hirzebruch_p(offset) : hirzebruch_p(-offset);
  const Rational d = on_curve - f.delta();

  // delta' = delta - (1/r^2)(1 - |offset| / x_F)
  const Rational inv_r2 = Rational(1) / Rational(f.rank() * f.rank());
  const QuadSurd dp =
      QuadSurd(d - inv_r2) + QuadSurd(inv_r2 * offset.abs()) * inverse_width(f);
  return {std::move(f), d, dp};
}

Rational delta(const Rational& mu) { return frontier_at(mu).delta; }

QuadSurd delta_prime(const Rational& mu) { return frontier_at(mu).delta_prime; }

bool prioritary_exists(const ChernData& cd) {
  const ChernData n = normalize(cd).data;
  return discriminant(n) >= prioritary_bound(slope(n));
}

namespace {

SemistableKind semistable_kind(const ChernData& normalized, const FrontierValues& frontier) {
  const Rational d = discriminant(normalized);
  if (d >= frontier.delta) return SemistableKind::PositiveDim;
  if (slope(normalized) == frontier.bundle.slope() && d == frontier.bundle.delta()) {
    return SemistableKind::ExceptionalPoint;
  }
  return SemistableKind::None;
}

}  // namespace

SemistableKind semistable_exists(const ChernData& cd) {
  const ChernData n = normalize(cd).data;
  return semistable_kind(n, frontier_at(slope(n)));
}

Region classify(const ChernData& cd) {
  Normalized norm = normalize(cd);
  const ChernData& n = norm.data;
  const Rational mu = slope(n);
  const Rational d = discriminant(n);
  FrontierValues frontier = frontier_at(mu);

  auto tag = RegionTag::BelowDeltaPrime;
  if (d < prioritary_bound(mu)) {
    tag = RegionTag::NoPrioritary;
  } else if (const auto kind = semistable_kind(n, frontier); kind == SemistableKind::PositiveDim) {
    tag = RegionTag::SemistablePositiveDim;
  } else if (kind == SemistableKind::ExceptionalPoint) {
    tag = RegionTag::SemistableExceptional;
  } else if (n.c1() == 0 && n.c2() == 1) {
    tag = RegionTag::SpecialC0C21;
  } else {
    const auto c = surd_cmp_rational(frontier.delta_prime, d);
    if (c == 0) {
      throw InternalInconsistency("discriminant equals the lower frontier at non-exceptional slope " +
                                  mu.str());
    }
    tag = c < 0 ? RegionTag::AboveDeltaPrime : RegionTag::BelowDeltaPrime;
  }
  return {tag, std::move(frontier.bundle), std::move(norm)};
}

}  // namespace prioritaire
