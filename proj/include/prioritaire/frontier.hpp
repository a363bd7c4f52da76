#pragma once

#include <optional>
#include <string_view>

#include "prioritaire/chern.hpp"
#include "prioritaire/exceptional.hpp"
#include "prioritaire/quad_surd.hpp"

namespace prioritaire {

enum class RegionTag {
  NoPrioritary,
  SemistablePositiveDim,
  SemistableExceptional,
  AboveDeltaPrime,
  SpecialC0C21,
  BelowDeltaPrime,
};

std::string_view to_string(RegionTag tag);

struct Region {
  RegionTag tag;
  /// The exceptional bundle whose interval contains the normalized slope.
  ExceptionalBundle witness;
  /// The normalized data the decision was taken on, and the twist used.
  Normalized normalized;
};

enum class SemistableKind { PositiveDim, ExceptionalPoint, None };

std::string_view to_string(SemistableKind kind);

/// Lower bound -mu(mu+1)/2 for prioritary sheaves (valid for -1 <= mu <= 0).
Rational prioritary_bound(const Rational& mu);

/// Both frontiers at one slope, sharing the located exceptional bundle.
struct FrontierValues {
  ExceptionalBundle bundle;
  Rational delta;
  QuadSurd delta_prime;
};

/// Slopes outside [-1, 0] are shifted into (-1, 0] first (both frontiers
/// are periodic of period 1).
FrontierValues frontier_at(const Rational& mu);

/// The curve above which positive-dimensional moduli of semistable sheaves exist.
Rational delta(const Rational& mu);

/// The curve below which the generic prioritary sheaf is rigid.
QuadSurd delta_prime(const Rational& mu);

bool prioritary_exists(const ChernData& cd);
SemistableKind semistable_exists(const ChernData& cd);
Region classify(const ChernData& cd);

}  // namespace prioritaire
