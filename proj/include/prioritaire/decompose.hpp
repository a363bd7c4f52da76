#pragma once

#include <string>
#include <variant>
#include <vector>

#include "prioritaire/chern.hpp"
#include "prioritaire/exceptional.hpp"
#include "prioritaire/frontier.hpp"
#include "prioritaire/helix.hpp"

namespace prioritaire {

struct ExceptionalSummand {
  ExceptionalBundle bundle;
};

/// A generic semistable sheaf with the given invariants.
struct SemistableSummand {
  ChernData data;
};

/// V_x(twist): the nontrivial extension of the ideal sheaf of a point by O,
/// twisted by O(twist). Untwisted invariants are (2, 0, 1).
struct VxSummand {
  Integer twist;
};

using SummandKind = std::variant<ExceptionalSummand, SemistableSummand, VxSummand>;

struct Summand {
  SummandKind kind;
  Integer multiplicity;

  /// Character of a single copy.
  [[nodiscard]] ChernCharacter character() const;
  [[nodiscard]] std::string name() const;
  [[nodiscard]] Summand twisted(const Integer& k) const;
  [[nodiscard]] Summand dual() const;
};

/// One exact identity that was checked while building a decomposition.
struct Check {
  std::string name;
  std::string detail;
};

/// The generic prioritary sheaf with the input's invariants.
struct Decomposition {
  ChernData input;
  Region region;
  /// Empty when the generic sheaf is semistable of positive-dimensional moduli.
  std::vector<Summand> summands;
  std::vector<Check> verification;
};

/// Sum of multiplicity * character over the summands.
ChernCharacter total_character(const std::vector<Summand>& summands);

/// Throws NoPrioritarySheaf when no prioritary sheaf has these invariants.
Decomposition generic_prioritary(const ChernData& cd);

/// Integers of the kernel presentation
/// 0 -> E -> (F (x) C^k) + (G0(3) (x) C^m2) -> G1(3) (x) C^m1 -> 0
/// for E on the left branch of the upper frontier near F.
struct PresentationReport {
  ChernData input;
  ExceptionalBundle bundle;
  ExceptionalBundle first;   // G0(3)
  ExceptionalBundle second;  // G1(3)
  Integer k;
  Integer m1;
  Integer m2;
};

/// Requires rank >= 2, slope(f) - x_f < mu <= slope(f) and Delta = delta(mu);
/// the exceptional point of f itself is accepted as a degenerate case.
PresentationReport stable_presentation(const ChernData& cd, const ExceptionalBundle& f);

}  // namespace prioritaire
