#include "prioritaire/decompose.hpp"

#include <array>

#include "prioritaire/errors.hpp"

namespace prioritaire {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const ChernCharacter kVxCharacter{2, 0, Rational(-1)};

void require(bool ok, const std::string& what) {
  if (!ok) throw InternalInconsistency(what);
}

Integer as_integer(const Rational& q, const std::string& what) {
  if (!q.is_integer()) throw InternalInconsistency(what + " is not an integer: " + q.str());
  return q.num();
}

/// Solves x0 * a + x1 * b + x2 * c = target by Cramer's rule.
std::array<Rational, 3> solve_exact(const std::array<ChernCharacter, 3>& columns,
                                    const ChernCharacter& target) {
  using Row = std::array<Rational, 3>;
  auto as_vector = [](const ChernCharacter& c) {
    return Row{Rational(c.rank), Rational(c.c1), c.ch2};
  };
  std::array<Row, 3> cols{as_vector(columns[0]), as_vector(columns[1]), as_vector(columns[2])};
  const Row rhs = as_vector(target);
  auto det = [](const std::array<Row, 3>& m) {
    // m[j][i] is row i of column j
    return m[0][0] * (m[1][1] * m[2][2] - m[2][1] * m[1][2]) -
           m[1][0] * (m[0][1] * m[2][2] - m[2][1] * m[0][2]) +
           m[2][0] * (m[0][1] * m[1][2] - m[1][1] * m[0][2]);
  };
  const Rational base = det(cols);
  if (base.sign() == 0) throw InternalInconsistency("triad characters are linearly dependent");
  std::array<Rational, 3> out;
  for (std::size_t j = 0; j < 3; ++j) {
    auto replaced = cols;
    replaced[j] = rhs;
    out[j] = det(replaced) / base;
  }
  return out;
}

Rational chi(const ExceptionalBundle& a, const ChernData& b) { return euler_pairing(a.chern(), b); }
Rational chi(const ChernData& a, const ExceptionalBundle& b) { return euler_pairing(a, b.chern()); }

void decompose_above(const ChernData& n, const ExceptionalBundle& f, Decomposition& out) {
  const Rational mu = slope(n);
  const bool left = mu <= f.slope();
  const Integer p = as_integer(left ? chi(f, n) : chi(n, f), "exceptional multiplicity");
  require(p > 0, "exceptional multiplicity must be positive, got " + p.get_str());
  require(p * f.rank() < n.rank(), "p * rank(F) must stay below the rank");

  const ChernData u = ChernData::from_character(n.character() - p * f.character());
  require(u.rank() >= 2, "residual of rank " + u.rank().get_str());
  const Rational mu_u = slope(u);
  const FrontierValues at_u = frontier_at(mu_u);
  require(at_u.bundle == f, "residual slope left the interval of " + f.name());
  require(discriminant(u) == at_u.delta, "residual is not on the upper frontier");
  const Rational orth = left ? chi(f, u) : chi(u, f);
  require(orth == 0, "residual is not orthogonal to " + f.name());

  out.summands.push_back({ExceptionalSummand{f}, p});
  out.summands.push_back({SemistableSummand{u}, 1});
  out.verification.push_back({"exceptional_multiplicity",
                              "p = " + p.get_str() + " > 0, p*rank(F) = " +
                                  Integer(p * f.rank()).get_str() + " < " + n.rank().get_str()});
  out.verification.push_back({"residual_on_frontier", "Delta(U) = " + discriminant(u).str() +
                                                          " = delta(" + mu_u.str() + ")"});
  out.verification.push_back({left ? "chi(F,U) = 0" : "chi(U,F) = 0", "branch " +
                                                                          std::string(left ? "left" : "right")});
}

void decompose_below(const ChernData& n, Decomposition& out) {
  const Rational mu = slope(n);
  const Rational d = discriminant(n);
  const Triad t = locate_triangle(mu, d);

  const auto solved =
      solve_exact({t.left.character(), t.middle.character(), t.right.character()}, n.character());
  const std::array<Rational, 3> functionals{chi(n, t.left), -chi(n, t.kernel), chi(t.right, n)};
  const std::array<const ExceptionalBundle*, 3> bundles{&t.left, &t.middle, &t.right};
  const std::array<const char*, 3> labels{"m", "n", "p"};

  std::string values;
  for (std::size_t i = 0; i < 3; ++i) {
    const Integer mult = as_integer(solved[i], std::string("multiplicity ") + labels[i]);
    require(mult >= 0, std::string("negative multiplicity ") + labels[i]);
    require(functionals[i] == solved[i],
            std::string("multiplicity ") + labels[i] + " disagrees with its Euler functional");
    values += std::string(i ? ", " : "") + labels[i] + " = " + mult.get_str();
    if (mult == 0) {
      out.verification.push_back({"zero_multiplicity", bundles[i]->name() + " dropped"});
    } else {
      out.summands.push_back({ExceptionalSummand{*bundles[i]}, mult});
    }
  }
  require(!out.summands.empty(), "empty rigid decomposition");
  out.verification.push_back({"triangle", "level " + std::to_string(t.level) + " index " +
                                              t.index.get_str() + ": (" + t.left.name() + ", " +
                                              t.middle.name() + ", " + t.right.name() + ")"});
  out.verification.push_back({"multiplicities", values});
  out.verification.push_back({"euler_functionals", "m = chi(V,E), n = -chi(V,H), p = chi(G,V)"});
}

}  // namespace

ChernCharacter Summand::character() const {
  return std::visit(overloaded{
                        [](const ExceptionalSummand& s) { return s.bundle.character(); },
                        [](const SemistableSummand& s) { return s.data.character(); },
                        [](const VxSummand& s) { return twist(kVxCharacter, s.twist); },
                    },
                    kind);
}

std::string Summand::name() const {
  return std::visit(overloaded{
                        [](const ExceptionalSummand& s) { return s.bundle.name(); },
                        [](const SemistableSummand& s) { return "M" + s.data.str(); },
                        [](const VxSummand& s) {
                          return s.twist == 0 ? std::string("V_x")
                                              : "V_x(" + s.twist.get_str() + ")";
                        },
                    },
                    kind);
}

Summand Summand::twisted(const Integer& k) const {
  SummandKind moved = std::visit(
      overloaded{
          [&](const ExceptionalSummand& s) -> SummandKind { return ExceptionalSummand{s.bundle.twisted(k)}; },
          [&](const SemistableSummand& s) -> SummandKind { return SemistableSummand{twist(s.data, k)}; },
          [&](const VxSummand& s) -> SummandKind { return VxSummand{s.twist + k}; },
      },
      kind);
  return {std::move(moved), multiplicity};
}

Summand Summand::dual() const {
  SummandKind moved = std::visit(
      overloaded{
          [](const ExceptionalSummand& s) -> SummandKind { return ExceptionalSummand{s.bundle.dual()}; },
          [](const SemistableSummand& s) -> SummandKind {
            return SemistableSummand{prioritaire::dual(s.data)};
          },
          // V_x is self-dual as a class: (2, 0, 1).
          [](const VxSummand& s) -> SummandKind { return VxSummand{-s.twist}; },
      },
      kind);
  return {std::move(moved), multiplicity};
}

ChernCharacter total_character(const std::vector<Summand>& summands) {
  ChernCharacter total{0, 0, Rational(0)};
  for (const auto& s : summands) total += s.multiplicity * s.character();
  return total;
}

Decomposition generic_prioritary(const ChernData& cd) {
  Region region = classify(cd);
  if (region.tag == RegionTag::NoPrioritary) {
    throw NoPrioritarySheaf("no prioritary sheaf with invariants " + cd.str());
  }
  const ChernData n = region.normalized.data;
  const Integer shift = region.normalized.shift;
  Decomposition out{cd, region, {}, {}};

  switch (region.tag) {
    case RegionTag::NoPrioritary:
    case RegionTag::SemistablePositiveDim:
      return out;
    case RegionTag::SemistableExceptional: {
      const ExceptionalBundle& f = region.witness;
      require(mpz_divisible_p(n.rank().get_mpz_t(), f.rank().get_mpz_t()),
              "rank is not a multiple of rank(F)");
      out.summands.push_back({ExceptionalSummand{f}, Integer(n.rank() / f.rank())});
      break;
    }
    case RegionTag::SpecialC0C21:
      if (n.rank() > 2) out.summands.push_back({ExceptionalSummand{ExceptionalBundle::line(0)}, n.rank() - 2});
      out.summands.push_back({VxSummand{0}, 1});
      break;
    case RegionTag::AboveDeltaPrime:
      decompose_above(n, region.witness, out);
      break;
    case RegionTag::BelowDeltaPrime:
      decompose_below(n, out);
      break;
  }

  for (auto& s : out.summands) s = s.twisted(-shift);
  const ChernCharacter total = total_character(out.summands);
  require(total == cd.character(),
          "character balance fails: " + total.str() + " vs " + cd.character().str());
  out.verification.push_back({"character_balance", total.str()});
  return out;
}

PresentationReport stable_presentation(const ChernData& cd, const ExceptionalBundle& f) {
  if (cd.rank() < 2) throw PreconditionError("stable_presentation needs rank >= 2");
  const Rational mu = slope(cd);
  const Rational d = discriminant(cd);
  const bool exceptional_point = mu == f.slope() && d == f.delta();
  if (mu > f.slope() || (mu != f.slope() && !interval_contains(f, mu))) {
    throw PreconditionError("slope " + mu.str() + " is not on the left half-interval of " + f.name());
  }
  if (!exceptional_point && d != hirzebruch_p(mu - f.slope()) - f.delta()) {
    throw PreconditionError("discriminant " + d.str() + " is not on the upper frontier");
  }

  const auto terms = series(f, 0, 2);
  const ExceptionalBundle g0 = terms[0].twisted(3);
  const ExceptionalBundle g1 = terms[1].twisted(3);
  const ExceptionalBundle g2 = terms[2].twisted(3);

  const Integer k = as_integer(euler_pairing(cd, f.chern()), "k");
  const Integer m1 = as_integer(-euler_pairing(g1.chern(), cd), "m1");
  const Integer m2 = as_integer(-euler_pairing(g2.chern(), cd), "m2");
  require(k >= 0 && m1 >= 0 && m2 >= 0, "presentation integers must be nonnegative");
  const ChernCharacter balance = k * f.character() + m2 * g0.character() - m1 * g1.character();
  require(balance == cd.character(), "presentation does not balance: " + balance.str());
  return {cd, f, g0, g1, k, m1, m2};
}

}  // namespace prioritaire
