#include "prioritaire/selfcheck.hpp"

#include <functional>

#include "prioritaire/decompose.hpp"
#include "prioritaire/errors.hpp"
#include "prioritaire/frontier.hpp"
#include "prioritaire/helix.hpp"

namespace prioritaire {

namespace {

/// The body reports each case through `record`; an empty string means success.
SuiteResult run_suite(const std::string& name,
                      const std::function<void(const std::function<bool(std::string)>&)>& body) {
  SuiteResult result{name, true, 0, {}};
  auto record = [&](std::string failure) {
    ++result.checked;
    if (failure.empty()) return true;
    result.passed = false;
    result.counterexample = std::move(failure);
    return false;
  };
  try {
    body(record);
  } catch (const std::exception& e) {
    result.passed = false;
    result.counterexample = std::string("exception: ") + e.what();
  }
  return result;
}

std::vector<Dyadic> dyadics(unsigned level) {
  std::vector<Dyadic> out;
  const long n = 1L << level;
  for (long p = -n; p <= 0; ++p) out.emplace_back(Integer(p), level);
  return out;
}

}  // namespace

std::vector<SuiteResult> run_selfcheck(unsigned depth) {
  std::vector<SuiteResult> out;

  out.push_back(run_suite("exceptional", [&](const auto& record) {
    for (const Dyadic& d : dyadics(depth)) {
      const ExceptionalBundle e = epsilon(d);
      const Rational self = euler_pairing(e.chern(), e.chern());
      const Rational expected_delta = Rational(1, 2) * (1 - Rational(1) / Rational(e.rank() * e.rank()));
      bool ok = self == 1 && e.delta() == expected_delta && gcd(e.rank(), e.c1()) == 1;
      if (ok && !d.is_integer()) {
        const ExceptionalBundle a = epsilon(Dyadic(d.numerator() - 1, d.exponent()));
        const ExceptionalBundle b = epsilon(Dyadic(d.numerator() + 1, d.exponent()));
        ok = euler_pairing(e.chern(), a.chern()) == 0 && euler_pairing(b.chern(), e.chern()) == 0;
      }
      if (!record(ok ? "" : "epsilon(" + d.str() + ") = " + e.name())) return;
    }
  }));

  out.push_back(run_suite("helix", [&](const auto& record) {
    const auto triads = enumerate_triads(depth);
    const Integer expected = (Integer(1) << (depth + 1)) - 1;
    if (!record(Integer(triads.size()) == expected ? "" : "triad count")) return;
    for (const Triad& t : triads) {
      const Integer& re = t.left.rank();
      const Integer& rf = t.middle.rank();
      const Integer& rg = t.right.rank();
      const bool ok = re * re + rf * rf + rg * rg == 3 * re * rf * rg &&
                      euler_pairing(t.left.chern(), t.middle.chern()) == Rational(3 * rg);
      if (!record(ok ? "" : "triad at level " + std::to_string(t.level) + " index " + t.index.get_str())) {
        return;
      }
    }
  }));

  out.push_back(run_suite("frontier", [&](const auto& record) {
    for (const ExceptionalBundle& f : enumerate(depth)) {
      const Rational gap = delta(f.slope()) - f.delta();
      const bool ok = gap == Rational(1) / Rational(f.rank() * f.rank()) &&
                      delta_prime(f.slope()) == QuadSurd(f.delta());
      if (!record(ok ? "" : "frontier at " + f.name())) return;
    }
  }));

  out.push_back(run_suite("tiling", [&](const auto& record) {
    for (const Triad& t : enumerate_triads(depth > 0 ? depth - 1 : 0)) {
      const auto [l, r] = children(t);
      const Triangle parent(t);
      // Each child sits on the upper side of its parent that it shares.
      const bool ok = Triangle(l).sides()[2].coefficients() == parent.sides()[0].coefficients() &&
                      Triangle(r).sides()[2].coefficients() == parent.sides()[1].coefficients();
      if (!record(ok ? "" : "no shared side below level " + std::to_string(t.level) + " index " +
                                t.index.get_str())) {
        return;
      }
    }
  }));

  out.push_back(run_suite("decompose", [&](const auto& record) {
    const long max_rank = 2 + static_cast<long>(depth);
    for (long r = 2; r <= max_rank; ++r) {
      for (long c1 = -r + 1; c1 <= 0; ++c1) {
        const Rational mu(c1, r);
        const Rational shift = Rational((r - 1) * c1 * c1, 2 * r);
        const Rational upper = delta(mu);
        Integer c2 = (Rational(r) * prioritary_bound(mu) + shift).ceil();
        for (;; ++c2) {
          const ChernData cd(r, c1, c2);
          if (discriminant(cd) >= upper) break;
          const Decomposition dec = generic_prioritary(cd);
          bool ok = total_character(dec.summands) == cd.character();
          for (const auto& s : dec.summands) ok = ok && s.multiplicity > 0;
          if (!record(ok ? "" : "decompose " + cd.str())) return;
        }
      }
    }
  }));

  return out;
}

}  // namespace prioritaire
