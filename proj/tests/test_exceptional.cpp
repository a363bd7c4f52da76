#include <doctest.h>

#include <cstdlib>

#include "oracle.hpp"
#include "prioritaire/errors.hpp"
#include "prioritaire/exceptional.hpp"

using namespace prioritaire;

namespace {

ExceptionalBundle at(long p, unsigned q) { return epsilon(Dyadic(p, q)); }

}  // namespace

TEST_CASE("dyadics") {
  CHECK(Dyadic(-2, 2) == Dyadic(-1, 1));
  CHECK(Dyadic(-4, 2) == Dyadic(-1));
  CHECK(Dyadic::parse("-1/2^3") == Dyadic(-1, 3));
  CHECK(Dyadic::parse("-3/8") == Dyadic(-3, 3));
  CHECK(Dyadic::parse("-0.375") == Dyadic(-3, 3));
  CHECK(Dyadic::parse("0") == Dyadic(0));
  CHECK(Dyadic(-3, 3).str() == "-3/2^3");
  CHECK(Dyadic::parse(Dyadic(5, 7).str()) == Dyadic(5, 7));
  CHECK(midpoint(Dyadic(-1), Dyadic(0)) == Dyadic(-1, 1));
  CHECK(Dyadic(-3, 2) < Dyadic(-1, 1));
  CHECK_THROWS_AS(Dyadic::parse("1/3"), ParseError);
  CHECK_THROWS_AS(Dyadic::parse("0.1"), ParseError);
  CHECK_THROWS_AS(Dyadic::parse("x/2^3"), ParseError);
}

TEST_CASE("composition law") {
  const ExceptionalBundle q = compose(ExceptionalBundle::line(-1), ExceptionalBundle::line(0));
  CHECK(q.slope() == Rational(-1, 2));
  CHECK(q.rank() == 2);
  const ExceptionalBundle k = compose(q, ExceptionalBundle::line(0));
  CHECK(k.slope() == Rational(-2, 5));
  CHECK(k.rank() == 5);
  const ExceptionalBundle h = compose(ExceptionalBundle::line(-1), q);
  CHECK(h.slope() == Rational(-3, 5));
  CHECK(h.rank() == 5);
  CHECK(h.c1() == -3);
}

TEST_CASE("epsilon values") {
  CHECK(at(0, 0).slope() == 0);
  CHECK(at(0, 0).rank() == 1);
  CHECK(at(-1, 2).slope() == Rational(-2, 5));
  CHECK(at(-1, 2).delta() == Rational(12, 25));
  CHECK(at(-1, 3).slope() == Rational(-5, 13));
  CHECK(at(-1, 3).rank() == 13);
  CHECK(at(-1, 3).delta() == Rational(84, 169));
  CHECK(at(-1, 1).name() == "Q*");
  CHECK(at(3, 0).name() == "O(3)");
  CHECK(at(1, 1).name() == "Q*(1)");
  // epsilon commutes with integer translation
  CHECK(at(5, 2).slope() == at(-3, 2).slope() + 2);
  CHECK(at(-9, 3) == at(-1, 3).twisted(-1));
}

TEST_CASE("every bundle to level 8 is exceptional with the composition vanishings") {
  for (unsigned q = 1; q <= 8; ++q) {
    for (long p = -(1L << q) + 1; p < 0; p += 2) {
      const ExceptionalBundle g = at(p, q);
      const ExceptionalBundle a = at(p - 1, q);
      const ExceptionalBundle b = at(p + 1, q);
      CHECK(euler_pairing(g.chern(), a.chern()) == 0);
      CHECK(euler_pairing(b.chern(), g.chern()) == 0);
      CHECK(euler_pairing(g.chern(), g.chern()) == 1);
      CHECK(gcd(g.rank(), g.c1()) == 1);
      CHECK(g.delta() == Rational(1, 2) * (1 - Rational(1) / Rational(g.rank() * g.rank())));
      CHECK(a.slope() < g.slope());
      CHECK(g.slope() < b.slope());
    }
  }
}

TEST_CASE("from_slope rejects non-exceptional slopes") {
  CHECK_THROWS_AS(ExceptionalBundle::from_slope(Rational(-1, 3)), InternalInconsistency);
  CHECK_THROWS_AS(ExceptionalBundle::from_slope(Rational(-1, 4)), InternalInconsistency);
  CHECK(ExceptionalBundle::from_slope(Rational(-12, 29)).rank() == 29);
}

TEST_CASE("widths") {
  CHECK(width(ExceptionalBundle::line(0)) == QuadSurd(Rational(3, 2), Rational(-1, 2), 5));
  CHECK(width(at(-1, 1)) == QuadSurd(Rational(3, 2), Rational(-1, 4), 32));
  for (long p : {-1L, -3L, -5L}) {
    const ExceptionalBundle f = at(p, 3);
    // x is the smaller root of X^2 - 3X + 1/r^2
    const QuadSurd x = width(f);
    CHECK(x * x - QuadSurd(Rational(3)) * x + QuadSurd(Rational(1) / Rational(f.rank() * f.rank())) ==
          QuadSurd(Rational(0)));
    CHECK(x * inverse_width(f) == QuadSurd(Rational(1)));
  }
}

TEST_CASE("locating exceptional intervals") {
  CHECK(locate_exceptional(Rational(-1, 2)) == at(-1, 1));
  CHECK(locate_exceptional(Rational(-1, 3)) == ExceptionalBundle::line(0));
  CHECK(locate_exceptional(Rational(-39, 100)) == at(-1, 2));
  CHECK(locate_exceptional(Rational(-1)) == ExceptionalBundle::line(-1));
  CHECK(locate_exceptional(Rational(0)) == ExceptionalBundle::line(0));
  for (const ExceptionalBundle& f : enumerate(6)) CHECK(locate_exceptional(f.slope()) == f);
  CHECK(interval_contains(ExceptionalBundle::line(0), Rational(-1, 3)));
  CHECK_FALSE(interval_contains(at(-1, 1), Rational(-2, 5)));
}

TEST_CASE("depth exhaustion carries the bracket") {
  // A point squeezed between intervals needs a deep descent.
  const Rational mu = Rational(-3, 8);
  CHECK_NOTHROW(locate_exceptional(mu));
  try {
    locate_exceptional(Rational(-2, 5) + Rational(1, 70), 1);
    FAIL("expected DepthExhausted");
  } catch (const DepthExhausted& e) {
    CHECK(std::string(e.what()).find("bracketed by") != std::string::npos);
  }
}

TEST_CASE("enumeration") {
  const auto level0 = enumerate(0);
  REQUIRE(level0.size() == 2);
  CHECK(level0[0].slope() == -1);
  CHECK(level0[1].slope() == 0);
  const auto level2 = enumerate(2);
  REQUIRE(level2.size() == 5);
  CHECK(level2[1].slope() == Rational(-3, 5));
  CHECK(level2[2].slope() == Rational(-1, 2));
  CHECK(level2[3].slope() == Rational(-2, 5));
  const auto level5 = enumerate(5);
  CHECK(level5.size() == 33);
  for (std::size_t i = 1; i < level5.size(); ++i) CHECK(level5[i - 1].slope() < level5[i].slope());
}

TEST_CASE("twists and duals") {
  const ExceptionalBundle f = at(-3, 3);
  CHECK(f.twisted(2).slope() == f.slope() + 2);
  CHECK(f.twisted(2).delta() == f.delta());
  CHECK(f.dual().slope() == -f.slope());
  CHECK(f.dual().dual() == f);
  // duality maps epsilon(-d) to epsilon(d)
  CHECK(f.dual() == at(3, 3));
}

TEST_CASE("depth cap from the environment") {
  setenv("PRIORITAIRE_MAX_DEPTH", "7", 1);
  CHECK(default_max_depth() == 7);
  unsetenv("PRIORITAIRE_MAX_DEPTH");
  CHECK(default_max_depth() == 64);
}
