// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Usage: acceptance <path-to-cli>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "oracle.hpp"
#include "prioritaire/decompose.hpp"
#include "prioritaire/errors.hpp"
#include "prioritaire/helix.hpp"

using namespace prioritaire;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  /// Records the first failure only.
  void expect(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

oracle::Ch ch(const ExceptionalBundle& e) {
  return oracle::ch_of(e.rank(), e.c1(), e.c2());
}

oracle::Ch ch(const ChernData& cd) {
  return oracle::ch_of(cd.rank(), cd.c1(), cd.c2());
}

oracle::Ch ch(const ChernCharacter& c) {
  return {mpq_class(c.rank), mpq_class(c.c1), c.ch2.raw()};
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string run(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome epsilon_oracle() {
  Outcome o;
  const auto start = Clock::now();
  int interior = 0;
  for (unsigned q = 1; q <= 8; ++q) {
    for (long p = -(1L << q) + 1; p < 0; p += 2) {
      ++interior;
      const ExceptionalBundle a = epsilon(Dyadic(p - 1, q));
      const ExceptionalBundle b = epsilon(Dyadic(p + 1, q));
      const ExceptionalBundle g = epsilon(Dyadic(p, q));
      const ExceptionalBundle c = compose(a, b);
      const std::string at = Dyadic(p, q).str();
      o.expect(c == g, "compose disagrees with epsilon at " + at);
      o.expect(oracle::chi(ch(c), ch(a)) == 0, "chi(E_ab, E_a) != 0 at " + at);
      o.expect(oracle::chi(ch(b), ch(c)) == 0, "chi(E_b, E_ab) != 0 at " + at);
    }
  }
  const double t = seconds_since(start);
  o.expect(interior == 255, "interior count " + std::to_string(interior));
  o.expect(t < 2.0, "took " + std::to_string(t) + " s");
  if (o.ok) o.detail = std::to_string(interior) + " dyadics in " + std::to_string(t) + " s";
  return o;
}

Outcome structural_invariants() {
  Outcome o;
  const auto triads = enumerate_triads(8);
  for (const Triad& t : triads) {
    const std::string at = "level " + std::to_string(t.level) + " index " + t.index.get_str();
    const mpz_class re = t.left.rank(), rf = t.middle.rank(), rg = t.right.rank();
    o.expect(re * re + rf * rf + rg * rg == 3 * re * rf * rg, "Markov at " + at);
    o.expect(oracle::chi(ch(t.left), ch(t.middle)) == mpq_class(3 * rg), "hom identity at " + at);
    for (const ExceptionalBundle* e : {&t.left, &t.middle, &t.right}) {
      const mpz_class r = e->rank();
      const mpz_class c1 = e->c1();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), c1.get_mpz_t());
      o.expect(g == 1, "gcd at " + at);
      const mpq_class c2 = oracle::q(c1 * c1, 2) - e->character().ch2.raw();
      o.expect(c2.get_den() == 1, "c2 integrality at " + at);
      const mpq_class delta = (c2 - oracle::q((r - 1) * c1 * c1, 2 * r)) / r;
      o.expect(delta == mpq_class(1, 2) * (1 - mpq_class(1, r * r)), "Delta at " + at);
    }
  }
  if (o.ok) o.detail = std::to_string(triads.size()) + " triads";
  return o;
}

Outcome interval_partition() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<long> den(1, 200);
  for (int i = 0; i < 500; ++i) {
    const long d = den(rng);
    const long n = -std::uniform_int_distribution<long>(0, d)(rng);
    const Rational mu(n, d);
    try {
      const ExceptionalBundle f = locate_exceptional(mu, 40);
      o.expect(mu == f.slope() || interval_contains(f, mu), "located interval misses " + mu.str());
    } catch (const std::exception& e) {
      o.expect(false, mu.str() + ": " + e.what());
    }
  }
  // Sorted by centre, so adjacent disjointness gives pairwise disjointness.
  const auto level = enumerate(12);
  for (std::size_t i = 1; i < level.size(); ++i) {
    const ExceptionalBundle& a = level[i - 1];
    const ExceptionalBundle& b = level[i];
    // (mu_b - x_b) - (mu_a + x_a) >= 0
    const Sign gap = sign_of_sum(QuadSurd(b.slope() - a.slope()) - width(b), -width(a));
    o.expect(gap != Sign::Negative, "intervals of " + a.name() + " and " + b.name() + " overlap");
  }
  if (o.ok) o.detail = "500 samples, " + std::to_string(level.size()) + " intervals to level 12";
  return o;
}

std::vector<std::pair<Rational, Rational>> interior_points(const Triangle& tri, const Triad& t, int count) {
  std::vector<std::pair<Rational, Rational>> out;
  const Rational lo = t.left.slope();
  const Rational hi = t.right.slope();
  for (int k = 1; k < 4 * count && static_cast<int>(out.size()) < count; ++k) {
    const Rational mu = lo + (hi - lo) * Rational(k, 4 * count);
    const Rational upper = std::min(tri.sides()[0].at(mu), tri.sides()[1].at(mu));
    const Rational lower = tri.sides()[2].at(mu);
    if (upper <= lower) continue;
    out.emplace_back(mu, lower + (upper - lower) * Rational(1 + k % 3, 4));
  }
  return out;
}

Outcome tiling() {
  Outcome o;
  for (unsigned n = 0; n <= 6; ++n) {
    const std::size_t count = enumerate_triads(n).size();
    o.expect(count == (std::size_t{1} << (n + 1)) - 1, "count at depth " + std::to_string(n));
  }
  const auto triads = enumerate_triads(6);
  std::vector<Triangle> tris;
  for (const Triad& t : triads) tris.emplace_back(t);
  long tested = 0;
  for (std::size_t i = 0; i < tris.size(); ++i) {
    const auto pts = interior_points(tris[i], triads[i], 10);
    o.expect(pts.size() == 10, "too few interior samples in triangle " + std::to_string(i));
    for (const auto& [mu, d] : pts) {
      o.expect(tris[i].contains(mu, d, true), "sample outside its own triangle");
      for (std::size_t j = 0; j < tris.size(); ++j) {
        ++tested;
        if (j != i) {
          o.expect(!tris[j].contains(mu, d, true),
                   "interiors of triangles " + std::to_string(i) + " and " + std::to_string(j) + " meet");
        }
      }
    }
  }
  // Tree-adjacent pairs share one side exactly.
  for (std::size_t i = 0; 2 * i + 2 < triads.size(); ++i) {
    o.expect(tris[2 * i + 1].sides()[2].coefficients() == tris[i].sides()[0].coefficients(),
             "left child side mismatch at " + std::to_string(i));
    o.expect(tris[2 * i + 2].sides()[2].coefficients() == tris[i].sides()[1].coefficients(),
             "right child side mismatch at " + std::to_string(i));
  }
  if (o.ok) o.detail = std::to_string(tris.size()) + " triangles, " + std::to_string(tested) + " membership tests";
  return o;
}

Outcome decomposition_sweep() {
  Outcome o;
  const auto start = Clock::now();
  long cases = 0, above = 0, below = 0;
  for (long r = 2; r <= 10; ++r) {
    for (long c1 = -r + 1; c1 <= 0; ++c1) {
      const Rational mu(c1, r);
      const Rational shift((r - 1) * c1 * c1, 2 * r);
      const Rational upper = delta(mu);
      for (Integer c2 = (Rational(r) * prioritary_bound(mu) + shift).ceil();; ++c2) {
        const ChernData cd(r, c1, c2);
        const Rational d = discriminant(cd);
        if (d >= upper) break;
        ++cases;
        const std::string at = cd.str();
        try {
          const Decomposition dec = generic_prioritary(cd);
          oracle::Ch total{0, 0, 0};
          for (const auto& s : dec.summands) {
            o.expect(s.multiplicity > 0, "nonpositive multiplicity at " + at);
            const oracle::Ch one = ch(s.character());
            total.r += mpq_class(s.multiplicity) * one.r;
            total.c1 += mpq_class(s.multiplicity) * one.c1;
            total.ch2 += mpq_class(s.multiplicity) * one.ch2;
          }
          const oracle::Ch want = ch(cd);
          o.expect(total.r == want.r && total.c1 == want.c1 && total.ch2 == want.ch2, "additivity at " + at);

          if (dec.region.tag == RegionTag::AboveDeltaPrime) {
            ++above;
            const auto& f = std::get<ExceptionalSummand>(dec.summands.at(0).kind).bundle;
            const Integer& p = dec.summands[0].multiplicity;
            const auto& u = std::get<SemistableSummand>(dec.summands.at(1).kind).data;
            o.expect(p > 0 && p * f.rank() < cd.rank(), "p bounds at " + at);
            o.expect(discriminant(u) == delta(slope(u)), "residual off the frontier at " + at);
          } else if (dec.region.tag == RegionTag::BelowDeltaPrime) {
            ++below;
            const Triad t = locate_triangle(mu, d);
            const std::array<mpq_class, 3> functional{oracle::chi(want, ch(t.left)), -oracle::chi(want, ch(t.kernel)),
                                                      oracle::chi(ch(t.right), want)};
            const std::array<const ExceptionalBundle*, 3> vertices{&t.left, &t.middle, &t.right};
            for (std::size_t k = 0; k < 3; ++k) {
              mpq_class got = 0;
              for (const auto& s : dec.summands) {
                if (std::get<ExceptionalSummand>(s.kind).bundle == *vertices[k]) got = mpq_class(s.multiplicity);
              }
              o.expect(got == functional[k], "Euler functional " + std::to_string(k) + " at " + at);
            }
          }
        } catch (const std::exception& e) {
          o.expect(false, at + ": " + e.what());
        }
      }
    }
  }
  const double t = seconds_since(start);
  o.expect(t < 10.0, "took " + std::to_string(t) + " s");
  if (o.ok) {
    o.detail = std::to_string(cases) + " cases (" + std::to_string(above) + " above, " + std::to_string(below) +
               " below) in " + std::to_string(t) + " s";
  }
  return o;
}

bool summands_are(const Decomposition& d, const std::vector<std::pair<oracle::Ch, long>>& want) {
  if (d.summands.size() != want.size()) return false;
  for (std::size_t i = 0; i < want.size(); ++i) {
    const oracle::Ch got = ch(d.summands[i].character());
    const auto& [w, m] = want[i];
    if (got.r != w.r || got.c1 != w.c1 || got.ch2 != w.ch2 || d.summands[i].multiplicity != m) return false;
  }
  return true;
}

Outcome named_values() {
  Outcome o;
  const oracle::Ch line_m1 = oracle::ch_of(1, -1, 0);
  const oracle::Ch q_star = oracle::ch_of(2, -1, 1);
  const oracle::Ch line_0 = oracle::ch_of(1, 0, 0);

  // (4,-2,2) and (5,-2,3): solve on the root triad.
  for (const auto& [input, expected] :
       std::vector<std::pair<std::array<long, 3>, std::array<long, 3>>>{{{4, -2, 2}, {1, 1, 1}}, {{5, -2, 3}, {0, 2, 1}}}) {
    const auto solved = oracle::solve(line_m1, q_star, line_0, oracle::ch_of(input[0], input[1], input[2]));
    std::vector<std::pair<oracle::Ch, long>> want;
    const std::array<oracle::Ch, 3> basis{line_m1, q_star, line_0};
    bool matches = solved.has_value();
    for (std::size_t k = 0; matches && k < 3; ++k) {
      matches = (*solved)[k] == expected[k];
      if (expected[k] > 0) want.emplace_back(basis[k], expected[k]);
    }
    o.expect(matches, "oracle solve for (" + std::to_string(input[0]) + ",...)");
    o.expect(summands_are(generic_prioritary(ChernData(input[0], input[1], input[2])), want),
             "decompose (" + std::to_string(input[0]) + ", " + std::to_string(input[1]) + ", " + std::to_string(input[2]) + ")");
  }

  // (8,-4,11): p = chi(F, cd) on the left branch, U = cd - p F.
  const oracle::Ch v = oracle::ch_of(8, -4, 11);
  const mpq_class p = oracle::chi(q_star, v);
  o.expect(p == 2, "oracle p for (8,-4,11)");
  const oracle::Ch u{v.r - p * q_star.r, v.c1 - p * q_star.c1, v.ch2 - p * q_star.ch2};
  const oracle::Ch u_expected = oracle::ch_of(4, -2, 4);
  o.expect(u.r == u_expected.r && u.c1 == u_expected.c1 && u.ch2 == u_expected.ch2, "oracle residual");
  o.expect(summands_are(generic_prioritary(ChernData(8, -4, 11)), {{q_star, 2}, {u_expected, 1}}), "decompose (8,-4,11)");

  // (3,0,1) = O + V_x with ch(V_x) = (2, 0, -1)
  o.expect(summands_are(generic_prioritary(ChernData(3, 0, 1)), {{line_0, 1}, {oracle::ch_of(2, 0, 1), 1}}),
           "decompose (3,0,1)");
  o.expect(classify(ChernData(2, -1, 1)).tag == RegionTag::SemistableExceptional, "classify (2,-1,1)");
  o.expect(classify(ChernData(2, -1, 0)).tag == RegionTag::NoPrioritary, "classify (2,-1,0)");
  return o;
}

Outcome limit_convergence() {
  Outcome o;
  const auto g = series(ExceptionalBundle::line(0), 0, 20);
  const Rational tol(1, 1000000);
  o.expect((g[20].delta() - Rational(1, 2)).abs() < tol, "Delta(G20) too far from 1/2");
  const QuadSurd offset = QuadSurd(g[20].slope()) + width(ExceptionalBundle::line(0));
  o.expect(surd_cmp_rational(offset, tol) == std::strong_ordering::less &&
               surd_cmp_rational(offset, -tol) == std::strong_ordering::greater,
           "mu(G20) too far from -x_O");
  for (std::size_t n = 1; n < g.size(); ++n) {
    o.expect(g[n - 1].delta() <= g[n].delta(), "Delta not monotone at n = " + std::to_string(n));
    o.expect(g[n - 1].slope() < g[n].slope(), "slope not increasing at n = " + std::to_string(n));
  }
  if (o.ok) {
    o.detail = "1/2 - Delta(G20) = " + to_decimal(Rational(1, 2) - g[20].delta(), 20) +
               ", mu(G20) + x_O = " + to_decimal(offset, 20);
  }
  return o;
}

Outcome lemma_reproduction() {
  Outcome o;
  const ExceptionalBundle f = ExceptionalBundle::line(0);
  const auto g = series(f, 0, 4);
  for (int n = 0; n <= 3; ++n) {
    const std::vector<Multiple> sum{{g[n], 1}, {g[n + 1], 1}, {f, 1}};
    const Answer want = n == 0 ? Answer::No : Answer::Yes;
    o.expect(is_prioritary_sum(sum) == want, "n = " + std::to_string(n));
  }
  return o;
}

Outcome frontier_symmetry() {
  Outcome o;
  const auto all = enumerate(8);
  for (const ExceptionalBundle& f : all) {
    o.expect(delta(f.slope()) - f.delta() == Rational(1) / Rational(f.rank() * f.rank()), "gap at " + f.name());
  }
  if (o.ok) o.detail = std::to_string(all.size()) + " bundles";
  return o;
}

Outcome cli_determinism(const std::string& cli) {
  Outcome o;
  if (cli.empty()) {
    o.expect(false, "no CLI path given");
    return o;
  }
  const auto dir = std::filesystem::temp_directory_path() / ("acceptance-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  for (const char* format : {"svg", "csv"}) {
    const auto a = dir / (std::string("a.") + format);
    const auto b = dir / (std::string("b.") + format);
    const std::string base = "'" + cli + "' tile --depth 5 --format " + format + " --out ";
    const int ra = std::system((base + "'" + a.string() + "'").c_str());
    const int rb = std::system((base + "'" + b.string() + "'").c_str());
    const std::string sa = slurp(a);
    o.expect(ra == 0 && rb == 0, std::string("tile ") + format + " exit status");
    o.expect(!sa.empty() && sa == slurp(b), std::string(format) + " output differs between runs");
    o.expect(run("'" + cli + "' tile --depth 5 --format " + format) == sa, std::string(format) + " stdout differs");
  }
  std::filesystem::remove_all(dir);

  for (const char* args : {"8 -4 11", "4 -2 2", "5 -2 3", "3 0 1", "10 -3 6", "7 4 8", "2 -1 0"}) {
    const std::string out = run("'" + cli + "' --json decompose -- " + args);
    try {
      const auto j = nlohmann::json::parse(out);
      const auto& in = j.at("input");
      const oracle::Ch want = oracle::ch_of(mpz_class(in.at("rank").get<std::string>()),
                                            mpz_class(in.at("c1").get<std::string>()),
                                            mpz_class(in.at("c2").get<std::string>()));
      const std::string region = j.at("region").get<std::string>();
      oracle::Ch total{0, 0, 0};
      for (const auto& s : j.at("summands")) {
        const mpq_class m(s.at("multiplicity").get<std::string>());
        const auto& c = s.at("character");
        total.r += m * mpq_class(c.at("rank").get<std::string>());
        total.c1 += m * mpq_class(c.at("c1").get<std::string>());
        mpq_class ch2(c.at("ch2").get<std::string>());
        ch2.canonicalize();
        total.ch2 += m * ch2;
      }
      if (region == "NoPrioritary" || region == "SemistablePositiveDim") {
        o.expect(j.at("summands").empty(), std::string("summands reported for ") + args);
      } else {
        o.expect(total.r == want.r && total.c1 == want.c1 && total.ch2 == want.ch2,
                 std::string("additivity after re-parse for ") + args);
      }
      o.expect(out == run("'" + cli + "' --json decompose -- " + args), std::string("JSON differs for ") + args);
    } catch (const std::exception& e) {
      o.expect(false, std::string("decompose ") + args + ": " + e.what());
    }
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"epsilon-oracle exactness", epsilon_oracle},
      {"structural invariants to depth 8", structural_invariants},
      {"interval partition", interval_partition},
      {"tiling", tiling},
      {"decomposition sweep", decomposition_sweep},
      {"named values", named_values},
      {"limit convergence", limit_convergence},
      {"priority of G_n + G_n+1 + O", lemma_reproduction},
      {"frontier symmetry", frontier_symmetry},
      {"CLI determinism", [&] { return cli_determinism(cli); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << '\n';
  }
  return failures == 0 ? 0 : 1;
}
