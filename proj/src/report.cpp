#include "prioritaire/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "prioritaire/errors.hpp"
#include "prioritaire/frontier.hpp"
#include "prioritaire/helix.hpp"

namespace prioritaire {

using nlohmann::json;

json exact_value(const Rational& value, const RenderOptions& opts) {
  return {{"exact", value.str()}, {"decimal", to_decimal(value, opts.digits)}};
}

json exact_value(const QuadSurd& value, const RenderOptions& opts) {
  return {{"exact", value.str()}, {"decimal", to_decimal(value, opts.digits)}};
}

namespace {

json chern_record(const ChernData& cd) {
  return {{"rank", cd.rank().get_str()}, {"c1", cd.c1().get_str()}, {"c2", cd.c2().get_str()}};
}

json character_record(const ChernCharacter& ch) {
  return {{"rank", ch.rank.get_str()}, {"c1", ch.c1.get_str()}, {"ch2", ch.ch2.str()}};
}

json invariants_record(const ChernData& cd, const RenderOptions& opts) {
  json out = chern_record(cd);
  out["slope"] = exact_value(slope(cd), opts);
  out["discriminant"] = exact_value(discriminant(cd), opts);
  return out;
}

json region_fields(const Region& region, const RenderOptions& opts) {
  json normalized = invariants_record(region.normalized.data, opts);
  normalized["shift"] = region.normalized.shift.get_str();
  return {{"region", std::string(to_string(region.tag))},
          {"normalized", normalized},
          {"witness", bundle_record(region.witness, opts)}};
}

json summand_record(const Summand& s, const RenderOptions& opts) {
  json out;
  out["name"] = s.name();
  out["multiplicity"] = s.multiplicity.get_str();
  out["character"] = character_record(s.character());
  std::visit(
      [&](const auto& kind) {
        using T = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<T, ExceptionalSummand>) {
          out["kind"] = "exceptional";
          out["bundle"] = bundle_record(kind.bundle, opts);
        } else if constexpr (std::is_same_v<T, SemistableSummand>) {
          out["kind"] = "generic_semistable";
          out["chern"] = invariants_record(kind.data, opts);
        } else {
          out["kind"] = "vx_extension";
          out["twist"] = kind.twist.get_str();
        }
      },
      s.kind);
  return out;
}

}  // namespace

json bundle_record(const ExceptionalBundle& f, const RenderOptions& opts) {
  return {{"name", f.name()},
          {"slope", exact_value(f.slope(), opts)},
          {"rank", f.rank().get_str()},
          {"c1", f.c1().get_str()},
          {"c2", f.c2().get_str()},
          {"delta", exact_value(f.delta(), opts)},
          {"width", exact_value(width(f), opts)}};
}

json slope_record(const Dyadic& d, const RenderOptions& opts) {
  return {{"command", "slope"}, {"dyadic", d.str()}, {"bundle", bundle_record(epsilon(d), opts)}};
}

json classify_record(const ChernData& cd, const RenderOptions& opts) {
  const Region region = classify(cd);
  json out = region_fields(region, opts);
  out["command"] = "classify";
  out["input"] = invariants_record(cd, opts);
  const Rational mu = slope(region.normalized.data);
  const FrontierValues frontier = frontier_at(mu);
  out["prioritary_bound"] = exact_value(prioritary_bound(mu), opts);
  out["delta"] = exact_value(frontier.delta, opts);
  out["delta_prime"] = exact_value(frontier.delta_prime, opts);
  out["prioritary_exists"] = prioritary_exists(cd);
  out["semistable"] = std::string(to_string(semistable_exists(cd)));
  return out;
}

json decompose_record(const ChernData& cd, const RenderOptions& opts) {
  json out;
  out["command"] = "decompose";
  out["input"] = invariants_record(cd, opts);
  out["input"]["character"] = character_record(cd.character());
  try {
    const Decomposition dec = generic_prioritary(cd);
    out.update(region_fields(dec.region, opts));
    json summands = json::array();
    for (const auto& s : dec.summands) summands.push_back(summand_record(s, opts));
    out["summands"] = summands;
    json checks = json::array();
    for (const auto& c : dec.verification) checks.push_back({{"check", c.name}, {"detail", c.detail}});
    out["verification"] = checks;
    if (dec.region.tag == RegionTag::SemistablePositiveDim) {
      out["note"] = "generic sheaf is semistable with positive-dimensional moduli";
    }
  } catch (const NoPrioritarySheaf&) {
    out.update(region_fields(classify(cd), opts));
    out["summands"] = json::array();
    out["verification"] = json::array();
    out["note"] = "no prioritary sheaf has these invariants";
  }
  return out;
}

json frontier_record(const Rational& mu, const RenderOptions& opts) {
  if (mu < Rational(-1) || mu > Rational(0)) {
    throw PreconditionError("frontier is reported on -1 <= mu <= 0 only, got " + mu.str());
  }
  const FrontierValues frontier = frontier_at(mu);
  const Rational offset = mu - frontier.bundle.slope();
  return {{"command", "frontier"},
          {"mu", exact_value(mu, opts)},
          {"bundle", bundle_record(frontier.bundle, opts)},
          {"branch", offset.sign() < 0 ? "left" : (offset.sign() > 0 ? "right" : "center")},
          {"delta", exact_value(frontier.delta, opts)},
          {"delta_prime", exact_value(frontier.delta_prime, opts)},
          {"prioritary_bound", exact_value(prioritary_bound(mu), opts)}};
}

json series_record(const ExceptionalBundle& f, int n_min, int n_max, const RenderOptions& opts) {
  const auto terms = series(f, n_min, n_max);
  json rows = json::array();
  for (int n = n_min; n <= n_max; ++n) {
    const ExceptionalBundle& g = terms[static_cast<std::size_t>(n - n_min)];
    rows.push_back({{"n", std::to_string(n)},
                    {"bundle", bundle_record(g, opts)},
                    {"chi_F_G", euler_pairing(f.chern(), g.chern()).str()}});
  }
  const auto [g0, g1] = initial_pair(f);
  return {{"command", "series"},
          {"bundle", bundle_record(f, opts)},
          {"initial_pair", json::array({g0.name(), g1.name()})},
          {"terms", rows}};
}

// ---------------------------------------------------------------------------
// Tiling output

std::string tile_csv(unsigned depth) {
  std::ostringstream out;
  out << "level,index,left_mu,left_delta,middle_mu,middle_delta,right_mu,right_delta\r\n";
  for (const Triad& t : enumerate_triads(depth)) {
    out << t.level << ',' << t.index.get_str();
    for (const ExceptionalBundle* v : {&t.left, &t.middle, &t.right}) {
      out << ',' << v->slope().str() << ',' << v->delta().str();
    }
    out << "\r\n";
  }
  return out.str();
}

namespace {

constexpr double kWidth = 1000.0;
constexpr double kHeight = 700.0;
constexpr double kDeltaMax = 0.7;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string point(double mu, double d) {
  return fmt((mu + 1.0) * kWidth) + "," + fmt(kHeight - d / kDeltaMax * kHeight);
}

double p_of(double x) { return x * x / 2.0 + 1.5 * x + 1.0; }

double side_at(const ConicSide& side, double mu) {
  const double c = side.center.to_double();
  return p_of(side.direction > 0 ? mu - c : c - mu) - side.offset.to_double();
}

void sample_side(std::ostringstream& path, const ConicSide& side, double from, double to,
                 unsigned samples, bool first) {
  for (unsigned i = first ? 0 : 1; i <= samples; ++i) {
    const double mu = from + (to - from) * static_cast<double>(i) / samples;
    path << (i == 0 ? "M" : " L") << point(mu, side_at(side, mu));
  }
}

}  // namespace

std::string tile_svg(unsigned depth, const RenderOptions& opts) {
  const unsigned samples = std::max(1u, opts.samples);
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" height=\"700\" "
         "viewBox=\"0 0 1000 700\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"700\" fill=\"white\"/>\n"
      << "<g class=\"tiles\" fill=\"none\" stroke=\"black\" stroke-width=\"0.6\">\n";
  for (const Triad& t : enumerate_triads(depth)) {
    const Triangle tri(t);
    const double e = t.left.slope().to_double();
    const double f = t.middle.slope().to_double();
    const double g = t.right.slope().to_double();
    std::ostringstream path;
    sample_side(path, tri.sides()[0], e, f, samples, true);
    sample_side(path, tri.sides()[1], f, g, samples, false);
    sample_side(path, tri.sides()[2], g, e, samples, false);
    out << "<path data-level=\"" << t.level << "\" data-index=\"" << t.index.get_str() << "\" d=\""
        << path.str() << " Z\"/>\n";
  }
  out << "</g>\n";

  // Frontier curves, one polyline per branch of each exceptional interval.
  std::ostringstream upper;
  std::ostringstream lower;
  for (const ExceptionalBundle& bundle : enumerate(std::min(depth, 6u))) {
    const double mu_f = bundle.slope().to_double();
    const double x = width(bundle).to_double();
    const double r2 = bundle.rank().get_d() * bundle.rank().get_d();
    const double delta_f = bundle.delta().to_double();
    for (int side : {-1, 1}) {
      const double from = mu_f;
      const double to = std::clamp(mu_f + side * x, -1.0, 0.0);
      if (from == to) continue;
      upper << "<polyline points=\"";
      lower << "<polyline points=\"";
      for (unsigned i = 0; i <= samples; ++i) {
        const double mu = from + (to - from) * static_cast<double>(i) / samples;
        const double gap = std::abs(mu - mu_f);
        const double d = p_of(-gap) - delta_f;
        const double dp = d - (1.0 - gap / x) / r2;
        upper << (i ? " " : "") << point(mu, d);
        lower << (i ? " " : "") << point(mu, dp);
      }
      upper << "\"/>\n";
      lower << "\"/>\n";
    }
  }
  out << "<g class=\"delta\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"0.8\">\n"
      << upper.str() << "</g>\n"
      << "<g class=\"delta-prime\" fill=\"none\" stroke=\"#b22222\" stroke-width=\"0.8\">\n"
      << lower.str() << "</g>\n"
      << "</svg>\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Text rendering

namespace {

bool is_exact_pair(const json& j) {
  return j.is_object() && j.size() == 2 && j.contains("exact") && j.contains("decimal");
}

std::string scalar(const json& j) {
  if (is_exact_pair(j)) {
    const std::string e = j["exact"].get<std::string>();
    const std::string d = j["decimal"].get<std::string>();
    return e == d ? e : e + "  (~ " + d + ")";
  }
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void render(std::ostringstream& out, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if ((value.is_object() && !is_exact_pair(value)) || (value.is_array() && !value.empty())) {
        out << pad << key << ":\n";
        render(out, value, indent + 2);
      } else {
        out << pad << key << ": " << (value.is_array() ? "[]" : scalar(value)) << '\n';
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (item.is_object() && !is_exact_pair(item)) {
        out << pad << "-\n";
        render(out, item, indent + 2);
      } else {
        out << pad << "- " << scalar(item) << '\n';
      }
    }
  } else {
    out << pad << scalar(j) << '\n';
  }
}

}  // namespace

std::string render_text(const json& record) {
  std::ostringstream out;
  render(out, record, 0);
  return out.str();
}

}  // namespace prioritaire
