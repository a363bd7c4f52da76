#pragma once

#include <json.hpp>
#include <string>

#include "prioritaire/chern.hpp"
#include "prioritaire/decompose.hpp"
#include "prioritaire/exceptional.hpp"

namespace prioritaire {

struct RenderOptions {
  unsigned digits = 12;
  /// Polyline points per triangle side in SVG output.
  unsigned samples = 64;
};

/// {"exact": "p/q", "decimal": "..."}; the exact string re-parses losslessly.
nlohmann::json exact_value(const Rational& value, const RenderOptions& opts);
nlohmann::json exact_value(const QuadSurd& value, const RenderOptions& opts);

nlohmann::json bundle_record(const ExceptionalBundle& f, const RenderOptions& opts);

nlohmann::json slope_record(const Dyadic& d, const RenderOptions& opts);
nlohmann::json classify_record(const ChernData& cd, const RenderOptions& opts);
/// NoPrioritary inputs produce a record with region "NoPrioritary" and no summands.
nlohmann::json decompose_record(const ChernData& cd, const RenderOptions& opts);
/// Requires -1 <= mu <= 0.
nlohmann::json frontier_record(const Rational& mu, const RenderOptions& opts);
nlohmann::json series_record(const ExceptionalBundle& f, int n_min, int n_max,
                             const RenderOptions& opts);

/// One row per triad to `depth`: level, index and the three vertices as
/// exact rationals. RFC 4180 with a header row.
std::string tile_csv(unsigned depth);

/// Static SVG of the triangles to `depth` plus the two frontier curves.
std::string tile_svg(unsigned depth, const RenderOptions& opts);

/// Indented "key: value" rendering of a record for terminal output.
std::string render_text(const nlohmann::json& record);

}  // namespace prioritaire
