// Command-line front end: exceptional slopes, region classification,
// decompositions, frontiers, series and tilings.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "prioritaire/decompose.hpp"
#include "prioritaire/errors.hpp"
#include "prioritaire/report.hpp"
#include "prioritaire/selfcheck.hpp"

namespace {

using namespace prioritaire;
using nlohmann::json;

constexpr unsigned kTileMaxDepth = 10;

struct Options {
  bool json = false;
  unsigned digits = 12;
  unsigned samples = 64;
  std::string out;
  unsigned depth = 6;
  std::string format = "svg";
  std::string dyadic;
  std::string mu;
  std::vector<std::string> chern;
  int n_min = 0;
  int n_max = 4;
};

/// Exit status 2: the computation itself is suspect.
class CheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ChernData parse_chern(const std::vector<std::string>& args) {
  return ChernData(parse_integer(args.at(0)), parse_integer(args.at(1)), parse_integer(args.at(2)));
}

void emit(const Options& opts, const std::string& text) {
  if (opts.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opts.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + opts.out + " for writing");
  file << text;
  if (!file.flush()) throw std::runtime_error("write to " + opts.out + " failed");
}

void emit_record(const Options& opts, const json& record) {
  emit(opts, opts.json ? record.dump(2) + "\n" : render_text(record));
}

void run_selfcheck_command(const Options& opts) {
  const auto results = run_selfcheck(opts.depth);
  bool all = true;
  json suites = json::array();
  std::ostringstream text;
  for (const auto& r : results) {
    all = all && r.passed;
    suites.push_back({{"suite", r.name},
                      {"passed", r.passed},
                      {"cases", std::to_string(r.checked)},
                      {"counterexample", r.counterexample}});
    text << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checked << " cases)";
    if (!r.passed) text << ": " << r.counterexample;
    text << '\n';
  }
  if (opts.json) {
    emit(opts, json{{"command", "selfcheck"}, {"depth", std::to_string(opts.depth)},
                    {"passed", all}, {"suites", suites}}
                       .dump(2) +
                   "\n");
  } else {
    emit(opts, text.str());
  }
  if (!all) throw CheckFailed("selfcheck failed");
}

}  // namespace

int main(int argc, char** argv) {
  Options opts;
  CLI::App app{
      "Exact frontiers and generic decompositions for sheaves on the projective plane.\n"
      "Negative arguments go after a \"--\" separator, e.g. `classify -- 2 -1 0`."};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", opts.json, "Machine-readable JSON output");
  app.add_option("--digits", opts.digits, "Decimal digits in approximations")->check(CLI::Range(1, 200));
  app.add_option("--out", opts.out, "Write output to a file instead of stdout");

  auto* slope = app.add_subcommand("slope", "Exceptional bundle epsilon(p/2^q)");
  slope->add_option("dyadic", opts.dyadic, "Dyadic rational, p/2^q or an exact decimal")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Region of (r, c1, c2)");
  classify_cmd->add_option("chern", opts.chern, "r c1 c2")->expected(3)->required();

  auto* decompose = app.add_subcommand("decompose", "Generic prioritary sheaf of (r, c1, c2)");
  decompose->add_option("chern", opts.chern, "r c1 c2")->expected(3)->required();

  auto* frontier = app.add_subcommand("frontier", "delta and delta' at a slope in [-1, 0]");
  frontier->add_option("mu", opts.mu, "Rational slope")->required();

  auto* series_cmd = app.add_subcommand("series", "Exceptional series G_n orthogonal to epsilon(dyadic)");
  series_cmd->add_option("dyadic", opts.dyadic, "Dyadic rational")->required();
  series_cmd->add_option("n_max", opts.n_max, "Last index")->required();
  series_cmd->add_option("--from", opts.n_min, "First index (default 0)");

  auto* tile = app.add_subcommand("tile", "Triangle tiling as SVG or CSV");
  tile->add_option("--depth", opts.depth, "Tree depth")->required();
  tile->add_option("--format", opts.format, "svg or csv")->check(CLI::IsMember({"svg", "csv"}));
  tile->add_option("--samples", opts.samples, "Polyline points per side")->check(CLI::Range(1, 4096));

  auto* selfcheck = app.add_subcommand("selfcheck", "Invariant suites of every module");
  selfcheck->add_option("--depth", opts.depth, "Tree depth (default 6)")->check(CLI::Range(0, 12));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const RenderOptions render{opts.digits, opts.samples};
  try {
    if (*slope) {
      emit_record(opts, slope_record(Dyadic::parse(opts.dyadic), render));
    } else if (*classify_cmd) {
      emit_record(opts, classify_record(parse_chern(opts.chern), render));
    } else if (*decompose) {
      emit_record(opts, decompose_record(parse_chern(opts.chern), render));
    } else if (*frontier) {
      emit_record(opts, frontier_record(Rational::parse(opts.mu), render));
    } else if (*series_cmd) {
      emit_record(opts, series_record(epsilon(Dyadic::parse(opts.dyadic)), opts.n_min, opts.n_max, render));
    } else if (*tile) {
      if (opts.depth > kTileMaxDepth) {
        throw PreconditionError("tile depth is capped at " + std::to_string(kTileMaxDepth));
      }
      emit(opts, opts.format == "csv" ? tile_csv(opts.depth) : tile_svg(opts.depth, render));
    } else if (*selfcheck) {
      run_selfcheck_command(opts);
    }
  } catch (const CheckFailed& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return 2;
  } catch (const DepthExhausted& e) {
    std::cerr << "depth exhausted: " << e.what() << '\n';
    return 2;
  } catch (const NotCovered& e) {
    std::cerr << "not covered: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
