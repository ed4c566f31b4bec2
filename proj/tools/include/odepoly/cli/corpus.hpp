#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "odepoly/cli/analyze.hpp"

namespace odepoly::cli {

/// A fixture file corpus/fixtures/<name>.json:
///   {"equation": "...", "point": "1", "polygon": "fine", "series": 5,
///    "side": "poles", "checks": ["fuchs"], "seed": 7, "tol": 1e-9,
///    "psi": "...", "integral": "..."}
/// "random_seed": n replaces "equation" with random_equation(n).
struct Fixture {
  std::string name;
  AnalyzeOptions options;
};

Fixture load_fixture(const std::filesystem::path& path);

/// What the golden file stores for an analysis: the JSON report, or
/// {"error": {"exit_code", "message"}}.
nlohmann::json golden_value(const AnalyzeResult& r);

enum class FixtureStatus { Match, Diff, Missing, Updated };

struct FixtureOutcome {
  std::string name;
  FixtureStatus status = FixtureStatus::Match;
  /// First differing line for Diff.
  std::string detail;
};

struct CorpusOptions {
  std::filesystem::path dir;
  /// fnmatch pattern over fixture names; empty matches all.
  std::string filter;
  bool update = false;
  unsigned jobs = 0;
};

/// Runs every matching fixture concurrently and compares against
/// dir/golden/<name>.json. Outcomes are sorted by name.
std::vector<FixtureOutcome> run_corpus(const CorpusOptions& options);

std::string to_string(FixtureStatus s);

}  // namespace odepoly::cli
