#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "odepoly/diffpoly.hpp"
#include "odepoly/polygon.hpp"
#include "odepoly/series.hpp"

namespace odepoly::cli {

enum class ReportFormat { Text, Json, Svg };

struct AnalyzeOptions {
  /// Equation text or path to a file holding it.
  std::string input;
  BasePoint point;
  Flavor polygon = Flavor::Petrovic;
  /// Term budget; no series section when absent.
  std::optional<int> series;
  BranchSide side = BranchSide::All;
  /// Any of fuchs, riccati, binomial, elliptic, convergence.
  std::vector<std::string> checks;
  ReportFormat format = ReportFormat::Text;
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
  /// Transformed equation for the partial first integral report.
  std::optional<std::string> psi;
  std::string integral = "R";
};

enum ExitCode : int { kExitOk = 0, kExitParse = 2, kExitPrecondition = 3, kExitNumeric = 4 };

struct AnalyzeResult {
  int exit_code = kExitOk;
  /// Rendered report in the requested format; empty on failure.
  std::string output;
  /// "<ErrorCode>: message" on failure.
  std::string error;
  nlohmann::json report;
};

/// Full machine-readable report of `f`. Raises odepoly::Error.
nlohmann::json build_report(const DiffPoly& f, const AnalyzeOptions& options);

/// Human-readable rendering of a report built by build_report.
std::string text_report(const nlohmann::json& report, const LatticePolygon& polygon);

/// Parses the input, builds the report and renders it; never throws.
AnalyzeResult analyze(const AnalyzeOptions& options);

/// Parses "generic" or a rational.
BasePoint parse_point(const std::string& text);

std::string version();

}  // namespace odepoly::cli
