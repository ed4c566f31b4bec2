#pragma once

#include <string>
#include <string_view>

#include "odepoly/diffpoly.hpp"

namespace odepoly::cli {

/// Parses an equation such as "x*y'^3 + y*y' - 1 = 0". "lhs = rhs" becomes
/// lhs - rhs. Derivatives are written y', y'', y''' or y^(k); x is the only
/// independent variable and constants are p or p/q. A parenthesized group
/// may carry a power. '#' starts a comment running to the end of the line.
///
/// Raises ParseError (with line and column) on malformed text and
/// EmptyEquation when the text is blank or everything cancels.
DiffPoly parse_equation(std::string_view text);

enum class Provenance { Inline, File };

struct EquationText {
  std::string source;
  DiffPoly equation;
  Provenance provenance = Provenance::Inline;
};

/// Treats `arg` as a path when a regular file of that name exists, otherwise
/// as equation text.
EquationText load_equation(const std::string& arg);

}  // namespace odepoly::cli
