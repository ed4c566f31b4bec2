#pragma once

#include <optional>
#include <vector>

#include "odepoly/cpoly.hpp"

namespace odepoly {

struct PuiseuxTerm {
  Rat exponent;
  Complex coeff;
};

/// One branch cycle v(u) of a plane curve F(u, v) = 0 near u = 0,
/// represented by a single member of the cycle. Exponents are in units of u
/// and lie in leading_exponent + (1/ramification) * Z>=0.
struct PuiseuxBranch {
  int ramification = 1;
  /// Empty for the zero branch v = 0.
  std::vector<PuiseuxTerm> terms;
  /// True when the expansion is exact: substituting the listed terms
  /// annihilates F identically.
  bool exact_solution = false;
  /// Lower bound on the u-valuation of F(u, sum of listed terms); absent
  /// when exact_solution is set.
  std::optional<Rat> residual_valuation;

  bool is_zero_branch() const { return terms.empty(); }
  Rat leading_exponent() const { return terms.empty() ? Rat() : terms.front().exponent; }
};

/// Newton-Puiseux expansion of every branch of F(u, v) = 0 at u = 0, each
/// with up to max_terms terms. Ramifications sum to deg_v F.
/// Raises NoBranch when F has no v, NotSquarefree when F has a repeated
/// factor of positive v-degree, ZeroPolynomial for F = 0.
std::vector<PuiseuxBranch> newton_puiseux_branches(const BiPoly& f, int max_terms);

/// Same for tagged complex coefficients. Squarefreeness cannot be decided
/// for approximate inputs; a non-resolving cluster raises NumericFailure.
std::vector<PuiseuxBranch> newton_puiseux_branches(const CBiPoly& f, int max_terms);

/// Lower convex hull of lattice points, left to right, keeping only the
/// extreme points of each edge. Points are (x, y) pairs.
std::vector<std::pair<int, int>> lower_hull(std::vector<std::pair<int, int>> points);

}  // namespace odepoly
