#pragma once

#include <optional>
#include <string>
#include <vector>

#include "odepoly/diffpoly.hpp"
#include "odepoly/polygon.hpp"

namespace odepoly {

struct MovableReport {
  LatticePolygon polygon;
  /// Slopes of left-slanted edges whose edge equation has a nonzero root.
  std::vector<Rat> movable_zero_orders;
  /// Negated slopes of right-slanted edges with a nonzero edge-equation root.
  std::vector<Rat> movable_pole_orders;
  bool has_movable_zeros = false;
  bool has_movable_poles = false;
  /// Slanted edges whose edge equation has no nonzero root.
  std::vector<Face> candidate_only;
  /// Set for equations of order other than one, where the polygon only
  /// yields candidates.
  bool candidates_only = false;
  std::vector<std::string> notes;
};

/// Movable zeros and poles read off the Petrovic polygon at x0 (generic when
/// empty).
MovableReport movable_report(const DiffPoly& f, const BasePoint& x0 = std::nullopt);

struct ConvergenceFlag {
  bool all_terms_full = false;
  /// First monomial (canonical order) missing some derivative.
  std::optional<int> offending_monomial;
};

/// True when every monomial contains y and each of its derivatives up to
/// the order of the equation.
ConvergenceFlag fine_convergence_check(const DiffPoly& f);

}  // namespace odepoly
