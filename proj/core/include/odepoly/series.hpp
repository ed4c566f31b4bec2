#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "odepoly/diffpoly.hpp"
#include "odepoly/polygon.hpp"
#include "odepoly/puiseux_series.hpp"

namespace odepoly {

enum class BranchSide { Zeros, Poles, All };
enum class BranchOrigin { EdgeEquation, CharacteristicRoot };

struct Branch {
  Face face;
  /// Exact for edges and rational characteristic roots.
  Complex lambda;
  /// Nonzero leading coefficients with their multiplicities as roots of the
  /// edge equation. Empty for vertex branches (c0 is unconstrained) and at a
  /// generic base point, or when the edge equation vanishes identically.
  std::vector<Complex> c0;
  std::vector<int> c0_multiplicity;
  BranchOrigin origin = BranchOrigin::EdgeEquation;
  /// Edge equation in (x0, c) or characteristic polynomial in (x0, lambda);
  /// free of x0 at a concrete base point.
  BiPoly equation;
  /// Complex root whose real part equals a slope of the adjacent edges.
  bool slope_coincidence = false;

  bool rational() const { return lambda.is_exact_real(); }
};

/// Polygon used by the series engine at a concrete base point: points
/// (M_i, N_i - ord_{x0} phi_i), so a vanishing coefficient only lowers its
/// point instead of being rejected.
LatticePolygon effective_polygon(const DiffPoly& f, const Rat& x0);

/// Leading terms c0 (x - x0)^lambda of solutions at x0: one branch per
/// slanted edge and per vertex root of the characteristic polynomial.
/// Raises SingularBasePoint when a coefficient contributing to one of the
/// selected faces vanishes at x0.
std::vector<Branch> leading_branches(const DiffPoly& f, const BasePoint& x0, BranchSide side);

/// Values for free resonance parameters, keyed by name ("c_4").
using ResonanceValues = std::map<std::string, Complex>;

/// Undetermined coefficients c_0 .. c_{n-1} of
/// y = sum c_k (x - x0)^{lambda + k/q}, q the denominator of lambda.
/// Raises ObstructedResonance when a coefficient cannot be solved for and
/// InvalidBranch when c0 does not solve the leading balance.
PuiseuxSeries extend_series(const DiffPoly& f, const Rat& lambda, const Complex& c0, const Rat& x0, int n,
                            const ResonanceValues& values = {});

/// y = c0 + u, the equation for u.
DiffPoly shift_and_recurse(const DiffPoly& f, const Rat& c0);

}  // namespace odepoly
