#pragma once

#include <optional>
#include <string>
#include <vector>

#include "odepoly/bipoly.hpp"
#include "odepoly/diffpoly.hpp"
#include "odepoly/polygon.hpp"

namespace odepoly {

enum class RiccatiVerdict { AllSingleValuedRational, AtMostOneTranscendental, AtMostTwoTranscendental, RiccatiAtMostThree };

std::string to_string(RiccatiVerdict v);

struct RiccatiClass {
  /// Distinct roots of Q in w over the algebraic closure of Q(z).
  int distinct_root_count = 0;
  RiccatiVerdict verdict = RiccatiVerdict::RiccatiAtMostThree;
  bool is_plain_riccati = false;
  /// Present when the equation is not a plain Riccati equation.
  std::string malmquist_note;
};

/// w' = P(w, z) / Q(w, z), with P and Q in (u = z, v = w). Raises
/// ZeroDenominator for Q = 0 and NotReduced when P and Q share a factor
/// involving w.
RiccatiClass riccati_classify(const BiPoly& p, const BiPoly& q);

enum class BinomialVerdict { Linear, FormEq7, FormEq8, MovableSingularities };

std::string to_string(BinomialVerdict v);

struct BinomialClass {
  int m = 1;
  BinomialVerdict verdict = BinomialVerdict::MovableSingularities;
  /// deg_y R <= 2m.
  bool yosida_ok = false;
  /// R = chi(x) * (y - a)^{m-1} or chi(x) * (y - a)(y - b).
  std::optional<XPoly> chi;
  std::vector<Complex> roots;
  std::string note;
};

/// (y')^m = R with R = numerator / denominator, both in (u = x, v = y).
/// Raises InvalidM for m < 1 and ZeroDenominator for a zero denominator.
BinomialClass binomial_classify(int m, const BiPoly& numerator, const BiPoly& denominator = BiPoly(XPoly(Rat(1))));

struct PropertyIWitness {
  /// Edge with a negative integer slope, or the vertex carrying the root.
  Face face;
  Rat value;
  bool from_vertex = false;
  /// Root found at an end vertex, compared against a one-sided interval.
  bool one_sided = false;
};

struct PropertyIReport {
  bool holds = false;
  std::optional<PropertyIWitness> witness;
  LatticePolygon polygon;
  /// Vertices (point indices) whose characteristic polynomial was scanned.
  std::vector<int> checked_vertices;
};

/// Petrovic's polygon condition for elliptic solutions of an autonomous
/// equation. Raises NotAutonomous.
PropertyIReport property_I_check(const DiffPoly& f);

struct FirstIntegralReport {
  PropertyIReport psi;
  /// True when psi lacks Property I, so R = const along double-periodic
  /// solutions of f.
  bool first_integral = false;
  std::string text;
};

/// f and the user-supplied equation psi satisfied by z = R(y, ..., y^(q)),
/// described by r_description.
FirstIntegralReport partial_first_integral_report(const DiffPoly& f, const DiffPoly& psi,
                                                  const std::string& r_description);

}  // namespace odepoly
