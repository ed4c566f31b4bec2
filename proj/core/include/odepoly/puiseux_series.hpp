#pragma once

#include <string>
#include <vector>

#include "odepoly/complex.hpp"

namespace odepoly {

struct SeriesTerm {
  Rat exponent;
  Complex coeff;
};

enum class ResonanceStatus { FreeParameter, Obstructed };

struct Resonance {
  Rat exponent;
  ResonanceStatus status = ResonanceStatus::FreeParameter;
  /// Parameter name c_k for coefficient index k, e.g. "c_6" for the
  /// exponent lambda + 6/q.
  std::string name;
  /// Value used for the parameter (free parameters only).
  Complex value;
};

/// Truncated formal solution sum c_k (x - x0)^{e_k}. Only nonzero terms are
/// stored; exponents lie in lambda + (1/ramification) Z>=0.
struct PuiseuxSeries {
  Rat x0;
  int ramification = 1;
  std::vector<SeriesTerm> terms;
  std::vector<Resonance> resonances;
  /// The residual f(x, truncation) has (x - x0)-valuation at least this.
  Rat certified_residual;
  /// Number of coefficient indices solved (c_0 .. c_{N-1}).
  int solved_indices = 0;
};

}  // namespace odepoly
