#pragma once

#include <vector>

#include "odepoly/cpoly.hpp"

namespace odepoly {

enum class RootMode { ExactRational, NegativeIntegers, Numeric };

struct RootOptions {
  RootMode mode = RootMode::Numeric;
  /// Relative residual bound |p(z)| / sum |a_i||z|^i for numeric roots.
  double tolerance = 1e-9;
  int max_iterations = 500;
};

struct Root {
  Complex value;
  int multiplicity = 1;
  /// Relative residual at the returned value; 0 for exact roots.
  double residual = 0.0;
};

/// Roots of a rational polynomial. ExactRational and NegativeIntegers return
/// every root of that kind, exactly, with multiplicities. Numeric returns all
/// complex roots: rational ones (and Gaussian-rational roots of quadratic
/// factors) exactly, the rest as tagged approximations.
std::vector<Root> root_find(const XPoly& p, const RootOptions& options = {});

/// Numeric roots of a polynomial with tagged complex coefficients. Exact
/// real inputs are delegated to the rational solver. Nearly coincident
/// approximations whose error discs overlap are merged into one root with
/// the combined multiplicity.
std::vector<Root> root_find(const CPoly& p, const RootOptions& options = {});

}  // namespace odepoly
