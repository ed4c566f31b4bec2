#pragma once

#include <cstdint>
#include <random>

#include "odepoly/diffpoly.hpp"

namespace odepoly::cli {

struct RandomEquationShape {
  int max_order = 3;
  int max_monomials = 6;
  int max_coeff_degree = 3;
  int max_exponent = 3;
  int coeff_bound = 9;
};

/// Draws from mt19937_64 with plain modular reduction so the stream is the
/// same on every standard library.
long draw(std::mt19937_64& rng, long lo, long hi);
Rat draw_rational(std::mt19937_64& rng, long num_bound, long den_bound);
XPoly draw_xpoly(std::mt19937_64& rng, int max_degree, long bound, bool nonzero);

/// Deterministic random equation; the order is exactly the drawn order.
DiffPoly random_equation(std::uint64_t seed, const RandomEquationShape& shape = {});

}  // namespace odepoly::cli
