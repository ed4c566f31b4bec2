#pragma once

#include <string>
#include <string_view>

#include "odepoly/bipoly.hpp"
#include "odepoly/complex.hpp"

namespace odepoly {

/// Univariate polynomial with tagged complex coefficients.
using CPoly = Poly<Complex>;
/// Bivariate counterpart of BiPoly: a polynomial in v with CPoly
/// coefficients in u.
using CBiPoly = Poly<CPoly>;

CPoly to_cpoly(const XPoly& p);
CBiPoly to_cbipoly(const BiPoly& p);

/// Converts back when every coefficient is an exact real rational.
bool to_xpoly(const CPoly& p, XPoly& out);

Complex eval(const XPoly& p, const Complex& at);

/// Sum of |a_i| |z|^i, the natural scale for relative residuals.
double magnitude_at(const CPoly& p, double abs_z);

/// True when every coefficient is exact.
bool is_exact(const CPoly& p);

std::string to_string(const CPoly& p, std::string_view var = "x");

}  // namespace odepoly
