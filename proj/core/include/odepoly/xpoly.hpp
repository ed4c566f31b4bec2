#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "odepoly/poly.hpp"

namespace odepoly {

/// Univariate polynomial with exact rational coefficients (the coefficient
/// ring of equations, and the home of characteristic polynomials).
using XPoly = Poly<Rat>;

/// Human-readable form, highest power first, e.g. "3*x^2 - x + 1/2".
std::string to_string(const XPoly& p, std::string_view var = "x");

/// Monic normalization; the zero polynomial is returned unchanged.
XPoly monic(const XPoly& p);

/// Monic greatest common divisor; gcd(0, 0) = 0.
XPoly gcd(const XPoly& a, const XPoly& b);

/// Monic squarefree part p / gcd(p, p').
XPoly squarefree_part(const XPoly& p);

/// Positive rational c such that p / c has coprime integer coefficients;
/// the sign is chosen so the primitive part has a positive leading term.
Rat content(const XPoly& p);
XPoly primitive(const XPoly& p);

/// Exact polynomial composition p(q(x)).
XPoly compose(const XPoly& p, const XPoly& q);

/// Yun decomposition: monic squarefree, pairwise coprime factors f_i with
/// p = c * prod f_i^i. Constant factors are omitted.
std::vector<std::pair<XPoly, int>> squarefree_factorization(const XPoly& p);

/// Number of distinct complex roots together with the squarefree part.
std::pair<XPoly, int> squarefree_distinct(const XPoly& p);

}  // namespace odepoly
