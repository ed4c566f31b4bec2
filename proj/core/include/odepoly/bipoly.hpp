#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "odepoly/xpoly.hpp"

namespace odepoly {

/// Polynomial in two variables (u, v) with rational coefficients, stored
/// recursively as a polynomial in v whose coefficients are polynomials in u.
/// coeffs()[j].coeff(i) is the coefficient of u^i v^j.
using BiPoly = Poly<XPoly>;

BiPoly bi_term(const Rat& c, int u_exp, int v_exp);
inline BiPoly bi_u() { return bi_term(Rat(1), 1, 0); }
inline BiPoly bi_v() { return bi_term(Rat(1), 0, 1); }
/// Embeds a polynomial in u (v-degree 0).
inline BiPoly bi_from_u(const XPoly& p) { return BiPoly(p); }
/// Embeds a polynomial in v with constant coefficients.
BiPoly bi_from_v(const XPoly& p);

Rat bi_coeff(const BiPoly& p, int u_exp, int v_exp);
int deg_u(const BiPoly& p);
inline int deg_v(const BiPoly& p) { return p.degree(); }

/// p(u, v) -> p(v, u).
BiPoly swap_vars(const BiPoly& p);
BiPoly diff_u(const BiPoly& p);
inline BiPoly diff_v(const BiPoly& p) { return p.derivative(); }

/// p(a, v) as a polynomial in v.
XPoly eval_u(const BiPoly& p, const Rat& a);
/// p(u, b) as a polynomial in u.
XPoly eval_v(const BiPoly& p, const Rat& b);
Rat eval(const BiPoly& p, const Rat& a, const Rat& b);

/// p(u + a, v + b).
BiPoly shift(const BiPoly& p, const Rat& a, const Rat& b);

/// Content with respect to v (monic gcd of the u-coefficients) and the
/// corresponding primitive part.
XPoly content_v(const BiPoly& p);
BiPoly primitive_v(const BiPoly& p);

/// Greatest common divisor over Q[u][v], normalized so the leading
/// coefficient of the leading u-coefficient is 1.
BiPoly gcd(const BiPoly& a, const BiPoly& b);

enum class Var { U, V };

/// Squarefree part with respect to `var` after removing content in the
/// other variable, together with its degree in `var` (the number of
/// distinct roots over the algebraic closure of the coefficient field).
std::pair<BiPoly, int> squarefree_distinct(const BiPoly& p, Var var);

std::string to_string(const BiPoly& p, std::string_view u = "u", std::string_view v = "v");

}  // namespace odepoly
