#include "odepoly/xpoly.hpp"

#include <sstream>

namespace odepoly {

namespace {

void append_term(std::ostringstream& os, bool first, const Rat& c, int e, std::string_view var) {
  const bool negative = c.sign() < 0;
  const Rat mag = c.abs();
  if (first) {
    if (negative) os << "-";
  } else {
    os << (negative ? " - " : " + ");
  }
  if (e == 0) {
    os << mag.str();
    return;
  }
  if (!mag.is_one()) os << mag.str() << "*";
  os << var;
  if (e > 1) os << "^" << e;
}

}  // namespace

std::string to_string(const XPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = p.degree(); e >= 0; --e) {
    const Rat c = p.coeff(e);
    if (c.is_zero()) continue;
    append_term(os, first, c, e, var);
    first = false;
  }
  return os.str();
}

XPoly monic(const XPoly& p) {
  if (p.is_zero()) return p;
  return p * p.lc().inverse();
}

XPoly gcd(const XPoly& a, const XPoly& b) {
  XPoly x = a;
  XPoly y = b;
  while (!y.is_zero()) {
    XPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

XPoly squarefree_part(const XPoly& p) {
  if (p.is_zero()) raise(ErrorCode::ZeroPolynomial, "squarefree part of the zero polynomial");
  if (p.degree() == 0) return XPoly(Rat(1));
  return monic(exact_div(p, gcd(p, p.derivative())));
}

Rat content(const XPoly& p) {
  if (p.is_zero()) return Rat(1);
  mpz_class num = 0;
  mpz_class den = 1;
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    num = gcd(num, c.numerator());
    den = lcm(den, c.denominator());
  }
  Rat r(num, den);
  return p.lc().sign() < 0 ? -r : r;
}

XPoly primitive(const XPoly& p) {
  if (p.is_zero()) return p;
  return p * content(p).inverse();
}

XPoly compose(const XPoly& p, const XPoly& q) {
  XPoly r;
  for (int e = p.degree(); e >= 0; --e) r = r * q + XPoly(p.coeff(e));
  return r;
}

std::vector<std::pair<XPoly, int>> squarefree_factorization(const XPoly& p) {
  if (p.is_zero()) raise(ErrorCode::ZeroPolynomial, "squarefree factorization of the zero polynomial");
  std::vector<std::pair<XPoly, int>> out;
  if (p.degree() <= 0) return out;
  const XPoly dp = p.derivative();
  const XPoly a0 = gcd(p, dp);
  XPoly b = exact_div(p, a0);
  XPoly d = exact_div(dp, a0) - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    const XPoly a = gcd(b, d);
    b = exact_div(b, a);
    const XPoly c = exact_div(d, a);
    d = c - b.derivative();
    if (a.degree() > 0) out.emplace_back(monic(a), i);
  }
  return out;
}

std::pair<XPoly, int> squarefree_distinct(const XPoly& p) {
  XPoly s = squarefree_part(p);
  const int d = s.degree();
  return {std::move(s), d};
}

}  // namespace odepoly
