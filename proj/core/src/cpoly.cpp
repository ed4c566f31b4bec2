#include "odepoly/cpoly.hpp"

#include <cmath>
#include <sstream>

namespace odepoly {

CPoly to_cpoly(const XPoly& p) {
  return p.map([](const Rat& c) { return Complex(c); });
}

CBiPoly to_cbipoly(const BiPoly& p) {
  return p.map([](const XPoly& c) { return to_cpoly(c); });
}

bool to_xpoly(const CPoly& p, XPoly& out) {
  std::vector<Rat> c;
  c.reserve(p.coeffs().size());
  for (const auto& k : p.coeffs()) {
    if (!k.is_exact_real()) return false;
    c.push_back(k.re());
  }
  out = XPoly(std::move(c));
  return true;
}

Complex eval(const XPoly& p, const Complex& at) { return p.eval(at); }

double magnitude_at(const CPoly& p, double abs_z) {
  double s = 0;
  double zp = 1;
  for (const auto& c : p.coeffs()) {
    s += (c.abs() + c.error()) * zp;
    zp *= abs_z;
  }
  return s;
}

bool is_exact(const CPoly& p) {
  for (const auto& c : p.coeffs()) {
    if (!c.is_exact()) return false;
  }
  return true;
}

std::string to_string(const CPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = p.degree(); e >= 0; --e) {
    const Complex c = p.coeff(e);
    if (c.is_zero() && c.is_exact()) continue;
    if (!first) os << " + ";
    first = false;
    const bool simple = c.is_exact_real();
    if (simple) {
      os << c.str();
    } else {
      os << "(" << c.str() << ")";
    }
    if (e > 0) os << "*" << var;
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace odepoly
