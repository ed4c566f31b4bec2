#include "odepoly/bipoly.hpp"

#include <sstream>
#include <vector>

namespace odepoly {

BiPoly bi_term(const Rat& c, int u_exp, int v_exp) {
  return BiPoly::monomial(XPoly::monomial(c, u_exp), v_exp);
}

BiPoly bi_from_v(const XPoly& p) { return p.map([](const Rat& c) { return XPoly(c); }); }

Rat bi_coeff(const BiPoly& p, int u_exp, int v_exp) { return p.coeff(v_exp).coeff(u_exp); }

int deg_u(const BiPoly& p) {
  int d = -1;
  for (const auto& c : p.coeffs()) d = std::max(d, c.degree());
  return d;
}

BiPoly swap_vars(const BiPoly& p) {
  const int du = deg_u(p);
  if (du < 0) return {};
  std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(du) + 1,
                                     std::vector<Rat>(static_cast<std::size_t>(p.degree()) + 1));
  for (int j = 0; j <= p.degree(); ++j) {
    const XPoly& c = p.coeffs()[static_cast<std::size_t>(j)];
    for (int i = 0; i <= c.degree(); ++i) {
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c.coeffs()[static_cast<std::size_t>(i)];
    }
  }
  std::vector<XPoly> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.emplace_back(std::move(r));
  return BiPoly(std::move(out));
}

BiPoly diff_u(const BiPoly& p) { return p.map([](const XPoly& c) { return c.derivative(); }); }

XPoly eval_u(const BiPoly& p, const Rat& a) { return p.map([&a](const XPoly& c) { return c.eval(a); }); }

XPoly eval_v(const BiPoly& p, const Rat& b) { return p.eval(XPoly(b)); }

Rat eval(const BiPoly& p, const Rat& a, const Rat& b) { return eval_u(p, a).eval(b); }

BiPoly shift(const BiPoly& p, const Rat& a, const Rat& b) {
  BiPoly r = a.is_zero() ? p : p.map([&a](const XPoly& c) { return c.shift(a); });
  return r.shift(XPoly(b));
}

XPoly content_v(const BiPoly& p) {
  XPoly g;
  for (const auto& c : p.coeffs()) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

BiPoly primitive_v(const BiPoly& p) {
  if (p.is_zero()) return p;
  const XPoly c = content_v(p);
  return p.map([&c](const XPoly& k) { return exact_div(k, c); });
}

namespace {

BiPoly normalize_bi(const BiPoly& p) {
  if (p.is_zero()) return p;
  const Rat l = p.lc().lc();
  return p * XPoly(l.inverse());
}

// Primitive part with respect to v, with rational content removed too, to
// keep pseudo-remainder sequences small.
BiPoly pp_small(const BiPoly& p) {
  BiPoly q = primitive_v(p);
  mpz_class num = 0;
  mpz_class den = 1;
  for (const auto& c : q.coeffs()) {
    for (const auto& r : c.coeffs()) {
      if (r.is_zero()) continue;
      num = gcd(num, r.numerator());
      den = lcm(den, r.denominator());
    }
  }
  if (num == 0) return q;
  return q * XPoly(Rat(den, num));
}

}  // namespace

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return normalize_bi(b);
  if (b.is_zero()) return normalize_bi(a);
  const XPoly cg = gcd(content_v(a), content_v(b));
  BiPoly x = pp_small(a);
  BiPoly y = pp_small(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree() == 0) {
      y = BiPoly(XPoly(Rat(1)));
      x = y;
      break;
    }
    BiPoly r = prem(x, y);
    x = std::move(y);
    y = r.is_zero() ? BiPoly() : pp_small(r);
  }
  return normalize_bi(pp_small(x) * cg);
}

std::pair<BiPoly, int> squarefree_distinct(const BiPoly& p, Var var) {
  if (p.is_zero()) raise(ErrorCode::ZeroPolynomial, "squarefree_distinct of the zero polynomial");
  const BiPoly q = var == Var::V ? p : swap_vars(p);
  const BiPoly pp = primitive_v(q);
  BiPoly s;
  if (pp.degree() <= 0) {
    s = BiPoly(XPoly(Rat(1)));
  } else {
    const BiPoly g = gcd(pp, pp.derivative());
    s = normalize_bi(exact_div(pp, g));
  }
  const int count = s.degree();
  return {var == Var::V ? s : swap_vars(s), count};
}

std::string to_string(const BiPoly& p, std::string_view u, std::string_view v) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Graded by total degree, descending; within a degree by v-degree.
  int top = 0;
  for (int j = 0; j <= p.degree(); ++j) top = std::max(top, j + p.coeffs()[static_cast<std::size_t>(j)].degree());
  for (int d = top; d >= 0; --d) {
    for (int j = std::min(d, p.degree()); j >= 0; --j) {
      const Rat c = bi_coeff(p, d - j, j);
      if (c.is_zero()) continue;
      const int i = d - j;
      const bool negative = c.sign() < 0;
      if (first) {
        if (negative) os << "-";
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      const Rat mag = c.abs();
      std::string mono;
      auto add = [&mono](std::string_view name, int e) {
        if (e == 0) return;
        if (!mono.empty()) mono += "*";
        mono += name;
        if (e > 1) mono += "^" + std::to_string(e);
      };
      add(u, i);
      add(v, j);
      if (mono.empty()) {
        os << mag.str();
      } else {
        if (!mag.is_one()) os << mag.str() << "*";
        os << mono;
      }
    }
  }
  return os.str();
}

}  // namespace odepoly
