#include "odepoly/singularities.hpp"

#include <algorithm>

namespace odepoly {
namespace {

// True when the edge polynomial (in v = c, coefficients in x0) has a root
// c != 0: after dividing out the power of c it still depends on c.
bool has_nonzero_root(const BiPoly& eq, const BasePoint& x0) {
  if (x0) {
    const XPoly p = eval_u(eq, *x0);
    return !p.is_zero() && p.degree() > p.valuation();
  }
  return !eq.is_zero() && eq.degree() > eq.valuation();
}

}  // namespace

MovableReport movable_report(const DiffPoly& f, const BasePoint& x0) {
  MovableReport r;
  r.polygon = petrovic_polygon(f, x0);
  r.candidates_only = f.order() != 1;
  for (const Face* e : r.polygon.edges()) {
    if (e->side != Side::Left && e->side != Side::Right) continue;
    if (!has_nonzero_root(edge_equation(f, r.polygon, *e), x0)) {
      r.candidate_only.push_back(*e);
      continue;
    }
    if (e->side == Side::Left) {
      r.movable_zero_orders.push_back(*e->slope);
    } else {
      r.movable_pole_orders.push_back(-*e->slope);
    }
  }
  std::sort(r.movable_zero_orders.begin(), r.movable_zero_orders.end());
  std::sort(r.movable_pole_orders.begin(), r.movable_pole_orders.end());
  r.has_movable_zeros = !r.movable_zero_orders.empty();
  r.has_movable_poles = !r.movable_pole_orders.empty();
  if (r.candidates_only) {
    r.notes.emplace_back("order " + std::to_string(f.order()) +
                         ": slanted edges give candidate orders only, not a classification");
  } else if (!r.has_movable_poles) {
    r.notes.emplace_back("no right-slanted edge: poles of the general solution are fixed, and finitely many");
  }
  if (!r.candidates_only && !r.has_movable_zeros) {
    r.notes.emplace_back("no left-slanted edge: zeros of the general solution are fixed");
  }
  return r;
}

ConvergenceFlag fine_convergence_check(const DiffPoly& f) {
  ConvergenceFlag flag;
  const auto ms = f.monomials();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (int j = 0; j <= f.order(); ++j) {
      if (ms[i].exponent(j) <= 0) {
        flag.offending_monomial = static_cast<int>(i);
        return flag;
      }
    }
  }
  flag.all_terms_full = true;
  return flag;
}

}  // namespace odepoly
