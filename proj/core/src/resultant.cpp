#include "odepoly/resultant.hpp"

namespace odepoly {

XPoly resultant(const BiPoly& p, const BiPoly& q, Var var) {
  if (var == Var::V) return sylvester_resultant(p, q);
  return sylvester_resultant(swap_vars(p), swap_vars(q));
}

XPoly discriminant(const BiPoly& f, Var var) {
  const BiPoly g = var == Var::V ? f : swap_vars(f);
  return sylvester_resultant(g, g.derivative());
}

}  // namespace odepoly
