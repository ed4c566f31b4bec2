#include "odepoly/cli/random_equation.hpp"

namespace odepoly::cli {

long draw(std::mt19937_64& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng() % span);
}

Rat draw_rational(std::mt19937_64& rng, long num_bound, long den_bound) {
  return Rat(draw(rng, -num_bound, num_bound), draw(rng, 1, den_bound));
}

XPoly draw_xpoly(std::mt19937_64& rng, int max_degree, long bound, bool nonzero) {
  for (;;) {
    const int deg = static_cast<int>(draw(rng, 0, max_degree));
    std::vector<Rat> c(static_cast<std::size_t>(deg) + 1);
    for (auto& r : c) r = Rat(draw(rng, -bound, bound));
    XPoly p(std::move(c));
    if (!nonzero || !p.is_zero()) return p;
  }
}

DiffPoly random_equation(std::uint64_t seed, const RandomEquationShape& shape) {
  std::mt19937_64 rng(seed);
  const int order = static_cast<int>(draw(rng, 1, shape.max_order));
  for (;;) {
    const int count = static_cast<int>(draw(rng, 2, shape.max_monomials));
    std::vector<DiffMonomial> raw;
    for (int i = 0; i < count; ++i) {
      DiffMonomial m;
      m.coeff = draw_xpoly(rng, shape.max_coeff_degree, shape.coeff_bound, true);
      m.exponents.resize(static_cast<std::size_t>(order) + 1);
      for (auto& e : m.exponents) e = draw(rng, 0, 1) ? static_cast<int>(draw(rng, 0, shape.max_exponent)) : 0;
      raw.push_back(std::move(m));
    }
    // Guarantee the drawn order actually occurs.
    raw.front().exponents.back() = std::max(1, raw.front().exponents.back());
    try {
      const DiffPoly f = DiffPoly::normalize(raw);
      if (f.order() == order && f.size() >= 2) return f;
    } catch (const std::exception&) {
    }
  }
}

}  // namespace odepoly::cli
