#include "odepoly/series.hpp"

#include <algorithm>
#include <cmath>

#include "odepoly/errors.hpp"
#include "odepoly/roots.hpp"

namespace odepoly {

LatticePolygon effective_polygon(const DiffPoly& f, const Rat& x0) {
  const auto ms = f.monomials();
  std::vector<LatticePoint> raw;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const int l = ms[i].coeff.shift(x0).valuation();
    LatticePoint p{ms[i].total_degree(), ms[i].weight() - l, {{static_cast<int>(i), l}}, {}};
    for (int j = f.order(); j >= 0; --j) {
      const int e = ms[i].exponent(j);
      if (e == 0) continue;
      if (!p.label.empty()) p.label += "*";
      p.label += derivative_name(j);
      if (e > 1) p.label += "^" + std::to_string(e);
    }
    if (p.label.empty()) p.label = "1";
    raw.push_back(std::move(p));
  }
  return petrovic_from_points(std::move(raw));
}

namespace {

// Leading coefficient of phi_i at x0 for an effective-polygon contributor.
Rat lead(const std::vector<DiffMonomial>& shifted, const Contributor& c) {
  return shifted[static_cast<std::size_t>(c.monomial)].coeff.coeff(c.x_power);
}

void check_face(const LatticePolygon& p, const Face& face, const Rat& x0) {
  for (int i : face.members) {
    for (const auto& c : p.points[static_cast<std::size_t>(i)].contributors) {
      if (c.x_power > 0) {
        raise(ErrorCode::SingularBasePoint, "coefficient of " + p.points[static_cast<std::size_t>(i)].label +
                                                " vanishes at x0 = " + x0.str());
      }
    }
  }
}

XPoly concrete_edge_equation(const std::vector<DiffMonomial>& shifted, const LatticePolygon& p, const Face& e) {
  int m_min = p.points[static_cast<std::size_t>(e.members.front())].first;
  for (int i : e.members) m_min = std::min(m_min, p.points[static_cast<std::size_t>(i)].first);
  XPoly eq;
  for (int i : e.members) {
    const auto& pt = p.points[static_cast<std::size_t>(i)];
    for (const auto& c : pt.contributors) {
      const Rat a = multiplier(shifted[static_cast<std::size_t>(c.monomial)].exponents).eval(*e.slope);
      eq += XPoly::monomial(a * lead(shifted, c), pt.first - m_min);
    }
  }
  return eq;
}

XPoly concrete_characteristic(const std::vector<DiffMonomial>& shifted, const LatticePoint& pt) {
  XPoly cp;
  for (const auto& c : pt.contributors) {
    cp += multiplier(shifted[static_cast<std::size_t>(c.monomial)].exponents) * lead(shifted, c);
  }
  return cp;
}

bool wanted(BranchSide side, int sign) {
  switch (side) {
    case BranchSide::Zeros:
      return sign > 0;
    case BranchSide::Poles:
      return sign < 0;
    case BranchSide::All:
      return true;
  }
  return false;
}

int real_sign(const Complex& z) {
  if (z.is_exact()) return z.re().sign();
  const double re = z.value().real();
  if (std::abs(re) <= z.error()) return 0;
  return re > 0 ? 1 : -1;
}

// Position of Re z relative to a slope: -1 below, 0 within the error, 1 above.
int compare_real(const Complex& z, const Rat& s) {
  if (z.is_exact()) {
    const Rat d = z.re() - s;
    return d.sign();
  }
  const double d = z.value().real() - s.to_double();
  if (std::abs(d) <= z.error() + 1e-12 * std::max(1.0, std::abs(s.to_double()))) return 0;
  return d > 0 ? 1 : -1;
}

void add_edge_branch(const LatticePolygon& p, const Face& e, const DiffPoly& f, const BasePoint& x0,
                     const std::vector<DiffMonomial>& shifted, std::vector<Branch>& out) {
  Branch b;
  b.face = e;
  b.lambda = Complex(*e.slope);
  b.origin = BranchOrigin::EdgeEquation;
  if (!x0) {
    b.equation = edge_equation(f, p, e);
    out.push_back(std::move(b));
    return;
  }
  check_face(p, e, *x0);
  const XPoly eq = concrete_edge_equation(shifted, p, e);
  b.equation = bi_from_v(eq);
  if (eq.is_zero()) {
    // Every c0 balances the face; the leading coefficient stays free.
    out.push_back(std::move(b));
    return;
  }
  std::vector<Root> roots = root_find(eq);
  for (const Root& r : roots) {
    if (r.value.is_zero()) continue;
    b.c0.push_back(r.value);
    b.c0_multiplicity.push_back(r.multiplicity);
  }
  if (!b.c0.empty()) out.push_back(std::move(b));
}

}  // namespace

std::vector<Branch> leading_branches(const DiffPoly& f, const BasePoint& x0, BranchSide side) {
  const LatticePolygon p = x0 ? effective_polygon(f, *x0) : petrovic_polygon(f);
  std::vector<DiffMonomial> shifted;
  if (x0) shifted = shift(f, *x0).monomials();
  std::vector<Branch> out;
  for (std::size_t k = 0; k < p.faces.size(); ++k) {
    const Face& face = p.faces[k];
    if (face.kind == FaceKind::Edge) {
      if (wanted(side, face.slope->sign())) add_edge_branch(p, face, f, x0, shifted, out);
      continue;
    }
    // Vertex: roots with Re lambda between the slopes of its two edges.
    const Face* left = k > 0 ? &p.faces[k - 1] : nullptr;
    const Face* right = k + 1 < p.faces.size() ? &p.faces[k + 1] : nullptr;
    const auto& pt = p.points[static_cast<std::size_t>(face.endpoints[0])];
    XPoly cp;
    BiPoly equation;
    if (x0) {
      cp = concrete_characteristic(shifted, pt);
      equation = bi_from_v(cp);
    } else {
      equation = characteristic_polynomial(f, p, face.endpoints[0]).generic;
      // Roots are only meaningful when they do not move with x0.
      const BiPoly prim = primitive_v(equation);
      if (deg_u(prim) > 0) continue;
      cp = eval_u(prim, Rat());
    }
    if (cp.degree() <= 0) continue;
    bool checked = false;
    for (const Root& r : root_find(cp)) {
      const Complex& lambda = r.value;
      if (!wanted(side, real_sign(lambda))) continue;
      const int vs_right = right ? compare_real(lambda, *right->slope) : 1;
      const int vs_left = left ? compare_real(lambda, *left->slope) : -1;
      const bool real = lambda.is_exact_real() || (!lambda.is_exact() && std::abs(lambda.value().imag()) <= lambda.error());
      bool coincide = false;
      if (vs_right < 0 || vs_left > 0) continue;
      if (vs_right == 0 || vs_left == 0) {
        // A real root on a slope belongs to the edge.
        if (real) continue;
        coincide = true;
      }
      if (x0 && !checked) {
        check_face(p, face, *x0);
        checked = true;
      }
      Branch b;
      b.face = face;
      b.lambda = lambda;
      b.origin = BranchOrigin::CharacteristicRoot;
      b.equation = equation;
      b.slope_coincidence = coincide;
      out.push_back(std::move(b));
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Branch& a, const Branch& b) { return complex_less(a.lambda, b.lambda); });
  return out;
}

namespace {

// Falling factorial e (e - 1) ... (e - j + 1).
Rat falling(const Rat& e, int j) {
  Rat r(1);
  for (int i = 0; i < j; ++i) r *= e - Rat(i);
  return r;
}

// Online undetermined-coefficient solver. With y = s^L sum c_k s^k and
// x - x0 = s^q, every monomial is a power series in s shifted by its
// offset; partial products are kept final up to the last solved index, so
// step k costs O(k) per factor.
class Engine {
 public:
  Engine(const DiffPoly& f, const Rat& lambda, const Rat& x0) : q_(static_cast<int>(lambda.denominator().get_si())) {
    l_ = static_cast<int>((lambda * Rat(q_)).to_long());
    order_ = f.order();
    derivs_.resize(static_cast<std::size_t>(order_) + 1);
    bool first = true;
    for (const auto& m : shift(f, x0).monomials()) {
      Term t;
      for (int l = 0; l <= m.coeff.degree(); ++l) {
        if (!m.coeff.coeff(l).is_zero()) t.phi.emplace_back(q_ * l, Complex(m.coeff.coeff(l)));
      }
      for (int j = 0; j <= order_; ++j) {
        for (int e = 0; e < m.exponent(j); ++e) t.factors.push_back(j);
      }
      t.offset = l_ * m.total_degree() - q_ * m.weight();
      t.partial.resize(t.factors.size());
      const int nominal = t.offset + t.phi.front().first;
      t.singular = m.coeff.valuation() > 0;
      e0_ = first ? nominal : std::min(e0_, nominal);
      first = false;
      terms_.push_back(std::move(t));
    }
    for (const auto& t : terms_) {
      if (t.singular && t.offset + t.phi.front().first == e0_) {
        raise(ErrorCode::SingularBasePoint, "a leading coefficient vanishes at x0 = " + x0.str());
      }
    }
  }

  int q() const { return q_; }
  int e0() const { return e0_; }
  Rat exponent(int k) const { return Rat(l_ + k, q_); }

  // Sets c_k (the highest index so far) and refreshes index k of every
  // partial product.
  void set(int k, const Complex& c) {
    const Rat e = exponent(k);
    for (int j = 0; j <= order_; ++j) {
      auto& d = derivs_[static_cast<std::size_t>(j)];
      d.resize(static_cast<std::size_t>(k) + 1);
      d[static_cast<std::size_t>(k)] = c * Complex(falling(e, j));
    }
    for (auto& t : terms_) {
      for (std::size_t m = 0; m < t.factors.size(); ++m) {
        const auto& fac = derivs_[static_cast<std::size_t>(t.factors[m])];
        auto& out = t.partial[m];
        out.resize(static_cast<std::size_t>(k) + 1);
        if (m == 0) {
          out[static_cast<std::size_t>(k)] = fac[static_cast<std::size_t>(k)];
          continue;
        }
        const auto& prev = t.partial[m - 1];
        Complex sum;
        for (int i = 0; i <= k; ++i) {
          const Complex& a = prev[static_cast<std::size_t>(i)];
          const Complex& b = fac[static_cast<std::size_t>(k - i)];
          if (a.is_exact() && a.is_zero()) continue;
          if (b.is_exact() && b.is_zero()) continue;
          sum += a * b;
        }
        out[static_cast<std::size_t>(k)] = sum;
      }
    }
  }

  // d residual(k) / d c_k. Only the leading terms see c_k, each factor
  // paired with c_0 in all the others.
  Complex linear(int k) const {
    const Rat e = exponent(k);
    Complex total;
    for (const auto& t : terms_) {
      for (const auto& [idx, c] : t.phi) {
        if (t.offset + idx != e0_ || t.factors.empty()) continue;
        for (std::size_t m = 0; m < t.factors.size(); ++m) {
          Complex prod(falling(e, t.factors[m]));
          for (std::size_t i = 0; i < t.factors.size(); ++i) {
            if (i != m) prod = prod * derivs_[static_cast<std::size_t>(t.factors[i])][0];
          }
          total += c * prod;
        }
      }
    }
    return total;
  }

  // Coefficient of s^{e0 + k} in f(y) with c_0 .. c_k as currently set.
  Complex residual(int k) const {
    Complex total;
    for (const auto& t : terms_) {
      for (const auto& [idx, c] : t.phi) {
        const int r = e0_ + k - t.offset - idx;
        if (r < 0) continue;
        if (r > k) raise(ErrorCode::InvalidArgument, "series term below the leading balance");
        if (t.factors.empty()) {
          if (r == 0) total += c;
          continue;
        }
        total += c * t.partial.back()[static_cast<std::size_t>(r)];
      }
    }
    return total;
  }

 private:
  struct Term {
    std::vector<std::pair<int, Complex>> phi;  // (s-index, coefficient)
    std::vector<int> factors;                  // derivative order per factor
    std::vector<std::vector<Complex>> partial;
    int offset = 0;
    bool singular = false;
  };

  int q_;
  int l_ = 0;
  int order_ = 0;
  int e0_ = 0;
  std::vector<std::vector<Complex>> derivs_;
  std::vector<Term> terms_;
};

std::string parameter_name(int k) { return "c_" + std::to_string(k); }

}  // namespace

PuiseuxSeries extend_series(const DiffPoly& f, const Rat& lambda, const Complex& c0, const Rat& x0, int n,
                            const ResonanceValues& values) {
  if (n < 1) raise(ErrorCode::InvalidArgument, "series budget must be positive");
  if (c0.is_zero()) raise(ErrorCode::InvalidBranch, "leading coefficient must be nonzero");
  Engine eng(f, lambda, x0);
  PuiseuxSeries s;
  s.x0 = x0;
  s.ramification = eng.q();
  eng.set(0, c0);
  if (!eng.residual(0).is_zero()) {
    raise(ErrorCode::InvalidBranch, "c0 = " + c0.str() + " does not balance the leading terms at exponent " +
                                        lambda.str());
  }
  s.terms.push_back({lambda, c0});
  for (int k = 1; k <= n; ++k) {
    eng.set(k, Complex());
    const Complex b = eng.residual(k);
    const Complex a = eng.linear(k);
    const Rat e = eng.exponent(k);
    if (a.is_zero()) {
      Resonance res;
      res.exponent = e;
      res.name = parameter_name(k);
      if (!b.is_zero()) {
        if (k < n) {
          raise(ErrorCode::ObstructedResonance,
                "resonance at exponent " + e.str() + " with nonzero forcing " + b.str() + "; no Puiseux continuation");
        }
        res.status = ResonanceStatus::Obstructed;
        s.resonances.push_back(res);
        break;
      }
      res.status = ResonanceStatus::FreeParameter;
      if (auto it = values.find(res.name); it != values.end()) res.value = it->second;
      s.resonances.push_back(res);
      if (k == n) break;
      eng.set(k, res.value);
      if (!res.value.is_zero()) s.terms.push_back({e, res.value});
      continue;
    }
    if (k == n) break;
    const Complex c = -b / a;
    eng.set(k, c);
    if (!c.is_zero()) s.terms.push_back({e, c});
  }
  s.solved_indices = n;
  s.certified_residual = Rat(eng.e0() + n, eng.q());
  return s;
}

DiffPoly shift_and_recurse(const DiffPoly& f, const Rat& c0) { return shift_dependent(f, c0); }

}  // namespace odepoly
