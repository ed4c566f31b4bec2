#include "odepoly/diffpoly.hpp"

#include <algorithm>
#include <sstream>

#include "odepoly/errors.hpp"
#include "odepoly/laurent.hpp"
#include "odepoly/roots.hpp"

namespace odepoly {

int DiffMonomial::total_degree() const {
  int m = 0;
  for (int e : exponents) m += e;
  return m;
}

int DiffMonomial::weight() const {
  int n = 0;
  for (std::size_t j = 0; j < exponents.size(); ++j) n += static_cast<int>(j) * exponents[j];
  return n;
}

namespace {

void trim_key(std::vector<int>& k) {
  while (!k.empty() && k.back() == 0) k.pop_back();
}

std::vector<int> add_keys(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

bool single_term(const XPoly& c) {
  int n = 0;
  for (const auto& k : c.coeffs()) n += k.is_zero() ? 0 : 1;
  return n == 1;
}

}  // namespace

bool DiffPoly::KeyLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = n; i-- > 0;) {
    const int x = i < a.size() ? a[i] : 0;
    const int y = i < b.size() ? b[i] : 0;
    if (x != y) return x < y;
  }
  return false;
}

void DiffPoly::add_term(std::vector<int> key, const XPoly& c) {
  if (c.is_zero()) return;
  trim_key(key);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void DiffPoly::finish() {
  order_ = 0;
  for (const auto& [k, c] : terms_) order_ = std::max(order_, static_cast<int>(k.size()) - 1);
}

DiffPoly DiffPoly::normalize(const std::vector<DiffMonomial>& raw, int declared_order) {
  if (raw.empty()) raise(ErrorCode::EmptyEquation, "equation has no terms");
  DiffPoly r;
  for (const auto& m : raw) {
    for (std::size_t j = 0; j < m.exponents.size(); ++j) {
      if (m.exponents[j] < 0) raise(ErrorCode::InvalidArgument, "negative exponent in a differential monomial");
      if (declared_order >= 0 && static_cast<int>(j) > declared_order && m.exponents[j] != 0) {
        raise(ErrorCode::InvalidArgument, "monomial exceeds the declared order");
      }
    }
    r.add_term(m.exponents, m.coeff);
  }
  r.finish();
  if (r.is_zero()) raise(ErrorCode::EmptyEquation, "all terms cancel");
  return r;
}

DiffPoly DiffPoly::constant(const XPoly& c) {
  DiffPoly r;
  r.add_term({}, c);
  r.finish();
  return r;
}

DiffPoly DiffPoly::derivative_var(int k) {
  std::vector<int> key(static_cast<std::size_t>(k) + 1);
  key.back() = 1;
  DiffPoly r;
  r.add_term(std::move(key), XPoly(Rat(1)));
  r.finish();
  return r;
}

std::vector<DiffMonomial> DiffPoly::monomials() const {
  std::vector<DiffMonomial> out;
  out.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::vector<int> e = it->first;
    e.resize(static_cast<std::size_t>(order_) + 1);
    out.push_back({it->second, std::move(e)});
  }
  return out;
}

bool DiffPoly::autonomous() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.degree() <= 0; });
}

int DiffPoly::coeff_degree() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, c.degree());
  return d;
}

DiffPoly DiffPoly::derivative() const {
  DiffPoly r;
  for (const auto& [k, c] : terms_) {
    r.add_term(k, c.derivative());
    for (std::size_t j = 0; j < k.size(); ++j) {
      if (k[j] == 0) continue;
      std::vector<int> nk = k;
      nk[j] -= 1;
      if (nk.size() <= j + 1) nk.resize(j + 2);
      nk[j + 1] += 1;
      r.add_term(std::move(nk), c * Rat(k[j]));
    }
  }
  r.finish();
  return r;
}

DiffPoly DiffPoly::pow(int e) const {
  DiffPoly result = constant(XPoly(Rat(1)));
  DiffPoly base = *this;
  while (e > 0) {
    if ((e & 1) != 0) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

DiffPoly DiffPoly::operator-() const {
  return map_coeffs([](const XPoly& c) { return -c; });
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  finish();
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  finish();
  return *this;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  DiffPoly r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) r.add_term(add_keys(ka, kb), ca * cb);
  }
  r.finish();
  return r;
}

DiffPoly operator*(const XPoly& s, const DiffPoly& a) {
  return a.map_coeffs([&s](const XPoly& c) { return s * c; });
}

std::string derivative_name(int k) {
  if (k <= 3) return "y" + std::string(static_cast<std::size_t>(k), '\'');
  return "y^(" + std::to_string(k) + ")";
}

std::string DiffPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& m : monomials()) {
    std::string mono;
    for (int j = static_cast<int>(m.exponents.size()) - 1; j >= 0; --j) {
      const int e = m.exponents[static_cast<std::size_t>(j)];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += derivative_name(j);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    const XPoly& c = m.coeff;
    std::string coeff;
    bool negative = false;
    if (single_term(c)) {
      negative = c.lc().sign() < 0;
      const XPoly mag = negative ? -c : c;
      if (mag.degree() == 0 && mag.lc().is_one() && !mono.empty()) {
        coeff.clear();
      } else {
        coeff = to_string(mag, "x");
      }
    } else {
      coeff = "(" + to_string(c, "x") + ")";
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (coeff.empty()) {
      os << mono;
    } else if (mono.empty()) {
      os << coeff;
    } else {
      os << coeff << "*" << mono;
    }
  }
  return os.str();
}

bool SingularSet::contains(const Rat& x) const {
  if (std::find(points.begin(), points.end(), x) != points.end()) return true;
  return algebraic.eval(x).is_zero();
}

SingularSet singular_points(const DiffPoly& f) {
  SingularSet s;
  XPoly algebraic(Rat(1));
  for (const auto& m : f.monomials()) {
    if (m.coeff.degree() <= 0) continue;
    XPoly rest = squarefree_part(m.coeff);
    RootOptions opts;
    opts.mode = RootMode::ExactRational;
    for (const auto& r : root_find(rest, opts)) {
      const Rat& x = r.value.re();
      if (std::find(s.points.begin(), s.points.end(), x) == s.points.end()) s.points.push_back(x);
      rest = exact_div(rest, XPoly(std::vector<Rat>{-x, Rat(1)}));
    }
    if (rest.degree() > 0) algebraic = monic(exact_div(algebraic * rest, gcd(algebraic, rest)));
  }
  std::sort(s.points.begin(), s.points.end());
  s.algebraic = algebraic;
  const DiffPoly g = inverse_x(f);
  for (const auto& m : g.monomials()) {
    if (m.coeff.coeff(0).is_zero()) s.includes_infinity = true;
  }
  return s;
}

DiffPoly shift(const DiffPoly& f, const Rat& x0) {
  return f.map_coeffs([&x0](const XPoly& c) { return c.shift(x0); });
}

namespace {

DiffPoly monomial_of(const DiffMonomial& m, const std::vector<DiffPoly>& images) {
  DiffPoly r = DiffPoly::constant(m.coeff);
  for (std::size_t j = 0; j < m.exponents.size(); ++j) {
    if (m.exponents[j] > 0) r = r * images[j].pow(m.exponents[j]);
  }
  return r;
}

// Divides every monomial by the common power of y.
DiffPoly strip_y_power(const DiffPoly& f) {
  int common = -1;
  for (const auto& m : f.monomials()) common = common < 0 ? m.exponent(0) : std::min(common, m.exponent(0));
  if (common <= 0) return f;
  std::vector<DiffMonomial> ms = f.monomials();
  for (auto& m : ms) m.exponents[0] -= common;
  return DiffPoly::normalize(ms, -1);
}

// Divides every coefficient by the common power of x.
DiffPoly strip_x_power(const DiffPoly& f) {
  int common = -1;
  for (const auto& m : f.monomials()) {
    const int v = m.coeff.valuation();
    common = common < 0 ? v : std::min(common, v);
  }
  if (common <= 0) return f;
  return f.map_coeffs([common](const XPoly& c) { return c.shift_down(common); });
}

}  // namespace

DiffPoly reciprocal_y(const DiffPoly& f) {
  const int n = f.order();
  const DiffPoly w = DiffPoly::derivative_var(0);
  const DiffPoly w1 = DiffPoly::derivative_var(1);
  // d^j/dx^j (1/w) = N_j / w^{j+1}
  std::vector<DiffPoly> num{DiffPoly::constant(XPoly(Rat(1)))};
  for (int j = 0; j < n; ++j) {
    num.push_back(num.back().derivative() * w - XPoly(Rat(j + 1)) * (w1 * num.back()));
  }
  int top = 0;
  const auto ms = f.monomials();
  for (const auto& m : ms) top = std::max(top, m.total_degree() + m.weight());
  DiffPoly r;
  for (const auto& m : ms) {
    DiffPoly term = monomial_of(m, num);
    r += term * w.pow(top - m.total_degree() - m.weight());
  }
  return strip_y_power(r);
}

DiffPoly inverse_x(const DiffPoly& f) {
  const int n = f.order();
  const DiffPoly t2 = DiffPoly::constant(XPoly::monomial(Rat(-1), 2));
  std::vector<DiffPoly> images{DiffPoly::derivative_var(0)};
  for (int j = 0; j < n; ++j) images.push_back(t2 * images.back().derivative());
  const int k = f.coeff_degree();
  DiffPoly r;
  for (const auto& m : f.monomials()) {
    DiffMonomial mm = m;
    mm.coeff = m.coeff.reversed().shift_up(k - m.coeff.degree());
    r += monomial_of(mm, images);
  }
  return strip_x_power(r);
}

DiffPoly transform(const DiffPoly& f, TransformMode mode, const Rat& x0) {
  switch (mode) {
    case TransformMode::Shift:
      return shift(f, x0);
    case TransformMode::ReciprocalY:
      return reciprocal_y(f);
    case TransformMode::InverseX:
      return inverse_x(f);
  }
  return f;
}

DiffPoly shift_dependent(const DiffPoly& f, const Rat& c) {
  std::vector<DiffPoly> images;
  images.push_back(DiffPoly::constant(XPoly(c)) + DiffPoly::derivative_var(0));
  for (int j = 1; j <= f.order(); ++j) images.push_back(DiffPoly::derivative_var(j));
  DiffPoly r;
  for (const auto& m : f.monomials()) r += monomial_of(m, images);
  return r;
}

SubstitutionResult substitute_series(const DiffPoly& f, const PuiseuxSeries& s) {
  const int q = s.ramification;
  Laurent y;
  for (const auto& t : s.terms) {
    const Rat n = t.exponent * Rat(q);
    if (!n.is_integer()) raise(ErrorCode::InvalidArgument, "series exponent off the ramification grid");
    y += Laurent::monomial(t.coeff, static_cast<int>(n.to_long()));
  }
  std::vector<Laurent> derivs{y};
  for (int j = 1; j <= f.order(); ++j) derivs.push_back(derivs.back().derivative(q));

  Laurent total;
  for (const auto& m : f.monomials()) {
    const XPoly c = m.coeff.shift(s.x0);
    Laurent term;
    for (int l = 0; l <= c.degree(); ++l) {
      if (!c.coeff(l).is_zero()) term += Laurent::monomial(Complex(c.coeff(l)), l * q);
    }
    for (std::size_t j = 0; j < m.exponents.size(); ++j) {
      for (int e = 0; e < m.exponents[j]; ++e) term = term * derivs[j];
    }
    total += term;
  }
  SubstitutionResult r;
  if (const auto v = total.valuation()) {
    r.valuation = Rat(*v, q);
    r.coeff = total.coeff(*v);
  }
  return r;
}

}  // namespace odepoly
