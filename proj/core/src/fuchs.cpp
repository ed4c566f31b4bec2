#include "odepoly/fuchs.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "odepoly/cpoly.hpp"
#include "odepoly/errors.hpp"
#include "odepoly/newton_puiseux.hpp"
#include "odepoly/resultant.hpp"
#include "odepoly/roots.hpp"

namespace odepoly {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::NumericPass:
      return "numeric-pass";
    case Verdict::Undecided:
      return "undecided";
    case Verdict::Skipped:
      return "skipped";
  }
  return "undecided";
}

bool FuchsReport::passes() const {
  return std::all_of(conditions.begin(), conditions.end(), [](const FuchsCondition& c) {
    return c.verdict == Verdict::Pass || c.verdict == Verdict::NumericPass;
  });
}

Poly<BiPoly> fuchs_form(const DiffPoly& f) {
  if (f.order() != 1) raise(ErrorCode::NotFirstOrder, "Fuchs test needs a first-order equation");
  Poly<BiPoly> F;
  for (const auto& m : f.monomials()) {
    const BiPoly a = BiPoly::monomial(m.coeff, m.exponent(0));
    F += Poly<BiPoly>::monomial(a, m.exponent(1));
  }
  return F;
}

namespace {

std::string text(const BiPoly& p) { return to_string(p, "x", "y"); }

// Branch of the discriminant at one abscissa: (y0, y0').
struct Point {
  Complex y;
  Complex p;
};

Complex eval_f(const Poly<BiPoly>& F, const Rat& x, const Complex& y, const Complex& p, double& scale) {
  Complex total;
  Complex pk(1);
  scale = 0;
  for (int k = 0; k <= F.degree(); ++k) {
    const XPoly c = eval_u(F.coeff(k), x);
    total += eval(c, y) * pk;
    scale += magnitude_at(to_cpoly(c), y.abs()) * pk.abs();
    pk *= p;
  }
  return total;
}

// F(x, n/d, (n/d)') multiplied by a power of d; zero exactly when y = n/d
// solves the equation.
XPoly substitute_rational(const Poly<BiPoly>& F, const XPoly& n, const XPoly& d) {
  const XPoly dn = n.derivative() * d - n * d.derivative();
  int top = 0;
  for (int k = 0; k <= F.degree(); ++k) top = std::max(top, F.coeff(k).degree() + 2 * k);
  XPoly total;
  for (int k = 0; k <= F.degree(); ++k) {
    const BiPoly& a = F.coeffs()[static_cast<std::size_t>(k)];
    for (int j = 0; j <= a.degree(); ++j) {
      const XPoly& c = a.coeffs()[static_cast<std::size_t>(j)];
      if (c.is_zero()) continue;
      total += c * n.pow(j) * dn.pow(k) * d.pow(top - j - 2 * k);
    }
  }
  return total;
}

// (k, m) of every branch of G(u, v) = 0 through the origin, v = p - p0 as a
// Puiseux series in u = y - y0.
template <typename Curve>
std::vector<std::pair<int, int>> branch_exponents(const Curve& g) {
  std::vector<std::pair<int, int>> out;
  for (const auto& b : newton_puiseux_branches(g, 1)) {
    if (b.is_zero_branch()) continue;
    const Rat mu = b.leading_exponent();
    if (mu.sign() <= 0) continue;
    const Rat k = mu * Rat(b.ramification);
    out.emplace_back(static_cast<int>(k.to_long()), b.ramification);
  }
  return out;
}

BiPoly slice(const Poly<BiPoly>& F, const Rat& x0) {
  std::vector<XPoly> rows;
  for (int k = 0; k <= F.degree(); ++k) rows.push_back(eval_u(F.coeff(k), x0));
  return BiPoly(std::move(rows));
}

class Checker {
 public:
  Checker(const DiffPoly& f, const FuchsOptions& options) : f_(f), F_(fuchs_form(f)), options_(options) {}

  FuchsReport run();

 private:
  void condition_one();
  void condition_two();
  void reduce_discriminant();
  void draw_samples();
  void condition_three();
  void condition_four();
  std::vector<Point> branches_at(const Rat& x, bool& approximate) const;

  const DiffPoly& f_;
  Poly<BiPoly> F_;
  FuchsOptions options_;
  FuchsReport r_;
  // Constant branches y = root of const_part_, a rational-function branch
  // when linear_ is set, and the algebraic remainder rest_.
  XPoly const_part_ = XPoly(Rat(1));
  BiPoly rest_;
  bool linear_ = false;
  bool degenerate_ = false;
};

FuchsReport Checker::run() {
  r_.seed = options_.seed;
  condition_one();
  condition_two();
  reduce_discriminant();
  draw_samples();
  condition_three();
  if (r_.conditions[2].verdict == Verdict::Fail) {
    r_.conditions[3].verdict = Verdict::Skipped;
    r_.conditions[3].witness = "discriminant branches are not integrals";
  } else {
    condition_four();
  }
  return std::move(r_);
}

void Checker::condition_one() {
  const BiPoly& a0 = F_.lc();
  auto& c = r_.conditions[0];
  if (a0.degree() > 0) {
    c.verdict = Verdict::Fail;
    c.witness = "A_0 = " + text(a0) + " depends on y";
  } else {
    c.verdict = Verdict::Pass;
  }
}

void Checker::condition_two() {
  const int s = F_.degree();
  auto& c = r_.conditions[1];
  c.verdict = Verdict::Pass;
  for (int k = 1; k <= s; ++k) {
    const int d = F_.coeff(s - k).degree();
    if (d > 2 * k) {
      c.verdict = Verdict::Fail;
      c.witness = "deg_y A_" + std::to_string(k) + " = " + std::to_string(d) + " > " + std::to_string(2 * k);
      return;
    }
  }
}

void Checker::reduce_discriminant() {
  r_.discriminant = sylvester_resultant(F_, F_.derivative());
  if (r_.discriminant.is_zero()) {
    degenerate_ = true;
    return;
  }
  const BiPoly reduced = squarefree_distinct(r_.discriminant, Var::V).first;
  r_.discriminant_reduced = reduced;
  if (reduced.degree() <= 0) return;
  // The factor in y alone gives the constant branches.
  const_part_ = content_v(swap_vars(reduced));
  rest_ = exact_div(reduced, bi_from_v(const_part_));
  linear_ = rest_.degree() == 1;
}

void Checker::draw_samples() {
  std::vector<XPoly> avoid;
  for (const auto& m : f_.monomials()) avoid.push_back(m.coeff);
  if (!r_.discriminant.is_zero()) avoid.push_back(content_v(r_.discriminant));
  if (rest_.degree() > 0) avoid.push_back(rest_.lc());
  if (rest_.degree() > 1) avoid.push_back(discriminant(rest_, Var::V));
  std::mt19937_64 gen(options_.seed);
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 9);
  while (static_cast<int>(r_.samples.size()) < options_.samples) {
    const Rat x(num(gen), den(gen));
    if (std::find(r_.samples.begin(), r_.samples.end(), x) != r_.samples.end()) continue;
    const bool bad = std::any_of(avoid.begin(), avoid.end(), [&x](const XPoly& p) { return p.eval(x).is_zero(); });
    if (!bad) r_.samples.push_back(x);
  }
}

void Checker::condition_three() {
  auto& c = r_.conditions[2];
  if (degenerate_) {
    c.verdict = Verdict::Undecided;
    c.witness = "F has a repeated factor in y'";
    return;
  }
  // Constant branches: exact divisibility by the content of F(x, y, 0).
  if (const_part_.degree() > 0) {
    const XPoly h = content_v(swap_vars(F_.coeff(0)));
    if (!h.is_zero()) {
      const XPoly bad = exact_div(const_part_, gcd(const_part_, h));
      if (bad.degree() > 0) {
        c.verdict = Verdict::Fail;
        c.witness = "constant branch y = c with " + to_string(bad, "c") + " = 0 is not an integral";
        return;
      }
    }
  }
  if (rest_.degree() <= 0) {
    c.verdict = Verdict::Pass;
    return;
  }
  if (linear_) {
    const XPoly n = -rest_.coeff(0);
    const XPoly d = rest_.coeff(1);
    if (!substitute_rational(F_, n, d).is_zero()) {
      c.verdict = Verdict::Fail;
      c.witness = "branch " + text(rest_) + " = 0 is not an integral";
    } else {
      c.verdict = Verdict::Pass;
    }
    return;
  }
  const BiPoly dx = diff_u(rest_);
  const BiPoly dy = diff_v(rest_);
  try {
    for (const Rat& x : r_.samples) {
      for (const Root& root : root_find(eval_u(rest_, x))) {
        const Complex& y = root.value;
        const Complex p = -eval(eval_u(dx, x), y) / eval(eval_u(dy, x), y);
        double scale = 0;
        const Complex v = eval_f(F_, x, y, p, scale);
        const double rel = scale > 0 ? v.abs() / scale : 0.0;
        if (rel > options_.tolerance) {
          std::ostringstream os;
          os << "branch " << text(rest_) << " = 0 is not an integral: at x = " << x.str() << ", y = " << y.str()
             << " the relative residual is " << rel;
          c.verdict = Verdict::Fail;
          c.witness = os.str();
          return;
        }
      }
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NumericFailure) throw;
    c.verdict = Verdict::Undecided;
    c.witness = e.what();
    return;
  }
  c.verdict = Verdict::NumericPass;
  c.tolerance = options_.tolerance;
  c.witness = "branch " + text(rest_) + " = 0 satisfies the equation at the sample points";
}

std::vector<Point> Checker::branches_at(const Rat& x, bool& approximate) const {
  std::vector<Point> out;
  if (const_part_.degree() > 0) {
    for (const Root& root : root_find(const_part_)) {
      out.push_back({root.value, Complex()});
      approximate = approximate || !root.value.is_exact();
    }
  }
  if (rest_.degree() <= 0) return out;
  if (linear_) {
    const XPoly n = -rest_.coeff(0);
    const XPoly d = rest_.coeff(1);
    const Rat dx = d.eval(x);
    const Rat y = n.eval(x) / dx;
    const Rat p = (n.derivative().eval(x) * dx - n.eval(x) * d.derivative().eval(x)) / (dx * dx);
    out.push_back({Complex(y), Complex(p)});
    return out;
  }
  const BiPoly dx = diff_u(rest_);
  const BiPoly dy = diff_v(rest_);
  for (const Root& root : root_find(eval_u(rest_, x))) {
    const Complex& y = root.value;
    out.push_back({y, -eval(eval_u(dx, x), y) / eval(eval_u(dy, x), y)});
    approximate = approximate || !y.is_exact();
  }
  return out;
}

void Checker::condition_four() {
  auto& c = r_.conditions[3];
  if (degenerate_) {
    c.verdict = Verdict::Undecided;
    c.witness = "F has a repeated factor in y'";
    return;
  }
  const Rat& x0 = r_.samples.front();
  const BiPoly g = slice(F_, x0);
  bool approximate = false;
  try {
    for (const Point& pt : branches_at(x0, approximate)) {
      std::vector<std::pair<int, int>> km;
      if (pt.y.is_exact_real() && pt.p.is_exact_real()) {
        km = branch_exponents(shift(g, pt.y.re(), pt.p.re()));
      } else {
        const CBiPoly h = to_cbipoly(g).map([&pt](const CPoly& a) { return a.shift(pt.y); }).shift(CPoly(pt.p));
        km = branch_exponents(h);
      }
      for (const auto& [k, m] : km) {
        r_.exponents.emplace_back(k, m);
        if (k < m - 1) {
          c.verdict = Verdict::Fail;
          c.witness = "(k, m) = (" + std::to_string(k) + ", " + std::to_string(m) + ") at x = " + x0.str() +
                      ", y = " + pt.y.str();
          return;
        }
      }
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NumericFailure && e.code() != ErrorCode::NotSquarefree) throw;
    c.verdict = Verdict::Undecided;
    c.witness = e.what();
    return;
  }
  c.verdict = approximate ? Verdict::NumericPass : Verdict::Pass;
  if (approximate) c.tolerance = options_.tolerance;
  std::ostringstream os;
  os << "checked at x = " << x0.str();
  for (const auto& [k, m] : r_.exponents) os << "; (k, m) = (" << k << ", " << m << ")";
  c.witness = os.str();
}

}  // namespace

FuchsReport fuchs_check(const DiffPoly& f, const FuchsOptions& options) {
  if (options.samples < 1) raise(ErrorCode::InvalidArgument, "at least one sample point is needed");
  return Checker(f, options).run();
}

}  // namespace odepoly
