#include "odepoly/newton_puiseux.hpp"

#include <algorithm>
#include <numeric>

#include "odepoly/errors.hpp"
#include "odepoly/roots.hpp"

namespace odepoly {
namespace {

constexpr int kMaxDepth = 256;

struct Edge {
  int x0, y0;  // left endpoint
  int x1, y1;  // right endpoint
  int p, q;    // mu = p / q in lowest terms, branch w ~ c t^mu
};

std::vector<std::pair<int, int>> support(const CBiPoly& g) {
  std::vector<std::pair<int, int>> pts;
  for (int x = 0; x <= g.degree(); ++x) {
    const CPoly& c = g.coeffs()[static_cast<std::size_t>(x)];
    for (int y = 0; y <= c.degree(); ++y) {
      if (!c.coeffs()[static_cast<std::size_t>(y)].is_zero()) pts.emplace_back(x, y);
    }
  }
  return pts;
}

std::vector<Edge> edges_of(const std::vector<std::pair<int, int>>& hull) {
  std::vector<Edge> out;
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    const auto [xa, ya] = hull[k];
    const auto [xb, yb] = hull[k + 1];
    // valuation y + mu x constant along the edge: mu = -(yb - ya) / (xb - xa)
    int p = -(yb - ya);
    int q = xb - xa;
    const int g = std::gcd(std::abs(p), q);
    p /= g;
    q /= g;
    out.push_back({xa, ya, xb, yb, p, q});
  }
  return out;
}

Complex binom(int n, int k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Complex(Rat(b));
}

// g(T^q, T^p (c + W)) / T^w0 as a polynomial in W with coefficients in T.
CBiPoly substitute(const CBiPoly& g, const Edge& e, const Complex& c, int w0) {
  const int deg = g.degree();
  std::vector<Complex> cpow(static_cast<std::size_t>(deg) + 1);
  cpow[0] = Complex(1);
  for (int k = 1; k <= deg; ++k) cpow[static_cast<std::size_t>(k)] = cpow[static_cast<std::size_t>(k - 1)] * c;

  std::vector<std::vector<Complex>> rows(static_cast<std::size_t>(deg) + 1);
  auto put = [&rows](int w_exp, int t_exp, const Complex& v) {
    auto& row = rows[static_cast<std::size_t>(w_exp)];
    if (row.size() <= static_cast<std::size_t>(t_exp)) row.resize(static_cast<std::size_t>(t_exp) + 1);
    row[static_cast<std::size_t>(t_exp)] += v;
  };
  for (int j = 0; j <= deg; ++j) {
    const CPoly& cj = g.coeffs()[static_cast<std::size_t>(j)];
    for (int i = 0; i <= cj.degree(); ++i) {
      const Complex& a = cj.coeffs()[static_cast<std::size_t>(i)];
      if (a.is_zero()) continue;
      const int texp = e.q * i + e.p * j - w0;
      if (texp < 0) raise(ErrorCode::InvalidArgument, "edge is not a supporting line");
      for (int k = 0; k <= j; ++k) put(k, texp, a * binom(j, k) * cpow[static_cast<std::size_t>(j - k)]);
    }
  }
  std::vector<CPoly> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.emplace_back(std::move(r));
  return CBiPoly(std::move(out));
}

// Coefficients that theory forces to vanish (the T^0 row below the root
// multiplicity) are set to exact zero so rounding noise cannot leak into the
// next Newton polygon.
void clear_forced_zeros(CBiPoly& g, int multiplicity) {
  std::vector<CPoly> rows = g.coeffs();
  for (int k = 0; k < multiplicity && k < static_cast<int>(rows.size()); ++k) {
    auto coeffs = rows[static_cast<std::size_t>(k)].coeffs();
    if (!coeffs.empty()) coeffs[0] = Complex();
    rows[static_cast<std::size_t>(k)] = CPoly(std::move(coeffs));
  }
  g = CBiPoly(std::move(rows));
}

struct Path {
  std::vector<PuiseuxTerm> terms;
  int ramification = 1;  // product of q so far
  Rat exponent;          // exponent of the last term, in u units
  long weight = 0;       // accumulated T-valuation offset in current T units
  bool truncated = false;
  bool exact = false;  // truncation annihilates the curve
  std::optional<Rat> certificate;
};

bool row_is_zero(const CBiPoly& g) { return g.is_zero() || g.coeffs()[0].valuation() < 0; }

void emit(const Path& path, bool exact, std::vector<PuiseuxBranch>& out) {
  PuiseuxBranch b;
  b.ramification = path.ramification;
  b.terms = path.terms;
  b.exact_solution = exact;
  if (!exact) b.residual_valuation = path.certificate;
  out.push_back(std::move(b));
}

// Certificate for the truncation at this level: g(T, 0) has no T^0 term
// because c was chosen as a root of the edge polynomial.
void certify(const CBiPoly& g1, Path& next) {
  if (row_is_zero(g1)) {
    next.exact = true;
    return;
  }
  const CPoly& row = g1.coeffs()[0];
  const int val = is_exact(row) ? std::max(1, row.valuation()) : 1;
  next.certificate = Rat(next.weight + val, next.ramification);
}

void expand(const CBiPoly& g, const Path& path, bool top, int max_terms, int depth,
            std::vector<PuiseuxBranch>& out) {
  if (depth > kMaxDepth) raise(ErrorCode::NumericFailure, "Newton-Puiseux expansion did not separate branches");
  const auto pts = support(g);
  if (row_is_zero(g)) {
    // w = 0 continues the branch exactly.
    if (top) {
      emit(Path{}, true, out);
    } else {
      emit(path, !path.truncated || path.exact, out);
    }
  }
  if (pts.empty()) return;
  for (const Edge& e : edges_of(lower_hull(pts))) {
    if (!top && e.p <= 0) continue;
    std::vector<Complex> psi;
    for (int x = e.x0; x <= e.x1; x += e.q) {
      const int y = e.y0 - (x - e.x0) / e.q * e.p;
      psi.push_back(g.coeff(x).coeff(y));
    }
    RootOptions opts;
    opts.mode = RootMode::Numeric;
    const int w0 = e.q * e.y0 + e.p * e.x0;
    for (const Root& root : root_find(CPoly(psi), opts)) {
      if (root.value.is_zero()) continue;
      const Complex c = kth_root(root.value, e.q);
      Path next = path;
      next.ramification = path.ramification * e.q;
      next.exponent = path.exponent + Rat(e.p, next.ramification);
      next.weight = path.weight * e.q + w0;
      CBiPoly g1 = substitute(g, e, c, w0);
      clear_forced_zeros(g1, root.multiplicity);
      if (!path.truncated) {
        next.terms.push_back({next.exponent, c});
        if (static_cast<int>(next.terms.size()) >= max_terms) {
          next.truncated = true;
          certify(g1, next);
        }
      }
      if (next.truncated && root.multiplicity == 1) {
        emit(next, next.exact, out);
        continue;
      }
      expand(g1, next, false, max_terms, depth + 1, out);
    }
  }
}

}  // namespace

std::vector<std::pair<int, int>> lower_hull(std::vector<std::pair<int, int>> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end(),
                           [](const auto& a, const auto& b) { return a.first == b.first; }),
               points.end());
  std::vector<std::pair<int, int>> hull;
  for (const auto& p : points) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      const long cross = static_cast<long>(b.first - a.first) * (p.second - a.second) -
                         static_cast<long>(b.second - a.second) * (p.first - a.first);
      if (cross <= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(p);
  }
  return hull;
}

std::vector<PuiseuxBranch> newton_puiseux_branches(const CBiPoly& f, int max_terms) {
  if (f.is_zero()) raise(ErrorCode::ZeroPolynomial, "Newton-Puiseux of the zero polynomial");
  if (f.degree() <= 0) raise(ErrorCode::NoBranch, "curve has no branches in v");
  if (max_terms < 1) raise(ErrorCode::InvalidArgument, "max_terms must be positive");
  int content = -1;
  for (const auto& c : f.coeffs()) {
    const int v = c.valuation();
    if (v >= 0) content = content < 0 ? v : std::min(content, v);
  }
  const CBiPoly g = f.map([content](const CPoly& c) { return c.shift_down(content); });
  std::vector<PuiseuxBranch> out;
  expand(g, Path{}, true, max_terms, 0, out);
  return out;
}

std::vector<PuiseuxBranch> newton_puiseux_branches(const BiPoly& f, int max_terms) {
  if (f.is_zero()) raise(ErrorCode::ZeroPolynomial, "Newton-Puiseux of the zero polynomial");
  if (f.degree() <= 0) raise(ErrorCode::NoBranch, "curve has no branches in v");
  if (gcd(f, f.derivative()).degree() > 0) raise(ErrorCode::NotSquarefree, "curve is not squarefree in v");
  return newton_puiseux_branches(to_cbipoly(f), max_terms);
}

}  // namespace odepoly
