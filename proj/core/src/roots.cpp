#include "odepoly/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <numeric>

#include "odepoly/errors.hpp"

namespace odepoly {
namespace {

using LComplex = std::complex<long double>;

constexpr long double kLdEps = std::numeric_limits<long double>::epsilon();
constexpr double kDblEps = std::numeric_limits<double>::epsilon();

struct Approx {
  LComplex z;
  double err = 0;
  double residual = 0;
};

struct Horner {
  LComplex p;
  LComplex dp;
  long double scale;  // sum |a_i| |z|^i
};

Horner horner(const std::vector<LComplex>& a, LComplex z) {
  LComplex p = 0;
  LComplex dp = 0;
  long double s = 0;
  const long double az = std::abs(z);
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
    s = s * az + std::abs(*it);
  }
  return {p, dp, s};
}

// Simultaneous Aberth-Ehrlich iteration on a polynomial with nonzero
// constant and leading coefficients. `coeff_err` holds absolute error bounds
// of the coefficients; they widen the returned inclusion radii.
std::vector<Approx> aberth(const std::vector<LComplex>& a, const std::vector<double>& coeff_err,
                           const RootOptions& options) {
  const int n = static_cast<int>(a.size()) - 1;
  std::vector<Approx> out;
  if (n <= 0) return out;
  if (n == 1) {
    const LComplex z = -a[0] / a[1];
    out.push_back({z, 0, 0});
  } else {
    const long double radius = std::pow(std::abs(a[0] / a[static_cast<std::size_t>(n)]), 1.0L / n);
    std::vector<LComplex> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      const long double angle = 2 * std::numbers::pi_v<long double> * k / n + 0.4L;
      z[static_cast<std::size_t>(k)] = std::polar(radius, angle);
    }
    bool converged = false;
    for (int it = 0; it < options.max_iterations && !converged; ++it) {
      converged = true;
      for (int k = 0; k < n; ++k) {
        auto& zk = z[static_cast<std::size_t>(k)];
        const Horner h = horner(a, zk);
        if (std::abs(h.p) <= 4 * kLdEps * h.scale) continue;
        const LComplex ratio = h.dp == LComplex(0) ? LComplex(1) : h.p / h.dp;
        LComplex sum = 0;
        for (int j = 0; j < n; ++j) {
          if (j == k) continue;
          const LComplex diff = zk - z[static_cast<std::size_t>(j)];
          if (diff != LComplex(0)) sum += LComplex(1) / diff;
        }
        const LComplex w = ratio / (LComplex(1) - ratio * sum);
        zk -= w;
        if (std::abs(w) > 16 * kLdEps * std::max<long double>(1, std::abs(zk))) converged = false;
      }
    }
    for (const auto& zk : z) out.push_back({zk, 0, 0});
  }

  for (auto& r : out) {
    const Horner h = horner(a, r.z);
    const long double az = std::abs(r.z);
    long double perturb = 0;
    long double zp = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
      perturb += (coeff_err.empty() ? 0.0L : static_cast<long double>(coeff_err[i])) * zp;
      zp *= az;
    }
    const long double numer = std::abs(h.p) + 8 * kLdEps * (static_cast<long double>(n) + 1) * h.scale + perturb;
    const long double dp = std::abs(h.dp);
    long double err = dp > 0 ? n * numer / dp : std::numeric_limits<long double>::infinity();
    // Past a multiple or tightly clustered root the Newton disc is
    // meaningless; fall back to the root-of-residual scale.
    const long double lead = std::abs(a.back());
    const long double cluster = std::pow(numer / lead, 1.0L / n) * 2;
    err = std::min(err, std::max(cluster, static_cast<long double>(n) * numer / lead));
    r.err = static_cast<double>(err) + 2 * kDblEps * static_cast<double>(az);
    r.residual = h.scale > 0 ? static_cast<double>(std::abs(h.p) / h.scale) : 0.0;
    const double allowed = options.tolerance + (h.scale > 0 ? static_cast<double>(perturb / h.scale) : 0.0);
    if (!(r.residual <= allowed)) {
      raise(ErrorCode::NumericFailure, "root iteration did not converge to the requested tolerance");
    }
  }
  return out;
}

// Continued-fraction reconstruction of a rational close to x.
bool reconstruct(long double x, long double tol, Rat& out) {
  if (!std::isfinite(x)) return false;
  if (std::abs(x) <= tol) {
    out = Rat();
    return true;
  }
  mpz_class h_prev = 1;
  mpz_class h = 0;
  mpz_class k_prev = 0;
  mpz_class k = 1;
  long double frac = x;
  for (int step = 0; step < 64; ++step) {
    const long double fl = std::floor(frac);
    if (std::abs(fl) > 1e18L) return false;
    const mpz_class a(static_cast<double>(fl));
    const mpz_class h_next = a * h_prev + h;
    const mpz_class k_next = a * k_prev + k;
    h = h_prev;
    k = k_prev;
    h_prev = h_next;
    k_prev = k_next;
    if (k_prev > mpz_class("1000000000")) return false;
    const Rat candidate(h_prev, k_prev);
    const long double approx = static_cast<long double>(candidate.to_long_double());
    if (std::abs(approx - x) <= tol) {
      out = candidate;
      return true;
    }
    const long double rest = frac - fl;
    if (rest == 0) return false;
    frac = 1 / rest;
  }
  return false;
}

std::vector<LComplex> to_ld(const XPoly& p) {
  std::vector<LComplex> a;
  a.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) a.emplace_back(c.to_long_double(), 0);
  return a;
}

Complex to_complex(const Approx& r) {
  return Complex::approx({static_cast<double>(r.z.real()), static_cast<double>(r.z.imag())}, r.err);
}

// Exact candidate for an approximate root of an exactly known polynomial;
// returns true (with the exact value) only after exact verification.
template <typename P>
bool exactify(const P& p, const Approx& r, bool allow_complex, Complex& out) {
  const long double scale = std::max<long double>(1, std::abs(r.z));
  const long double tol = std::max<long double>(static_cast<long double>(r.err), 1e-15L * scale);
  Rat re;
  if (!reconstruct(r.z.real(), tol, re)) return false;
  Rat im;
  if (std::abs(r.z.imag()) > tol) {
    if (!allow_complex || !reconstruct(r.z.imag(), tol, im)) return false;
  }
  const Complex candidate(re, im);
  if (!p.eval(candidate).is_zero()) return false;
  out = candidate;
  return true;
}

std::vector<Complex> solve_squarefree(const XPoly& f, bool numeric) {
  std::vector<Complex> roots;
  if (f.degree() == 1) {
    roots.emplace_back(-f.coeff(0) / f.coeff(1));
    return roots;
  }
  XPoly g = f;
  const int v = g.valuation();
  if (v > 0) {
    roots.emplace_back(Rat());
    g = g.shift_down(v);
  }
  const XPoly prim = primitive(g);
  RootOptions opts;
  opts.tolerance = 1e-12;
  const auto approx = aberth(to_ld(prim), {}, opts);
  for (const auto& r : approx) {
    Complex exact;
    if (exactify(prim, r, numeric, exact)) {
      if (std::find(roots.begin(), roots.end(), exact) == roots.end()) roots.push_back(exact);
    } else if (numeric) {
      roots.push_back(to_complex(r));
    }
  }
  return roots;
}

void sort_roots(std::vector<Root>& roots) {
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) { return complex_less(a.value, b.value); });
}

}  // namespace

std::vector<Root> root_find(const XPoly& p, const RootOptions& options) {
  if (p.is_zero()) raise(ErrorCode::ZeroPolynomial, "root_find on the zero polynomial");
  std::vector<Root> out;
  const bool numeric = options.mode == RootMode::Numeric;
  for (const auto& [factor, mult] : squarefree_factorization(p)) {
    for (const auto& z : solve_squarefree(factor, numeric)) {
      Root r{z, mult, 0.0};
      if (!z.is_exact()) {
        const CPoly cf = to_cpoly(factor);
        const double scale = magnitude_at(cf, z.abs());
        r.residual = scale > 0 ? std::abs(cf.eval(z).value()) / scale : 0.0;
      }
      if (options.mode == RootMode::NegativeIntegers) {
        if (!z.is_exact_real() || !z.re().is_integer() || z.re().sign() >= 0) continue;
      }
      out.push_back(r);
    }
  }
  sort_roots(out);
  return out;
}

std::vector<Root> root_find(const CPoly& p, const RootOptions& options) {
  if (p.is_zero()) raise(ErrorCode::ZeroPolynomial, "root_find on the zero polynomial");
  XPoly rational;
  if (to_xpoly(p, rational)) {
    RootOptions o = options;
    o.mode = RootMode::Numeric;
    return root_find(rational, o);
  }
  std::vector<Root> out;
  const int v = p.valuation();
  bool exact_low = true;
  for (int i = 0; i < v; ++i) exact_low = exact_low && p.coeff(i).is_exact();
  if (v > 0) {
    double bound = 0;
    for (int i = 0; i < v; ++i) bound = std::max(bound, p.coeff(i).error());
    out.push_back({exact_low ? Complex() : Complex::approx({0, 0}, bound), v, 0.0});
  }
  std::vector<LComplex> a;
  std::vector<double> err;
  for (int i = v; i <= p.degree(); ++i) {
    const auto c = p.coeff(i).value();
    a.emplace_back(c.real(), c.imag());
    err.push_back(p.coeff(i).error());
  }
  if (a.size() <= 1) {
    sort_roots(out);
    return out;
  }
  const bool exact = is_exact(p);
  const CPoly reduced = p.shift_down(v);
  const auto approx = aberth(a, err, options);

  // Merge roots whose inclusion discs overlap.
  const std::size_t n = approx.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(approx[i].z - approx[j].z) <= approx[i].err + approx[j].err) parent[find(i)] = find(j);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (find(i) != i) continue;
    LComplex mean = 0;
    int count = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (find(j) == i) {
        mean += approx[j].z;
        ++count;
      }
    }
    mean /= static_cast<long double>(count);
    double radius = 0;
    double residual = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (find(j) != i) continue;
      radius = std::max(radius, static_cast<double>(std::abs(approx[j].z - mean)) + approx[j].err);
      residual = std::max(residual, approx[j].residual);
    }
    Approx merged{mean, radius, residual};
    Complex value;
    if (!(exact && count == 1 && exactify(reduced, merged, true, value))) value = to_complex(merged);
    out.push_back({value, count, value.is_exact() ? 0.0 : residual});
  }
  sort_roots(out);
  return out;
}

}  // namespace odepoly
