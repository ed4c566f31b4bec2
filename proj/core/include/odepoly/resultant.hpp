#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "odepoly/bipoly.hpp"

namespace odepoly {

/// Sylvester matrix of p (degree m) and q (degree n) in their main
/// variable: n shifted rows of p's coefficients followed by m shifted rows
/// of q's, highest power first.
template <typename R>
std::vector<std::vector<R>> sylvester_matrix(const Poly<R>& p, const Poly<R>& q) {
  const int m = p.degree();
  const int n = q.degree();
  const auto size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<R>> s(size, std::vector<R>(size));
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k <= m; ++k) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = p.coeff(m - k);
  }
  for (int r = 0; r < m; ++r) {
    for (int k = 0; k <= n; ++k) s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = q.coeff(n - k);
  }
  return s;
}

/// Fraction-free (Bareiss) determinant over an integral domain whose
/// exact_div is available.
template <typename R>
R bareiss_determinant(std::vector<std::vector<R>> a) {
  const std::size_t n = a.size();
  if (n == 0) return R(Rat(1));
  bool negate = false;
  R prev(Rat(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a[k][k])) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && is_zero(a[swap_row][k])) ++swap_row;
      if (swap_row == n) return R();
      std::swap(a[k], a[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = exact_div(t, prev);
      }
      a[i][k] = R();
    }
    prev = a[k][k];
  }
  R det = a[n - 1][n - 1];
  return negate ? -det : det;
}

/// Res(p, q) with respect to the main variable. Raises ZeroPolynomial when
/// either input is zero.
template <typename R>
R sylvester_resultant(const Poly<R>& p, const Poly<R>& q) {
  if (p.is_zero() || q.is_zero()) raise(ErrorCode::ZeroPolynomial, "resultant with a zero polynomial");
  if (p.degree() == 0 && q.degree() == 0) return R(Rat(1));
  if (q.degree() == 0) return Poly<R>(q.lc()).pow(p.degree()).lc();
  if (p.degree() == 0) return Poly<R>(p.lc()).pow(q.degree()).lc();
  return bareiss_determinant(sylvester_matrix(p, q));
}

inline Rat resultant(const XPoly& p, const XPoly& q) { return sylvester_resultant(p, q); }

/// Res_var(p, q) as a polynomial in the other variable.
XPoly resultant(const BiPoly& p, const BiPoly& q, Var var);

/// Discriminant-style resultant Res(f, df/dv).
XPoly discriminant(const BiPoly& f, Var var);

}  // namespace odepoly
