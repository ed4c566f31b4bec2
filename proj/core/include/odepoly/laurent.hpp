#pragma once

#include <optional>
#include <vector>

#include "odepoly/complex.hpp"

namespace odepoly {

/// Finite Laurent polynomial sum c_n s^n, n >= low, with tagged complex
/// coefficients. Used for exact substitution of truncated Puiseux series,
/// where s = (x - x0)^{1/q}.
class Laurent {
 public:
  Laurent() = default;
  static Laurent monomial(const Complex& c, int n);

  bool is_zero() const;
  int low() const noexcept { return low_; }
  const std::vector<Complex>& coeffs() const noexcept { return c_; }
  Complex coeff(int n) const;

  /// Lowest exponent whose coefficient is not (indistinguishable from) zero.
  std::optional<int> valuation() const;

  /// d/dx where x - x0 = s^q.
  Laurent derivative(int q) const;

  Laurent& operator+=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend Laurent operator*(const Complex& s, const Laurent& a);

 private:
  int low_ = 0;
  std::vector<Complex> c_;
};

}  // namespace odepoly
