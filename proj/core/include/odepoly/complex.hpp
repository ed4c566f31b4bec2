#pragma once

#include <complex>
#include <concepts>
#include <iosfwd>
#include <string>

#include "odepoly/rational.hpp"

namespace odepoly {

/// A complex number that is either exact (a Gaussian rational re + i*im)
/// or an approximation carrying an absolute error bound. Exact and
/// approximate values are never mixed silently: any operation touching an
/// approximation yields an approximation whose bound accounts for the
/// inputs' bounds and floating-point rounding.
class Complex {
 public:
  Complex() = default;
  Complex(Rat re, Rat im = Rat());  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  Complex(I n) : re_(n) {}  // NOLINT(google-explicit-constructor)

  static Complex approx(std::complex<double> value, double error);

  bool is_exact() const noexcept { return exact_; }
  bool is_exact_real() const { return exact_ && im_.is_zero(); }
  /// Exact parts; raises InvalidArgument on approximations.
  const Rat& re() const;
  const Rat& im() const;

  std::complex<double> value() const;
  /// Absolute error bound; zero for exact values.
  double error() const noexcept { return exact_ ? 0.0 : err_; }

  /// True when the value is exactly zero, or when an approximation cannot
  /// be distinguished from zero given its error bound.
  bool is_zero() const;
  double abs() const { return std::abs(value()); }

  Complex conj() const;
  Complex pow(int exponent) const;
  /// Returns the approximate version of this value (no-op for approximations).
  Complex to_approx() const;

  Complex operator-() const;
  Complex& operator+=(const Complex& rhs);
  Complex& operator-=(const Complex& rhs);
  Complex& operator*=(const Complex& rhs);
  Complex& operator/=(const Complex& rhs);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }

  /// Structural equality: exact values compare exactly, approximations
  /// compare value and bound bitwise.
  friend bool operator==(const Complex& a, const Complex& b);

  std::string str() const;

 private:
  bool exact_ = true;
  Rat re_;
  Rat im_;
  std::complex<double> approx_{};
  double err_ = 0.0;
};

std::ostream& operator<<(std::ostream& os, const Complex& c);

/// One k-th root of `value`. Exact perfect powers give exact roots (the real
/// root for odd k, i*sqrt(-r) for k = 2 and negative r); anything else gives
/// the principal root as an approximation.
Complex kth_root(const Complex& value, int k);

/// Orders by real part, then imaginary part (approximate values by their
/// floating value). Used for deterministic branch ordering.
bool complex_less(const Complex& a, const Complex& b);

/// True when |a - b| is within the combined error bounds plus `tolerance`
/// relative to the magnitudes.
bool complex_close(const Complex& a, const Complex& b, double tolerance);

}  // namespace odepoly
