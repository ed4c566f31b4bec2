#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "odepoly/complex.hpp"
#include "odepoly/errors.hpp"
#include "odepoly/rational.hpp"

namespace odepoly {

inline bool is_zero(const Rat& r) { return r.is_zero(); }
inline bool is_zero(const Complex& c) { return c.is_zero(); }
inline Rat exact_div(const Rat& a, const Rat& b) { return a / b; }
inline Complex exact_div(const Complex& a, const Complex& b) { return a / b; }

template <typename K>
class Poly;
template <typename K>
bool is_zero(const Poly<K>& p);

/// Dense univariate polynomial over a coefficient ring K. coeffs()[i] is the
/// coefficient of the i-th power; the leading stored coefficient is nonzero,
/// so the zero polynomial has no coefficients and degree -1.
///
/// K is Rat, Complex, or another Poly (giving the recursive bivariate
/// representation used by BiPoly).
template <typename K>
class Poly {
 public:
  using Coeff = K;

  Poly() = default;
  Poly(K constant) {  // NOLINT(google-explicit-constructor)
    if (!odepoly::is_zero(constant)) c_.push_back(std::move(constant));
  }
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(K coeff, int exponent) {
    if (odepoly::is_zero(coeff)) return {};
    std::vector<K> c(static_cast<std::size_t>(exponent) + 1);
    c.back() = std::move(coeff);
    return Poly(std::move(c));
  }
  static Poly variable() { return monomial(K(Rat(1)), 1); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  const std::vector<K>& coeffs() const noexcept { return c_; }

  K coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return K();
    return c_[static_cast<std::size_t>(i)];
  }
  const K& lc() const {
    if (c_.empty()) raise(ErrorCode::ZeroPolynomial, "leading coefficient of the zero polynomial");
    return c_.back();
  }
  /// Lowest exponent with a nonzero coefficient; -1 for the zero polynomial.
  int valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!odepoly::is_zero(c_[i])) return static_cast<int>(i);
    }
    return -1;
  }

  template <typename V>
  V eval(const V& at) const {
    V r{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * at + V(*it);
    return r;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<K> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * K(Rat(static_cast<long>(i)));
    return Poly(std::move(d));
  }

  /// p(x + a).
  Poly shift(const K& a) const {
    if (odepoly::is_zero(a) || c_.size() <= 1) return *this;
    // Taylor shift by repeated synthetic division.
    std::vector<K> r = c_;
    const std::size_t n = r.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = n - 1; j > i; --j) r[j - 1] += r[j] * a;
    }
    return Poly(std::move(r));
  }

  /// p(s * x).
  Poly scale(const K& s) const {
    std::vector<K> r = c_;
    K f(Rat(1));
    for (auto& c : r) {
      c *= f;
      f *= s;
    }
    return Poly(std::move(r));
  }

  /// x^k * p(1/x) where k = degree (coefficient reversal).
  Poly reversed() const {
    std::vector<K> r(c_.rbegin(), c_.rend());
    return Poly(std::move(r));
  }

  /// p / x^k when the division is exact.
  Poly shift_down(int k) const {
    if (k <= 0 || c_.empty()) return *this;
    if (valuation() < k) raise(ErrorCode::InvalidArgument, "shift_down beyond valuation");
    return Poly(std::vector<K>(c_.begin() + k, c_.end()));
  }
  Poly shift_up(int k) const {
    if (k <= 0 || c_.empty()) return *this;
    std::vector<K> r(static_cast<std::size_t>(k));
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(std::move(r));
  }

  Poly pow(int e) const {
    Poly result(K(Rat(1)));
    Poly base = *this;
    while (e > 0) {
      if ((e & 1) != 0) result *= base;
      e >>= 1;
      if (e > 0) base *= base;
    }
    return result;
  }

  template <typename F>
  auto map(F&& f) const -> Poly<decltype(f(std::declval<const K&>()))> {
    using R = decltype(f(std::declval<const K&>()));
    std::vector<R> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(f(c));
    return Poly<R>(std::move(r));
  }

  Poly operator-() const {
    std::vector<K> r = c_;
    for (auto& c : r) c = -c;
    return Poly(std::move(r));
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }
  Poly& operator*=(const K& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<K> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (odepoly::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(Poly a, const K& s) { return a *= s; }
  friend Poly operator*(const K& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && odepoly::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<K> c_;
};

template <typename K>
bool is_zero(const Poly<K>& p) {
  return p.is_zero();
}

/// Exact quotient a / b; raises InvalidArgument when b does not divide a.
/// Works recursively: the coefficient ring must itself support exact_div.
template <typename K>
Poly<K> exact_div(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) raise(ErrorCode::ZeroDenominator, "polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) raise(ErrorCode::InvalidArgument, "inexact polynomial division");
  std::vector<K> rem = a.coeffs();
  std::vector<K> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const auto& bc = b.coeffs();
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    const auto top = static_cast<std::size_t>(k + db);
    if (is_zero(rem[top])) continue;
    K q = exact_div(rem[top], bc.back());
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * bc[static_cast<std::size_t>(j)];
    quot[static_cast<std::size_t>(k)] = std::move(q);
  }
  for (const auto& r : rem) {
    if (!is_zero(r)) raise(ErrorCode::InvalidArgument, "inexact polynomial division");
  }
  return Poly<K>(std::move(quot));
}

/// Quotient and remainder over a field coefficient ring (Rat or Complex).
template <typename K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) raise(ErrorCode::ZeroDenominator, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<K>(), a};
  std::vector<K> rem = a.coeffs();
  std::vector<K> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const auto& bc = b.coeffs();
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    const auto top = static_cast<std::size_t>(k + db);
    if (is_zero(rem[top])) continue;
    K q = rem[top] / bc.back();
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * bc[static_cast<std::size_t>(j)];
    rem[top] = K();
    quot[static_cast<std::size_t>(k)] = std::move(q);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly<K>(std::move(quot)), Poly<K>(std::move(rem))};
}

/// Pseudo-remainder prem(a, b) = lc(b)^(deg a - deg b + 1) a mod b, computed
/// without division in K.
template <typename K>
Poly<K> prem(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) raise(ErrorCode::ZeroDenominator, "pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<K> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const K& l = bc.back();
  int da = a.degree();
  int steps = da - db + 1;
  while (da >= db) {
    const K top = r[static_cast<std::size_t>(da)];
    for (auto& c : r) c *= l;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(da - db + j)] -= top * bc[static_cast<std::size_t>(j)];
    r.resize(static_cast<std::size_t>(da));
    --steps;
    --da;
    while (da >= 0 && is_zero(r[static_cast<std::size_t>(da)])) {
      r.pop_back();
      --da;
    }
  }
  Poly<K> result(std::move(r));
  for (; steps > 0; --steps) result *= l;
  return result;
}

}  // namespace odepoly
