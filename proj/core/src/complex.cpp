#include "odepoly/complex.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "odepoly/errors.hpp"

namespace odepoly {
namespace {

constexpr double kUnit = std::numeric_limits<double>::epsilon();
// Approximations within this many error bounds of zero count as zero.
constexpr double kZeroSlack = 64.0;
constexpr double kTiny = 1e-300;

std::complex<double> exact_value(const Rat& re, const Rat& im) {
  return {re.to_double(), im.to_double()};
}

}  // namespace

Complex::Complex(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

Complex Complex::approx(std::complex<double> value, double error) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag()) || !std::isfinite(error)) {
    raise(ErrorCode::NumericFailure, "non-finite approximate value");
  }
  Complex c;
  c.exact_ = false;
  c.approx_ = value;
  c.err_ = std::max(error, 0.0);
  return c;
}

const Rat& Complex::re() const {
  if (!exact_) raise(ErrorCode::InvalidArgument, "exact part requested from an approximation");
  return re_;
}

const Rat& Complex::im() const {
  if (!exact_) raise(ErrorCode::InvalidArgument, "exact part requested from an approximation");
  return im_;
}

std::complex<double> Complex::value() const { return exact_ ? exact_value(re_, im_) : approx_; }

bool Complex::is_zero() const {
  if (exact_) return re_.is_zero() && im_.is_zero();
  return std::abs(approx_) <= kZeroSlack * err_ + kTiny;
}

Complex Complex::to_approx() const {
  if (!exact_) return *this;
  const auto v = exact_value(re_, im_);
  return approx(v, kUnit * std::abs(v) + kTiny);
}

Complex Complex::conj() const {
  if (exact_) return Complex(re_, -im_);
  return approx(std::conj(approx_), err_);
}

Complex Complex::pow(int exponent) const {
  if (exponent < 0) return Complex(1) / pow(-exponent);
  Complex result(1);
  Complex base = *this;
  auto e = static_cast<unsigned>(exponent);
  while (e != 0) {
    if ((e & 1U) != 0) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

Complex Complex::operator-() const {
  if (exact_) return Complex(-re_, -im_);
  return approx(-approx_, err_);
}

Complex& Complex::operator+=(const Complex& rhs) {
  if (exact_ && rhs.exact_) {
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
  }
  const Complex a = to_approx();
  const Complex b = rhs.to_approx();
  const auto v = a.approx_ + b.approx_;
  *this = approx(v, a.err_ + b.err_ + 2 * kUnit * std::abs(v));
  return *this;
}

Complex& Complex::operator-=(const Complex& rhs) { return *this += -rhs; }

Complex& Complex::operator*=(const Complex& rhs) {
  if (exact_ && rhs.exact_) {
    Rat re = re_ * rhs.re_ - im_ * rhs.im_;
    Rat im = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  const Complex a = to_approx();
  const Complex b = rhs.to_approx();
  const auto v = a.approx_ * b.approx_;
  const double e = std::abs(a.approx_) * b.err_ + std::abs(b.approx_) * a.err_ + a.err_ * b.err_ +
                   4 * kUnit * std::abs(v);
  *this = approx(v, e);
  return *this;
}

Complex& Complex::operator/=(const Complex& rhs) {
  if (rhs.exact_ && rhs.re_.is_zero() && rhs.im_.is_zero()) {
    raise(ErrorCode::ZeroDenominator, "complex division by zero");
  }
  if (exact_ && rhs.exact_) {
    const Rat norm = rhs.re_ * rhs.re_ + rhs.im_ * rhs.im_;
    Rat re = (re_ * rhs.re_ + im_ * rhs.im_) / norm;
    Rat im = (im_ * rhs.re_ - re_ * rhs.im_) / norm;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  const Complex a = to_approx();
  const Complex b = rhs.to_approx();
  const double mag = std::abs(b.approx_);
  if (mag <= b.err_) raise(ErrorCode::NumericFailure, "division by a value indistinguishable from zero");
  const auto v = a.approx_ / b.approx_;
  const double e = (a.err_ + std::abs(v) * b.err_) / (mag - b.err_) + 4 * kUnit * std::abs(v);
  *this = approx(v, e);
  return *this;
}

bool operator==(const Complex& a, const Complex& b) {
  if (a.exact_ != b.exact_) return false;
  if (a.exact_) return a.re_ == b.re_ && a.im_ == b.im_;
  return a.approx_ == b.approx_ && a.err_ == b.err_;
}

std::string Complex::str() const {
  if (exact_) {
    if (im_.is_zero()) return re_.str();
    std::string s = re_.is_zero() ? "" : re_.str();
    if (im_.sign() > 0 && !s.empty()) s += "+";
    if (im_ == Rat(-1)) return s + "-i";
    if (im_.is_one()) return s + "i";
    return s + im_.str() + "*i";
  }
  std::ostringstream os;
  os.precision(17);
  os << "(" << approx_.real() << (approx_.imag() < 0 ? "" : "+") << approx_.imag() << "i ~" << err_ << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Complex& c) { return os << c.str(); }

Complex kth_root(const Complex& value, int k) {
  if (k <= 0) raise(ErrorCode::InvalidArgument, "root index must be positive");
  if (k == 1) return value;
  if (value.is_exact_real()) {
    const Rat& r = value.re();
    Rat root;
    if (r.sign() >= 0 && exact_root(r, k, root)) return Complex(root);
    if (r.sign() < 0 && k % 2 == 1 && exact_root(-r, k, root)) return Complex(-root);
    if (r.sign() < 0 && k == 2 && exact_root(-r, 2, root)) return Complex(Rat(), root);
  }
  const auto v = value.value();
  const double mag = std::abs(v);
  const auto root = std::pow(v, 1.0 / k);
  // d(z^{1/k}) = z^{1/k} / (k z) dz
  const double propagated =
      mag > value.error() ? std::abs(root) * value.error() / (k * (mag - value.error()))
                          : std::pow(2 * value.error() + kTiny, 1.0 / k);
  return Complex::approx(root, propagated + 8 * kUnit * std::abs(root));
}

bool complex_less(const Complex& a, const Complex& b) {
  if (a.is_exact() && b.is_exact()) {
    if (a.re() != b.re()) return a.re() < b.re();
    return a.im() < b.im();
  }
  const auto va = a.value();
  const auto vb = b.value();
  if (va.real() != vb.real()) return va.real() < vb.real();
  return va.imag() < vb.imag();
}

bool complex_close(const Complex& a, const Complex& b, double tolerance) {
  if (a.is_exact() && b.is_exact()) return a == b;
  const double d = std::abs(a.value() - b.value());
  const double scale = std::max({1.0, a.abs(), b.abs()});
  return d <= kZeroSlack * (a.error() + b.error()) + tolerance * scale;
}

}  // namespace odepoly
