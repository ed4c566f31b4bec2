#include "odepoly/rational.hpp"

#include <cmath>
#include <ostream>

#include "odepoly/errors.hpp"

namespace odepoly {

Rat::Rat(long numerator, long denominator) {
  if (denominator == 0) raise(ErrorCode::ZeroDenominator, "rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rat::Rat(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) raise(ErrorCode::ZeroDenominator, "rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rat::Rat(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(mpz_class(s, 10));
    return Rat(mpz_class(s.substr(0, slash), 10), mpz_class(s.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    raise(ErrorCode::InvalidArgument, "not a rational number: '" + s + "'");
  }
}

long double Rat::to_long_double() const {
  // Scale so that both parts fit a double's exponent range before dividing.
  const long double n = value_.get_num().get_d();
  const long double d = value_.get_den().get_d();
  if (std::isfinite(static_cast<double>(n)) && std::isfinite(static_cast<double>(d)) && d != 0) {
    return n / d;
  }
  return value_.get_d();
}

long Rat::to_long() const { return value_.get_num().get_si(); }

std::string Rat::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rat Rat::abs() const { return Rat(mpq_class(::abs(value_))); }

Rat Rat::inverse() const {
  if (is_zero()) raise(ErrorCode::ZeroDenominator, "inverse of zero");
  return Rat(mpq_class(1) / value_);
}

Rat Rat::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rat(n, d);
}

Rat Rat::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return Rat(q);
}

Rat Rat::operator-() const { return Rat(mpq_class(-value_)); }

Rat& Rat::operator+=(const Rat& rhs) {
  value_ += rhs.value_;
  return *this;
}
Rat& Rat::operator-=(const Rat& rhs) {
  value_ -= rhs.value_;
  return *this;
}
Rat& Rat::operator*=(const Rat& rhs) {
  value_ *= rhs.value_;
  return *this;
}
Rat& Rat::operator/=(const Rat& rhs) {
  if (rhs.is_zero()) raise(ErrorCode::ZeroDenominator, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

bool exact_root(const Rat& value, int k, Rat& root) {
  if (k <= 0) return false;
  if (value.sign() < 0) {
    if (k % 2 == 0) return false;
    Rat r;
    if (!exact_root(-value, k, r)) return false;
    root = -r;
    return true;
  }
  mpz_class n, d;
  if (mpz_root(n.get_mpz_t(), value.raw().get_num_mpz_t(), static_cast<unsigned long>(k)) == 0) return false;
  if (mpz_root(d.get_mpz_t(), value.raw().get_den_mpz_t(), static_cast<unsigned long>(k)) == 0) return false;
  root = Rat(n, d);
  return true;
}

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace odepoly
