#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

namespace odepoly {

/// Exact rational number in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() = default;
  template <std::integral I>
  Rat(I n) : value_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rat(long numerator, long denominator);
  explicit Rat(const mpz_class& n) : value_(n) {}
  Rat(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rat(mpq_class q);

  /// Parses "p", "-p" or "p/q".
  static Rat parse(std::string_view text);

  const mpq_class& raw() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  bool is_one() const { return value_ == 1; }
  int sign() const noexcept { return sgn(value_); }

  double to_double() const { return value_.get_d(); }
  long double to_long_double() const;
  /// Returns the value as a machine integer; only valid when is_integer()
  /// and the value fits.
  long to_long() const;
  std::string str() const;

  Rat abs() const;
  Rat inverse() const;
  Rat pow(int exponent) const;
  Rat floor() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& rhs);
  Rat& operator-=(const Rat& rhs);
  Rat& operator*=(const Rat& rhs);
  Rat& operator/=(const Rat& rhs);

  friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
  friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
  friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Exact k-th root of a nonnegative rational when it is a perfect power.
bool exact_root(const Rat& value, int k, Rat& root);

mpz_class gcd(const mpz_class& a, const mpz_class& b);
mpz_class lcm(const mpz_class& a, const mpz_class& b);

}  // namespace odepoly
