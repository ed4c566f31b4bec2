#include "odepoly/laurent.hpp"

#include <algorithm>

namespace odepoly {

Laurent Laurent::monomial(const Complex& c, int n) {
  Laurent l;
  l.low_ = n;
  l.c_.push_back(c);
  return l;
}

bool Laurent::is_zero() const { return !valuation().has_value(); }

Complex Laurent::coeff(int n) const {
  const int i = n - low_;
  if (i < 0 || i >= static_cast<int>(c_.size())) return Complex();
  return c_[static_cast<std::size_t>(i)];
}

std::optional<int> Laurent::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return low_ + static_cast<int>(i);
  }
  return std::nullopt;
}

Laurent Laurent::derivative(int q) const {
  Laurent r;
  r.low_ = low_ - q;
  r.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const int n = low_ + static_cast<int>(i);
    r.c_[i] = c_[i] * Complex(Rat(n, q));
  }
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.c_.empty()) return *this;
  if (c_.empty()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(low_ + static_cast<int>(c_.size()), o.low_ + static_cast<int>(o.c_.size()));
  std::vector<Complex> r(static_cast<std::size_t>(hi - lo));
  for (std::size_t i = 0; i < c_.size(); ++i) r[static_cast<std::size_t>(low_ - lo) + i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[static_cast<std::size_t>(o.low_ - lo) + i] += o.c_[i];
  low_ = lo;
  c_ = std::move(r);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  if (a.c_.empty() || b.c_.empty()) return r;
  r.low_ = a.low_ + b.low_;
  r.c_.resize(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero() && a.c_[i].is_exact()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

Laurent operator*(const Complex& s, const Laurent& a) {
  Laurent r = a;
  for (auto& c : r.c_) c = s * c;
  return r;
}

}  // namespace odepoly
