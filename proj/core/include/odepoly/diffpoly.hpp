#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "odepoly/puiseux_series.hpp"
#include "odepoly/xpoly.hpp"

namespace odepoly {

/// phi(x) * y^{m0} (y')^{m1} ... (y^{(n)})^{mn}.
struct DiffMonomial {
  XPoly coeff;
  std::vector<int> exponents;

  /// Total degree M = sum m_j.
  int total_degree() const;
  /// Weight N = sum j * m_j.
  int weight() const;
  int exponent(int j) const { return j < static_cast<int>(exponents.size()) ? exponents[static_cast<std::size_t>(j)] : 0; }
};

/// Differential polynomial in y, y', ..., y^{(n)} with coefficients in Q[x].
/// Monomials are merged and kept in canonical order, so two DiffPolys are
/// equal exactly when they are structurally equal. Arithmetic may produce
/// the zero polynomial; equations built by normalize() never are.
class DiffPoly {
 public:
  DiffPoly() = default;

  /// Merges like terms, drops zero coefficients and recomputes the order.
  /// Raises EmptyEquation when nothing survives. A nonnegative
  /// declared_order rejects monomials using higher derivatives.
  static DiffPoly normalize(const std::vector<DiffMonomial>& raw, int declared_order = -1);

  static DiffPoly constant(const XPoly& c);
  /// The variable y^{(k)}.
  static DiffPoly derivative_var(int k);

  /// Highest derivative actually occurring (0 when only y or constants occur).
  int order() const noexcept { return order_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Canonical order: descending, highest derivative most significant.
  std::vector<DiffMonomial> monomials() const;
  std::size_t size() const noexcept { return terms_.size(); }

  /// True when no coefficient depends on x.
  bool autonomous() const;
  /// Maximum x-degree over the coefficients.
  int coeff_degree() const;

  /// Total derivative with respect to x.
  DiffPoly derivative() const;
  DiffPoly pow(int e) const;

  template <typename F>
  DiffPoly map_coeffs(F&& f) const {
    DiffPoly r;
    for (const auto& [k, c] : terms_) r.add_term(k, f(c));
    r.finish();
    return r;
  }

  DiffPoly operator-() const;
  DiffPoly& operator+=(const DiffPoly& o);
  DiffPoly& operator-=(const DiffPoly& o);
  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator*(const XPoly& s, const DiffPoly& a);
  friend bool operator==(const DiffPoly& a, const DiffPoly& b) { return a.terms_ == b.terms_; }

  /// Parseable text, e.g. "x*y'^3 + y'*y - 1".
  std::string str() const;

 private:
  struct KeyLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
  };
  void add_term(std::vector<int> key, const XPoly& c);
  void finish();

  std::map<std::vector<int>, XPoly, KeyLess> terms_;
  int order_ = 0;
};

/// Text of y^{(k)}: y, y', y'', y''', y^(4), ...
std::string derivative_name(int k);

struct SingularSet {
  /// Rational singular points, ascending.
  std::vector<Rat> points;
  /// Monic squarefree polynomial without rational roots whose roots are the
  /// remaining (irrational) singular points; 1 when there are none.
  XPoly algebraic = XPoly(Rat(1));
  bool includes_infinity = false;

  bool contains(const Rat& x) const;
};

/// Zeros of every coefficient, plus infinity when the equation under
/// x = 1/t has a coefficient vanishing at t = 0.
SingularSet singular_points(const DiffPoly& f);

enum class TransformMode { Shift, ReciprocalY, InverseX };

/// x = z + x0: coefficients phi(z + x0).
DiffPoly shift(const DiffPoly& f, const Rat& x0);
/// y = 1/w, cleared of w-denominators and of a common w-power.
DiffPoly reciprocal_y(const DiffPoly& f);
/// x = 1/t with d/dx = -t^2 d/dt, cleared of t-denominators and of a common
/// t-power. The result is written in x for the new independent variable.
DiffPoly inverse_x(const DiffPoly& f);
DiffPoly transform(const DiffPoly& f, TransformMode mode, const Rat& x0 = Rat());

/// y = c + u.
DiffPoly shift_dependent(const DiffPoly& f, const Rat& c);

struct SubstitutionResult {
  /// Valuation in (x - x0); empty means the series annihilates f exactly
  /// (to working precision for approximate coefficients).
  std::optional<Rat> valuation;
  Complex coeff;
};

SubstitutionResult substitute_series(const DiffPoly& f, const PuiseuxSeries& s);

}  // namespace odepoly
