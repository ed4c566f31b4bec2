#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "odepoly/bipoly.hpp"
#include "odepoly/diffpoly.hpp"

namespace odepoly {

enum class Verdict { Pass, Fail, NumericPass, Undecided, Skipped };

std::string to_string(Verdict v);

struct FuchsCondition {
  Verdict verdict = Verdict::Undecided;
  /// Offending coefficient, non-integral branch or (k, m) pair.
  std::string witness;
  /// Relative residual tolerance behind a NumericPass.
  double tolerance = 0.0;
};

struct FuchsOptions {
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
  int samples = 3;
};

struct FuchsReport {
  /// Leading coefficient free of y; deg_y A_k <= 2k; discriminant branches
  /// are integrals; Puiseux exponents k/m of y' satisfy k >= m - 1.
  std::array<FuchsCondition, 4> conditions;
  /// Res_{y'}(F, dF/dy') in (u = x, v = y).
  BiPoly discriminant;
  /// The discriminant without x-content and repeated factors.
  BiPoly discriminant_reduced;
  std::uint64_t seed = 0;
  /// Sample abscissae used for the numeric checks.
  std::vector<Rat> samples;
  /// (k, m) of every discriminant branch expansion examined.
  std::vector<std::pair<int, int>> exponents;

  bool passes() const;
};

/// F as a polynomial in p = y' with coefficients in (u = x, v = y).
Poly<BiPoly> fuchs_form(const DiffPoly& f);

/// The four-condition test for movable critical points of a first-order
/// equation. Raises NotFirstOrder for other orders.
FuchsReport fuchs_check(const DiffPoly& f, const FuchsOptions& options = {});

}  // namespace odepoly
