#include "odepoly/special.hpp"

#include "odepoly/errors.hpp"
#include "odepoly/roots.hpp"

namespace odepoly {

std::string to_string(RiccatiVerdict v) {
  switch (v) {
    case RiccatiVerdict::AllSingleValuedRational:
      return "all-single-valued-rational";
    case RiccatiVerdict::AtMostOneTranscendental:
      return "at-most-one-transcendental";
    case RiccatiVerdict::AtMostTwoTranscendental:
      return "at-most-two-transcendental";
    case RiccatiVerdict::RiccatiAtMostThree:
      return "riccati-at-most-three";
  }
  return "riccati-at-most-three";
}

std::string to_string(BinomialVerdict v) {
  switch (v) {
    case BinomialVerdict::Linear:
      return "linear";
    case BinomialVerdict::FormEq7:
      return "chi*(y-a)^(m-1)";
    case BinomialVerdict::FormEq8:
      return "chi*(y-a)*(y-b)";
    case BinomialVerdict::MovableSingularities:
      return "movable-singularities";
  }
  return "movable-singularities";
}

RiccatiClass riccati_classify(const BiPoly& p, const BiPoly& q) {
  if (q.is_zero()) raise(ErrorCode::ZeroDenominator, "Q is zero");
  if (!p.is_zero() && gcd(p, q).degree() > 0) raise(ErrorCode::NotReduced, "P and Q share a factor in w");
  RiccatiClass r;
  r.distinct_root_count = q.degree() > 0 ? squarefree_distinct(q, Var::V).second : 0;
  if (q.degree() == 0) {
    r.verdict = RiccatiVerdict::RiccatiAtMostThree;
  } else if (r.distinct_root_count > 2) {
    r.verdict = RiccatiVerdict::AllSingleValuedRational;
  } else if (r.distinct_root_count == 2) {
    r.verdict = RiccatiVerdict::AtMostOneTranscendental;
  } else {
    r.verdict = RiccatiVerdict::AtMostTwoTranscendental;
  }
  r.is_plain_riccati = q.degree() == 0 && p.degree() <= 2;
  if (!r.is_plain_riccati) {
    r.malmquist_note =
        "not a Riccati equation: by Malmquist's theorem every single-valued solution is rational; "
        "by Golubev's theorem three rational solutions already force this";
  }
  return r;
}

namespace {

// q = beta * p for a constant beta; returns beta.
std::optional<Rat> constant_ratio(const XPoly& q, const XPoly& p) {
  if (q.is_zero()) return Rat();
  const Rat beta = q.lc() / p.lc();
  if (q.degree() != p.degree() || !(q - p * beta).is_zero()) return std::nullopt;
  return beta;
}

}  // namespace

BinomialClass binomial_classify(int m, const BiPoly& numerator, const BiPoly& denominator) {
  if (m < 1) raise(ErrorCode::InvalidM, "m must be at least 1");
  if (denominator.is_zero()) raise(ErrorCode::ZeroDenominator, "R has a zero denominator");
  BinomialClass c;
  c.m = m;
  BiPoly num = numerator;
  BiPoly den = denominator;
  if (!num.is_zero()) {
    const BiPoly g = gcd(num, den);
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  if (den.degree() > 0) {
    c.note = "R is not a polynomial in y";
    return c;
  }
  const int d = num.degree();
  c.yosida_ok = d <= 2 * m;
  const auto linear = [&c](std::string note) {
    c.verdict = BinomialVerdict::Linear;
    c.note = std::move(note);
    return c;
  };
  if (d <= 0) return linear("y' = chi(x)^(1/m)");
  if (m == 1 && d == 1) return linear("linear first-order equation");
  const int count = squarefree_distinct(num, Var::V).second;
  if (d == m && count == 1) return linear("y' = chi(x)^(1/m) * (y - eta(x))");

  const XPoly& top = num.lc();
  if (m >= 2 && d == m - 1 && count == 1) {
    // R = R_d (y - a)^d with a = -R_{d-1} / (d R_d); a must be constant.
    if (const auto beta = constant_ratio(num.coeff(d - 1), top)) {
      c.verdict = BinomialVerdict::FormEq7;
      c.chi = top;
      c.roots.emplace_back(-*beta / Rat(d));
      if (den.lc().degree() > 0 || !den.lc().lc().is_one()) c.note = "chi carries the denominator " + to_string(den.lc());
      return c;
    }
  }
  if (m == 2 && d == 2 && count == 2) {
    const auto beta = constant_ratio(num.coeff(1), top);
    const auto gamma = constant_ratio(num.coeff(0), top);
    if (beta && gamma) {
      c.verdict = BinomialVerdict::FormEq8;
      c.chi = top;
      for (const Root& r : root_find(XPoly(std::vector<Rat>{*gamma, *beta, Rat(1)}))) c.roots.push_back(r.value);
      if (den.lc().degree() > 0 || !den.lc().lc().is_one()) c.note = "chi carries the denominator " + to_string(den.lc());
      return c;
    }
  }
  c.note = "R matches neither the linear form nor a fixed-singularity form";
  return c;
}

PropertyIReport property_I_check(const DiffPoly& f) {
  if (!f.autonomous()) raise(ErrorCode::NotAutonomous, "Property I needs an equation free of x");
  PropertyIReport r;
  r.polygon = petrovic_polygon(f);
  const auto& faces = r.polygon.faces;
  for (const auto& face : faces) {
    if (face.kind != FaceKind::Edge) continue;
    const Rat& s = *face.slope;
    if (s.sign() < 0 && s.is_integer()) {
      r.holds = true;
      r.witness = PropertyIWitness{face, s, false, false};
      return r;
    }
  }
  for (std::size_t k = 0; k < faces.size(); ++k) {
    const Face& face = faces[k];
    if (face.kind != FaceKind::Vertex) continue;
    const XPoly cp = eval_u(characteristic_polynomial(f, r.polygon, face.endpoints[0]).generic, Rat());
    if (cp.degree() <= 0) continue;
    r.checked_vertices.push_back(face.endpoints[0]);
    const Face* left = k > 0 ? &faces[k - 1] : nullptr;
    const Face* right = k + 1 < faces.size() ? &faces[k + 1] : nullptr;
    RootOptions opts;
    opts.mode = RootMode::NegativeIntegers;
    for (const Root& root : root_find(cp, opts)) {
      const Rat& lambda = root.value.re();
      if (right && !(lambda > *right->slope)) continue;
      if (left && !(lambda < *left->slope)) continue;
      if (!r.holds) {
        r.holds = true;
        r.witness = PropertyIWitness{face, lambda, true, left == nullptr || right == nullptr};
      }
    }
  }
  return r;
}

FirstIntegralReport partial_first_integral_report(const DiffPoly& f, const DiffPoly& psi,
                                                  const std::string& r_description) {
  if (!f.autonomous()) raise(ErrorCode::NotAutonomous, "the equation must be free of x");
  FirstIntegralReport r;
  r.psi = property_I_check(psi);
  r.first_integral = !r.psi.holds;
  if (r.first_integral) {
    r.text = r_description + " = const is a partial first integral along double-periodic solutions of " + f.str() +
             " = 0";
  } else {
    r.text = "the transformed equation has Property I; no partial first integral follows";
  }
  return r;
}

}  // namespace odepoly
