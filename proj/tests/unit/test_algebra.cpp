#include <doctest.h>

#include "odepoly/errors.hpp"
#include "odepoly/fuchs.hpp"
#include "odepoly/newton_puiseux.hpp"
#include "odepoly/resultant.hpp"
#include "odepoly/roots.hpp"
#include "oracles.hpp"

using namespace odepoly;

namespace {

const BiPoly u = bi_u();
const BiPoly v = bi_v();
BiPoly k(long n) { return BiPoly(XPoly(Rat(n))); }

}  // namespace

TEST_CASE("rationals are kept in lowest terms with a positive denominator") {
  const Rat r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(Rat::parse("-10/4") == Rat(-5, 2));
  CHECK((Rat(1, 3) + Rat(1, 6)).str() == "1/2");
}

TEST_CASE("exact and approximate complex values stay tagged") {
  const Complex a(Rat(1, 2));
  const Complex b = Complex::approx({0.25, 0.0}, 1e-15);
  CHECK(a.is_exact());
  CHECK_FALSE((a + b).is_exact());
  CHECK((a * a).re() == Rat(1, 4));
  CHECK((a + b).error() > 0.0);
  CHECK(kth_root(Complex(Rat(1, 8)), 3) == Complex(Rat(1, 2)));
}

TEST_CASE("discriminant resultant of the cubic example") {
  // F = x p^3 + y p - 1 as a polynomial in p over (x, y).
  const Poly<BiPoly> f(std::vector<BiPoly>{-k(1), v, BiPoly(), u});
  const BiPoly d = sylvester_resultant(f, f.derivative());
  CHECK(to_string(d, "x", "y") == "4*x^2*y^3 + 27*x^3");
  // Specialize x and compare with the cofactor-expansion oracle.
  for (long x : {-3L, 2L, 5L}) {
    std::vector<XPoly> coeffs;
    for (const auto& c : f.coeffs()) coeffs.push_back(eval_u(c, Rat(x)));
    const BiPoly fx(coeffs);  // u = y, v = p
    const XPoly oracle = oracle::laplace_resultant(fx, fx.derivative());
    CHECK(oracle == eval_u(d, Rat(x)));
  }
}

TEST_CASE("resultant examples") {
  // Res_{y'}(y'^2 + a, 2 y') = 4a with u = a.
  CHECK(resultant(v * v + u, k(2) * v, Var::V) == XPoly::variable() * Rat(4));
  // Coprime linear factors: the 2x2 Sylvester determinant is 2.
  const XPoly r = resultant(v - k(1), v + k(1), Var::V);
  CHECK(r == XPoly(Rat(2)));
  CHECK_THROWS_AS(resultant(BiPoly(), v, Var::V), Error);
}

TEST_CASE("resultant agrees with the Laplace oracle on small random pairs") {
  for (int s = 1; s <= 12; ++s) {
    const BiPoly p = bi_term(Rat(s), 1, 2) + bi_term(Rat(-3), 0, 1) + bi_term(Rat(s % 4 + 1), 2, 0) + k(1);
    const BiPoly q = bi_term(Rat(2), 0, 3) + bi_term(Rat(-s), 1, 1) + bi_term(Rat(5), 1, 0);
    CHECK(resultant(p, q, Var::V) == oracle::laplace_resultant(p, q));
  }
}

TEST_CASE("squarefree part and distinct root count") {
  const auto [a, na] = squarefree_distinct(v * v * (v - k(1)), Var::V);
  CHECK(na == 2);
  CHECK(a == v * (v - k(1)));
  CHECK(squarefree_distinct(v * (v - k(1)) * (v - u), Var::V).second == 3);
  const auto [c, nc] = squarefree_distinct(k(5), Var::V);
  CHECK(nc == 0);
  CHECK(c == k(1));
  CHECK_THROWS_AS(squarefree_distinct(BiPoly(), Var::V), Error);
}

TEST_CASE("root finding modes") {
  RootOptions neg;
  neg.mode = RootMode::NegativeIntegers;
  const auto r1 = root_find(XPoly(std::vector<Rat>{2, 3, 1}), neg);
  REQUIRE(r1.size() == 2);
  CHECK(r1[0].value == Complex(-2));
  CHECK(r1[1].value == Complex(-1));

  RootOptions exact;
  exact.mode = RootMode::ExactRational;
  const auto r2 = root_find(XPoly(std::vector<Rat>{0, -1}), exact);
  REQUIRE(r2.size() == 1);
  CHECK(r2[0].value == Complex(0));

  const auto r3 = root_find(XPoly(std::vector<Rat>{1, 0, 1}));
  REQUIRE(r3.size() == 2);
  for (const auto& r : r3) {
    CHECK(std::abs(r.value.value().real()) < 1e-9);
    CHECK(std::abs(std::abs(r.value.value().imag()) - 1.0) < 1e-9);
  }
  const auto r4 = root_find(XPoly(std::vector<Rat>{-2, 0, 1}));
  REQUIRE(r4.size() == 2);
  CHECK(std::abs(r4[1].value.value().real() - std::sqrt(2.0)) < 1e-12);
  CHECK(r4[1].residual <= 1e-9);
  CHECK_THROWS_AS(root_find(XPoly()), Error);
}

TEST_CASE("Newton-Puiseux: cusp v^2 = u^3 is one cycle of ramification 2") {
  const auto b = newton_puiseux_branches(v * v - u * u * u, 3);
  REQUIRE(b.size() == 1);
  CHECK(b[0].ramification == 2);
  CHECK(b[0].leading_exponent() == Rat(3, 2));
  CHECK(b[0].terms[0].coeff.value().real() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Newton-Puiseux: node v^2 = u^2 (1 + u) matches the binomial series") {
  const auto b = newton_puiseux_branches(v * v - u * u * (k(1) + u), 5);
  REQUIRE(b.size() == 2);
  const auto ref = oracle::sqrt1p(5);
  for (const auto& br : b) {
    CHECK(br.ramification == 1);
    const int s = br.terms[0].coeff.value().real() > 0 ? 1 : -1;
    REQUIRE(br.terms.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(br.terms[i].exponent == Rat(static_cast<long>(i) + 1));
      REQUIRE(br.terms[i].coeff.is_exact());
      CHECK(br.terms[i].coeff.re() == ref[i] * Rat(s));
    }
  }
}

TEST_CASE("Newton-Puiseux: u v^2 + 1 has a critical pole of exponent -1/2") {
  const auto b = newton_puiseux_branches(u * v * v + k(1), 2);
  REQUIRE(b.size() == 1);
  CHECK(b[0].ramification == 2);
  CHECK(b[0].leading_exponent() == Rat(-1, 2));
}

TEST_CASE("Newton-Puiseux preconditions") {
  CHECK_THROWS_AS(newton_puiseux_branches(u * u, 2), Error);
  try {
    newton_puiseux_branches((v - u) * (v - u), 2);
    FAIL("expected NotSquarefree");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSquarefree);
  }
}

TEST_CASE("residual valuation grows with the term budget") {
  const BiPoly f = v * v - u * u * (k(1) + u);
  Rat last(-1);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& br : newton_puiseux_branches(f, n)) {
      REQUIRE(br.residual_valuation);
      if (br.terms[0].coeff.value().real() > 0) {
        CHECK(*br.residual_valuation > last);
        last = *br.residual_valuation;
      }
    }
  }
}
