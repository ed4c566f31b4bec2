#include <doctest.h>

#include <cmath>

#include "odepoly/cli/parser.hpp"
#include "odepoly/errors.hpp"
#include "odepoly/special.hpp"

using namespace odepoly;
using cli::parse_equation;

namespace {

// (u = z, v = w) and (u = x, v = y) share the same builders.
const BiPoly u = bi_u();
const BiPoly v = bi_v();
BiPoly k(long n) { return BiPoly(XPoly(Rat(n))); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("Riccati classification by distinct roots of Q") {
  const RiccatiClass three = riccati_classify(k(1), v * (v - k(1)) * (v - u));
  CHECK(three.distinct_root_count == 3);
  CHECK(three.verdict == RiccatiVerdict::AllSingleValuedRational);
  CHECK_FALSE(three.is_plain_riccati);
  CHECK_FALSE(three.malmquist_note.empty());

  const RiccatiClass two = riccati_classify(u, v * (v - k(1)));
  CHECK(two.distinct_root_count == 2);
  CHECK(two.verdict == RiccatiVerdict::AtMostOneTranscendental);

  const RiccatiClass one = riccati_classify(v + u, v * v);
  CHECK(one.distinct_root_count == 1);
  CHECK(one.verdict == RiccatiVerdict::AtMostTwoTranscendental);

  const RiccatiClass plain = riccati_classify(v * v + u, k(1));
  CHECK(plain.verdict == RiccatiVerdict::RiccatiAtMostThree);
  CHECK(plain.is_plain_riccati);
  CHECK(plain.malmquist_note.empty());

  const RiccatiClass cubic = riccati_classify(v * v * v + u, k(1));
  CHECK(cubic.verdict == RiccatiVerdict::RiccatiAtMostThree);
  CHECK_FALSE(cubic.is_plain_riccati);
  CHECK_FALSE(cubic.malmquist_note.empty());

  CHECK(to_string(RiccatiVerdict::AllSingleValuedRational) == "all-single-valued-rational");
}

TEST_CASE("Riccati preconditions") {
  CHECK(code_of([] { riccati_classify(k(1), BiPoly()); }) == ErrorCode::ZeroDenominator);
  CHECK(code_of([] { riccati_classify(v * (v - k(1)), v * (v - u)); }) == ErrorCode::NotReduced);
}

TEST_CASE("binomial classification") {
  SUBCASE("quadratic pair") {
    const BiPoly chi = BiPoly(XPoly(std::vector<Rat>{1, 0, 1}));
    const BinomialClass c = binomial_classify(2, chi * (v - k(1)) * (v - k(2)));
    CHECK(c.verdict == BinomialVerdict::FormEq8);
    CHECK(c.yosida_ok);
    REQUIRE(c.chi);
    CHECK(*c.chi == XPoly(std::vector<Rat>{1, 0, 1}));
    REQUIRE(c.roots.size() == 2);
    CHECK(c.roots[0] == Complex(1));
    CHECK(c.roots[1] == Complex(2));
  }
  SUBCASE("repeated root with m = 3") {
    const BinomialClass c = binomial_classify(3, u * (v - k(3)) * (v - k(3)));
    CHECK(c.verdict == BinomialVerdict::FormEq7);
    REQUIRE(c.roots.size() == 1);
    CHECK(c.roots[0] == Complex(3));
  }
  SUBCASE("irrational pair from an irreducible quadratic") {
    const BinomialClass c = binomial_classify(2, v * v - k(2));
    CHECK(c.verdict == BinomialVerdict::FormEq8);
    REQUIRE(c.roots.size() == 2);
    CHECK(std::abs(std::abs(c.roots[0].value().real()) - std::sqrt(2.0)) < 1e-12);
  }
  SUBCASE("movable singularities and the degree bound") {
    const BinomialClass c = binomial_classify(1, v * v * v);
    CHECK(c.verdict == BinomialVerdict::MovableSingularities);
    CHECK_FALSE(c.yosida_ok);
    const BinomialClass d = binomial_classify(3, (v - u) * (v - u));
    CHECK(d.verdict == BinomialVerdict::MovableSingularities);
    CHECK(d.yosida_ok);
  }
  SUBCASE("linear right-hand sides") {
    CHECK(binomial_classify(1, u * v + k(1)).verdict == BinomialVerdict::Linear);
    CHECK(binomial_classify(2, u).verdict == BinomialVerdict::Linear);
  }
  SUBCASE("a denominator in y means movable singularities") {
    CHECK(binomial_classify(1, k(1), v).verdict == BinomialVerdict::MovableSingularities);
    // Common factors cancel first.
    CHECK(binomial_classify(2, v * (v - k(1)) * (v - k(2)), v).verdict == BinomialVerdict::FormEq8);
  }
  SUBCASE("preconditions") {
    CHECK(code_of([] { binomial_classify(0, v); }) == ErrorCode::InvalidM);
    CHECK(code_of([] { binomial_classify(1, v, BiPoly()); }) == ErrorCode::ZeroDenominator);
  }
}

TEST_CASE("Property I") {
  const PropertyIReport a = property_I_check(parse_equation("y'' - y^2"));
  CHECK(a.holds);
  REQUIRE(a.witness);
  CHECK(a.witness->value == Rat(-2));
  CHECK_FALSE(a.witness->from_vertex);

  const PropertyIReport w = property_I_check(parse_equation("y'^2 - 4*y^3 + 4*y"));
  CHECK(w.holds);
  REQUIRE(w.witness);
  CHECK(w.witness->value == Rat(-2));

  const PropertyIReport b = property_I_check(parse_equation("y''^2 - y^5"));
  CHECK_FALSE(b.holds);
  CHECK_FALSE(b.witness);
  CHECK_FALSE(b.checked_vertices.empty());

  CHECK(code_of([] { property_I_check(parse_equation("y'' - x*y")); }) == ErrorCode::NotAutonomous);
}

TEST_CASE("Property I from a vertex root") {
  // Vertex (2,3) carries y y''' - 3 y' y'': characteristic
  // -2 lambda (lambda - 1)(lambda + 1), root -1 between the adjacent slopes
  // 3/2 and -3/2, neither of which is an integer.
  const PropertyIReport r = property_I_check(parse_equation("y*y''' - 3*y'*y'' + y^4 + 1"));
  CHECK(r.holds);
  REQUIRE(r.witness);
  CHECK(r.witness->from_vertex);
  CHECK_FALSE(r.witness->one_sided);
  CHECK(r.witness->value == Rat(-1));

  // At an end vertex only one adjacent slope bounds the interval.
  const PropertyIReport e = property_I_check(parse_equation("y*y'' - 2*y'^2 + 1"));
  CHECK(e.holds);
  REQUIRE(e.witness);
  CHECK(e.witness->one_sided);
}

TEST_CASE("partial first integral report") {
  const DiffPoly f = parse_equation("y'' - y^2");
  const FirstIntegralReport yes = partial_first_integral_report(f, parse_equation("y'*y - y^2"), "R(y, y')");
  CHECK(yes.first_integral);
  CHECK(yes.text.find("R(y, y') = const") == 0);

  const FirstIntegralReport no = partial_first_integral_report(f, parse_equation("y'' - y^2"), "R");
  CHECK_FALSE(no.first_integral);
  CHECK(no.psi.holds);

  CHECK(code_of([&] { partial_first_integral_report(parse_equation("y'' - x"), f, "R"); }) ==
        ErrorCode::NotAutonomous);
}
