#include <doctest.h>

#include <set>
#include <sstream>

#include "odepoly/cli/parser.hpp"
#include "odepoly/errors.hpp"
#include "odepoly/polygon.hpp"
#include "odepoly/series.hpp"

using namespace odepoly;
using cli::parse_equation;

namespace {

std::set<std::pair<int, int>> point_set(const LatticePolygon& p) {
  std::set<std::pair<int, int>> s;
  for (const auto& q : p.points) s.insert({q.first, q.second});
  return s;
}

std::string pt(const LatticePolygon& p, int i) {
  const auto& q = p.points[static_cast<std::size_t>(i)];
  return "(" + std::to_string(q.first) + "," + std::to_string(q.second) + ")";
}

// Compact chain description: "V(0,0) E(0,0)-(2,2)/1/left V(2,2) ...".
std::string chain(const LatticePolygon& p) {
  std::ostringstream out;
  for (const auto& f : p.faces) {
    if (!out.str().empty()) out << ' ';
    if (f.kind == FaceKind::Vertex) {
      out << 'V' << pt(p, f.endpoints[0]);
    } else {
      out << 'E' << pt(p, f.endpoints[0]) << '-' << pt(p, f.endpoints[1]) << '/'
          << (f.slope ? f.slope->str() : "inf") << '/' << to_string(f.side);
      if (f.members.size() > 2) out << '#' << f.members.size();
    }
  }
  return out.str();
}

}  // namespace

TEST_CASE("Petrovic polygon of the square-root family") {
  const LatticePolygon p = petrovic_polygon(parse_equation("y'^2*(y-1) + 1"));
  CHECK(point_set(p) == std::set<std::pair<int, int>>{{0, 0}, {2, 2}, {3, 2}});
  CHECK(chain(p) == "V(0,0) E(0,0)-(2,2)/1/left V(2,2) E(2,2)-(3,2)/0/horizontal V(3,2)");
  CHECK(p.edges().size() == 2);
  CHECK(p.vertices().size() == 3);
}

TEST_CASE("Petrovic polygon of the shifted family is a single edge") {
  const LatticePolygon p = petrovic_polygon(parse_equation("y'^2*y + 1"));
  CHECK(chain(p) == "V(0,0) E(0,0)-(3,2)/2/3/left V(3,2)");
}

TEST_CASE("cubic example: one edge with an interior point below it") {
  const LatticePolygon p = petrovic_polygon(parse_equation("x*y'^3 + y*y' - 1"), Rat(1));
  CHECK(chain(p) == "V(0,0) E(0,0)-(3,3)/1/left V(3,3)");
  CHECK(p.find(2, 1) >= 0);
}

TEST_CASE("collinear points are edge members") {
  const LatticePolygon p = petrovic_polygon(parse_equation("y'^2 - (y'-1)*(y-1) + x"), Rat(2));
  CHECK(chain(p) == "V(0,0) E(0,0)-(2,2)/1/left#3 V(2,2)");
}

TEST_CASE("triangle of (y'')^2 = quartic") {
  const LatticePolygon p = petrovic_polygon(parse_equation("y''^2 = y^4 + y^3 + y^2 + y + 1"));
  CHECK(chain(p) == "V(0,0) E(0,0)-(2,4)/2/left V(2,4) E(2,4)-(4,0)/-2/right V(4,0)");
}

TEST_CASE("Painleve I has a right-slanted edge of slope -2") {
  const LatticePolygon p = petrovic_polygon(parse_equation("y'' - 6*y^2 - x"));
  CHECK(point_set(p) == std::set<std::pair<int, int>>{{0, 0}, {1, 2}, {2, 0}});
  CHECK(chain(p) == "V(0,0) E(0,0)-(1,2)/2/left V(1,2) E(1,2)-(2,0)/-2/right V(2,0)");
}

TEST_CASE("concrete base point must not annihilate a coefficient") {
  try {
    petrovic_polygon(parse_equation("x*y'^3 + y*y' - 1"), Rat(0));
    FAIL("expected SingularBasePoint");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularBasePoint);
  }
  // The effective polygon lowers the point instead.
  const LatticePolygon e = effective_polygon(parse_equation("x*y'^3 + y*y' - 1"), Rat(0));
  CHECK(e.find(3, 2) >= 0);
  CHECK(e.find(3, 3) < 0);
}

TEST_CASE("Fine polygon") {
  SUBCASE("two contributors on one point") {
    const LatticePolygon p = fine_polygon(parse_equation("x*y' - 2*y"));
    REQUIRE(p.points.size() == 1);
    CHECK(p.points[0].contributors.size() == 2);
    CHECK(chain(p) == "V(0,1)");
  }
  SUBCASE("leftmost point is the boundary") {
    const LatticePolygon p = fine_polygon(parse_equation("y' - y"));
    CHECK(point_set(p) == std::set<std::pair<int, int>>{{-1, 1}, {0, 1}});
    CHECK(chain(p) == "V(-1,1)");
  }
  SUBCASE("square-root family") {
    const LatticePolygon p = fine_polygon(parse_equation("y'^2*(y-1) + 1"));
    CHECK(point_set(p) == std::set<std::pair<int, int>>{{-2, 3}, {-2, 2}, {0, 0}});
    CHECK(chain(p) == "V(0,0) E(0,0)-(-2,2)/-1/none V(-2,2) E(-2,2)-(-2,3)/inf/none V(-2,3)");
  }
}

TEST_CASE("support face") {
  const LatticePolygon p = petrovic_polygon(parse_equation("y'^2*(y-1) + 1"));
  const SupportResult s0 = support_face(p, Rat(0));
  CHECK(s0.face.kind == FaceKind::Edge);
  CHECK(s0.face.side == Side::Horizontal);
  CHECK(s0.gamma == Rat(-2));
  const SupportResult s1 = support_face(p, Rat(1));
  CHECK(s1.face.kind == FaceKind::Edge);
  CHECK(s1.face.slope == Rat(1));
  CHECK(s1.gamma == Rat(0));
  const SupportResult s2 = support_face(p, Rat(2));
  CHECK(s2.face.kind == FaceKind::Vertex);
  CHECK(pt(p, s2.face.endpoints[0]) == "(0,0)");
  CHECK(s2.gamma == Rat(0));
}

TEST_CASE("multiplier and characteristic polynomials") {
  // y'' alone: lambda (lambda - 1).
  CHECK(multiplier({0, 0, 1}) == XPoly(std::vector<Rat>{0, -1, 1}));
  // y'^2: lambda^2.
  CHECK(multiplier({0, 2}) == XPoly(std::vector<Rat>{0, 0, 1}));

  const DiffPoly f = parse_equation("y''*y - y'^2");
  const LatticePolygon p = petrovic_polygon(f, Rat(0));
  const int v = p.find(2, 2);
  REQUIRE(v >= 0);
  const CharacteristicPolynomial c = characteristic_polynomial(f, p, v, Rat(0));
  REQUIRE(c.concrete);
  CHECK(*c.concrete == XPoly(std::vector<Rat>{0, -1}));
  CHECK(c.beta == 2);

  const DiffPoly g = parse_equation("x*y' - 2*y");
  const LatticePolygon fp = fine_polygon(g);
  const CharacteristicPolynomial cf = characteristic_polynomial(g, fp, 0);
  CHECK(eval_u(cf.generic, Rat(5)) == XPoly(std::vector<Rat>{-2, 1}));
}

TEST_CASE("characteristic polynomial at a generic point keeps x0 symbolic") {
  const DiffPoly f = parse_equation("x*y''*y + y'^2");
  const LatticePolygon p = petrovic_polygon(f);
  const int v = p.find(2, 2);
  REQUIRE(v >= 0);
  const CharacteristicPolynomial c = characteristic_polynomial(f, p, v);
  CHECK_FALSE(c.concrete);
  // x0 * lambda (lambda - 1) + lambda^2.
  CHECK(to_string(c.generic, "x0", "l") == "x0*l^2 + l^2 - x0*l");
}

TEST_CASE("edge equation of the cubic example") {
  const DiffPoly f = parse_equation("x*y'^3 + y*y' - 1");
  const LatticePolygon p = petrovic_polygon(f);
  const BiPoly e = edge_equation(f, p, *p.edges()[0]);
  CHECK(to_string(e, "x0", "c") == "x0*c^3 - 1");
}
