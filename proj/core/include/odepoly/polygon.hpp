#pragma once

#include <optional>
#include <string>
#include <vector>

#include "odepoly/bipoly.hpp"
#include "odepoly/diffpoly.hpp"

namespace odepoly {

enum class Flavor { Petrovic, Fine };

/// Generic base point when empty.
using BasePoint = std::optional<Rat>;

struct Contributor {
  /// Index into DiffPoly::monomials().
  int monomial = 0;
  /// Power of x in the coefficient (Fine points only).
  int x_power = 0;
};

struct LatticePoint {
  int first = 0;
  int second = 0;
  std::vector<Contributor> contributors;
  /// Monomial text of the contributors, for rendering.
  std::string label;
};

enum class FaceKind { Vertex, Edge };
enum class Side { Left, Right, Horizontal, None };

std::string to_string(Side side);

struct Face {
  FaceKind kind = FaceKind::Vertex;
  /// Point indices: one for a vertex, two (left/lower first) for an edge.
  std::vector<int> endpoints;
  /// Every point on the face, endpoints included, in chain order.
  std::vector<int> members;
  /// Delta second / delta first; absent for vertices and vertical edges.
  std::optional<Rat> slope;
  Side side = Side::None;
};

struct LatticePolygon {
  Flavor flavor = Flavor::Petrovic;
  std::vector<LatticePoint> points;
  /// Boundary chain alternating vertex, edge, vertex, ... Petrovic: upper
  /// chain left to right; Fine: left chain bottom to top.
  std::vector<Face> faces;

  std::vector<const Face*> edges() const;
  std::vector<const Face*> vertices() const;
  /// Index of the point with these coordinates, or -1.
  int find(int first, int second) const;
};

/// Petrovic polygon of the points (M_i, N_i). A concrete base point must not
/// annihilate any coefficient (SingularBasePoint otherwise).
LatticePolygon petrovic_polygon(const DiffPoly& f, const BasePoint& x0 = std::nullopt);

/// Fine polygon of the points (l - N_i, M_i) over all x-powers l of phi_i.
LatticePolygon fine_polygon(const DiffPoly& f);

/// Upper chain of arbitrary (M, N) points with the given contributors; the
/// common builder behind petrovic_polygon.
LatticePolygon petrovic_from_points(std::vector<LatticePoint> points);

struct SupportResult {
  Face face;
  Rat gamma;
};

/// Face of a Petrovic polygon minimizing lambda * M - N.
SupportResult support_face(const LatticePolygon& p, const Rat& lambda);

/// A_i(lambda) = prod_j (lambda - j + 1)^{gamma_j}, gamma_j = m_j + ... + m_n.
XPoly multiplier(const std::vector<int>& exponents);

struct CharacteristicPolynomial {
  int vertex = 0;
  /// Sum A_i(lambda) phi_i(x0) as a polynomial in (u = x0, v = lambda); for
  /// Fine vertices the coefficient is the x^l coefficient, free of x0.
  BiPoly generic;
  /// The polynomial in lambda at the concrete base point, when given.
  std::optional<XPoly> concrete;
  /// N-coordinate of the vertex (Petrovic); bounds the degree.
  int beta = 0;
};

CharacteristicPolynomial characteristic_polynomial(const DiffPoly& f, const LatticePolygon& p, int vertex,
                                                   const BasePoint& x0 = std::nullopt);

/// Edge equation sum A_i(lambda) phi_i(x0) c^{M_i - M_min} over the edge's
/// members, as a polynomial in (u = x0, v = c).
BiPoly edge_equation(const DiffPoly& f, const LatticePolygon& p, const Face& edge);

}  // namespace odepoly
