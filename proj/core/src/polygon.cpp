#include "odepoly/polygon.hpp"

#include <algorithm>
#include <map>

#include "odepoly/errors.hpp"
#include "odepoly/newton_puiseux.hpp"

namespace odepoly {

std::string to_string(Side side) {
  switch (side) {
    case Side::Left:
      return "left";
    case Side::Right:
      return "right";
    case Side::Horizontal:
      return "horizontal";
    case Side::None:
      return "none";
  }
  return "none";
}

std::vector<const Face*> LatticePolygon::edges() const {
  std::vector<const Face*> out;
  for (const auto& f : faces) {
    if (f.kind == FaceKind::Edge) out.push_back(&f);
  }
  return out;
}

std::vector<const Face*> LatticePolygon::vertices() const {
  std::vector<const Face*> out;
  for (const auto& f : faces) {
    if (f.kind == FaceKind::Vertex) out.push_back(&f);
  }
  return out;
}

int LatticePolygon::find(int first, int second) const {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].first == first && points[i].second == second) return static_cast<int>(i);
  }
  return -1;
}

namespace {

std::string monomial_label(const DiffMonomial& m) {
  std::string s;
  for (int j = static_cast<int>(m.exponents.size()) - 1; j >= 0; --j) {
    const int e = m.exponents[static_cast<std::size_t>(j)];
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += derivative_name(j);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

std::vector<LatticePoint> merge_points(std::vector<LatticePoint> raw) {
  std::map<std::pair<int, int>, LatticePoint> merged;
  for (auto& p : raw) {
    auto [it, inserted] = merged.try_emplace({p.first, p.second}, p);
    if (inserted) continue;
    auto& q = it->second;
    q.contributors.insert(q.contributors.end(), p.contributors.begin(), p.contributors.end());
    if (("," + q.label + ",").find("," + p.label + ",") == std::string::npos) q.label += "," + p.label;
  }
  std::vector<LatticePoint> out;
  out.reserve(merged.size());
  for (auto& [k, p] : merged) out.push_back(std::move(p));
  return out;
}

// Points lying on the closed segment a-b (coordinates as given), ordered
// from a to b.
std::vector<int> segment_members(const std::vector<std::pair<int, int>>& coords, std::pair<int, int> a,
                                 std::pair<int, int> b) {
  std::vector<std::pair<long, int>> on;
  const long dx = b.first - a.first;
  const long dy = b.second - a.second;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const long px = coords[i].first - a.first;
    const long py = coords[i].second - a.second;
    if (dx * py - dy * px != 0) continue;
    const long t = px * dx + py * dy;
    if (t < 0 || t > dx * dx + dy * dy) continue;
    on.emplace_back(t, static_cast<int>(i));
  }
  std::sort(on.begin(), on.end());
  std::vector<int> out;
  out.reserve(on.size());
  for (const auto& [t, i] : on) out.push_back(i);
  return out;
}

// Builds the vertex/edge chain through `chain` (point indices in order).
std::vector<Face> chain_faces(const LatticePolygon& p, const std::vector<int>& chain, bool fine) {
  std::vector<std::pair<int, int>> coords;
  coords.reserve(p.points.size());
  for (const auto& pt : p.points) coords.emplace_back(pt.first, pt.second);
  std::vector<Face> faces;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    Face v;
    v.kind = FaceKind::Vertex;
    v.endpoints = {chain[k]};
    v.members = {chain[k]};
    faces.push_back(v);
    if (k + 1 == chain.size()) break;
    const auto& a = p.points[static_cast<std::size_t>(chain[k])];
    const auto& b = p.points[static_cast<std::size_t>(chain[k + 1])];
    Face e;
    e.kind = FaceKind::Edge;
    e.endpoints = {chain[k], chain[k + 1]};
    e.members = segment_members(coords, {a.first, a.second}, {b.first, b.second});
    if (b.first != a.first) e.slope = Rat(b.second - a.second, b.first - a.first);
    if (!fine) {
      const int s = e.slope->sign();
      e.side = s > 0 ? Side::Left : (s < 0 ? Side::Right : Side::Horizontal);
    }
    faces.push_back(std::move(e));
  }
  return faces;
}

}  // namespace

LatticePolygon petrovic_from_points(std::vector<LatticePoint> points) {
  LatticePolygon p;
  p.flavor = Flavor::Petrovic;
  p.points = merge_points(std::move(points));
  std::vector<std::pair<int, int>> flipped;
  for (const auto& pt : p.points) flipped.emplace_back(pt.first, -pt.second);
  std::vector<int> chain;
  for (const auto& [m, negn] : lower_hull(flipped)) chain.push_back(p.find(m, -negn));
  p.faces = chain_faces(p, chain, false);
  return p;
}

LatticePolygon petrovic_polygon(const DiffPoly& f, const BasePoint& x0) {
  const auto ms = f.monomials();
  std::vector<LatticePoint> raw;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (x0 && ms[i].coeff.eval(*x0).is_zero()) {
      raise(ErrorCode::SingularBasePoint, "coefficient of " + monomial_label(ms[i]) + " vanishes at x0 = " + x0->str());
    }
    raw.push_back({ms[i].total_degree(), ms[i].weight(), {{static_cast<int>(i), 0}}, monomial_label(ms[i])});
  }
  return petrovic_from_points(std::move(raw));
}

LatticePolygon fine_polygon(const DiffPoly& f) {
  const auto ms = f.monomials();
  std::vector<LatticePoint> raw;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const XPoly& c = ms[i].coeff;
    for (int l = 0; l <= c.degree(); ++l) {
      if (c.coeff(l).is_zero()) continue;
      std::string label = monomial_label(ms[i]);
      if (l > 0) label = (l == 1 ? std::string("x") : "x^" + std::to_string(l)) + (label == "1" ? "" : "*" + label);
      raw.push_back({l - ms[i].weight(), ms[i].total_degree(), {{static_cast<int>(i), l}}, label});
    }
  }
  LatticePolygon p;
  p.flavor = Flavor::Fine;
  p.points = merge_points(std::move(raw));
  // The left chain is the lower hull once the axes are swapped.
  std::vector<std::pair<int, int>> swapped;
  for (const auto& pt : p.points) swapped.emplace_back(pt.second, pt.first);
  std::vector<int> chain;
  for (const auto& [m, n] : lower_hull(swapped)) chain.push_back(p.find(n, m));
  p.faces = chain_faces(p, chain, true);
  return p;
}

SupportResult support_face(const LatticePolygon& p, const Rat& lambda) {
  if (p.flavor != Flavor::Petrovic) raise(ErrorCode::InvalidArgument, "support_face needs a Petrovic polygon");
  if (p.points.empty()) raise(ErrorCode::InvalidArgument, "empty polygon");
  std::optional<Rat> gamma;
  std::vector<int> argmin;
  for (std::size_t i = 0; i < p.points.size(); ++i) {
    const Rat v = lambda * Rat(p.points[i].first) - Rat(p.points[i].second);
    if (!gamma || v < *gamma) {
      gamma = v;
      argmin = {static_cast<int>(i)};
    } else if (v == *gamma) {
      argmin.push_back(static_cast<int>(i));
    }
  }
  if (argmin.size() == 1) {
    for (const auto& f : p.faces) {
      if (f.kind == FaceKind::Vertex && f.endpoints[0] == argmin[0]) return {f, *gamma};
    }
  } else {
    for (const auto& f : p.faces) {
      if (f.kind != FaceKind::Edge || !f.slope || *f.slope != lambda) continue;
      if (std::all_of(argmin.begin(), argmin.end(), [&f](int i) {
            return std::find(f.members.begin(), f.members.end(), i) != f.members.end();
          })) {
        return {f, *gamma};
      }
    }
  }
  raise(ErrorCode::InvalidArgument, "support set is not a face of the chain");
}

XPoly multiplier(const std::vector<int>& exponents) {
  XPoly a(Rat(1));
  const int n = static_cast<int>(exponents.size()) - 1;
  int gamma = 0;
  for (int j = n; j >= 1; --j) {
    gamma += exponents[static_cast<std::size_t>(j)];
    if (gamma > 0) a *= XPoly(std::vector<Rat>{Rat(1 - j), Rat(1)}).pow(gamma);
  }
  return a;
}

namespace {

// phi_i(x0) as a polynomial in x0 for Petrovic points, the x^l coefficient
// for Fine points.
XPoly point_coeff(const DiffMonomial& m, const Contributor& c, Flavor flavor) {
  return flavor == Flavor::Petrovic ? m.coeff : XPoly(m.coeff.coeff(c.x_power));
}

}  // namespace

CharacteristicPolynomial characteristic_polynomial(const DiffPoly& f, const LatticePolygon& p, int vertex,
                                                   const BasePoint& x0) {
  if (vertex < 0 || vertex >= static_cast<int>(p.points.size())) {
    raise(ErrorCode::InvalidArgument, "vertex is not a point of the polygon");
  }
  const auto ms = f.monomials();
  const auto& pt = p.points[static_cast<std::size_t>(vertex)];
  CharacteristicPolynomial cp;
  cp.vertex = vertex;
  for (const auto& c : pt.contributors) {
    const auto& m = ms[static_cast<std::size_t>(c.monomial)];
    const XPoly phi = point_coeff(m, c, p.flavor);
    if (p.flavor == Flavor::Petrovic && x0 && phi.eval(*x0).is_zero()) {
      raise(ErrorCode::SingularBasePoint, "vertex coefficient vanishes at x0 = " + x0->str());
    }
    const XPoly a = multiplier(m.exponents);
    cp.generic += a.map([&phi](const Rat& k) { return phi * k; });
    cp.beta = std::max(cp.beta, m.weight());
  }
  if (p.flavor == Flavor::Petrovic) cp.beta = pt.second;
  if (x0 || p.flavor == Flavor::Fine) cp.concrete = eval_u(cp.generic, x0 ? *x0 : Rat());
  return cp;
}

BiPoly edge_equation(const DiffPoly& f, const LatticePolygon& p, const Face& edge) {
  if (edge.kind != FaceKind::Edge) raise(ErrorCode::InvalidArgument, "edge equation of a vertex");
  const auto ms = f.monomials();
  Rat lambda;
  int m_min = 0;
  if (p.flavor == Flavor::Petrovic) {
    lambda = *edge.slope;
    m_min = p.points[static_cast<std::size_t>(edge.endpoints[0])].first;
    for (int i : edge.members) m_min = std::min(m_min, p.points[static_cast<std::size_t>(i)].first);
  } else {
    const auto& a = p.points[static_cast<std::size_t>(edge.endpoints[0])];
    const auto& b = p.points[static_cast<std::size_t>(edge.endpoints[1])];
    if (a.second == b.second) raise(ErrorCode::InvalidArgument, "horizontal Fine edge has no exponent");
    lambda = -Rat(b.first - a.first, b.second - a.second);
    m_min = std::min(a.second, b.second);
  }
  BiPoly eq;
  for (int i : edge.members) {
    const auto& pt = p.points[static_cast<std::size_t>(i)];
    const int m_coord = p.flavor == Flavor::Petrovic ? pt.first : pt.second;
    for (const auto& c : pt.contributors) {
      const auto& m = ms[static_cast<std::size_t>(c.monomial)];
      const Rat a = multiplier(m.exponents).eval(lambda);
      const XPoly phi = point_coeff(m, c, p.flavor);
      eq += BiPoly::monomial(phi * a, m_coord - m_min);
    }
  }
  return eq;
}

}  // namespace odepoly
