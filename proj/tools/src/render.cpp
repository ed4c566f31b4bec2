#include "odepoly/cli/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace odepoly::cli {

namespace {

using nlohmann::json;

json coords(const LatticePoint& q) { return json::array({q.first, q.second}); }

std::string xml_escape(const std::string& s) {
  std::string out;
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

struct Extent {
  int min_a = 0, max_a = 0, min_b = 0, max_b = 0;
};

Extent extent(const LatticePolygon& p) {
  Extent e;
  bool first = true;
  for (const auto& q : p.points) {
    if (first) {
      e = {q.first, q.first, q.second, q.second};
      first = false;
      continue;
    }
    e.min_a = std::min(e.min_a, q.first);
    e.max_a = std::max(e.max_a, q.first);
    e.min_b = std::min(e.min_b, q.second);
    e.max_b = std::max(e.max_b, q.second);
  }
  return e;
}

std::vector<int> chain_points(const LatticePolygon& p) {
  std::vector<int> chain;
  for (const auto& f : p.faces) {
    if (f.kind == FaceKind::Vertex) chain.push_back(f.endpoints[0]);
  }
  return chain;
}

std::string svg(const LatticePolygon& p) {
  const Extent e = extent(p);
  const int w = e.max_a - e.min_a + 2;
  const int h = e.max_b - e.min_b + 2;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << e.min_a - 1 << ' ' << -e.max_b - 1 << ' ' << w << ' '
     << h << "\" width=\"" << 60 * w << "\" height=\"" << 60 * h << "\">\n";
  os << "  <g class=\"grid\" stroke=\"#ddd\" stroke-width=\"0.02\">\n";
  for (int a = e.min_a; a <= e.max_a; ++a) {
    os << "    <line x1=\"" << a << "\" y1=\"" << -e.max_b << "\" x2=\"" << a << "\" y2=\"" << -e.min_b << "\"/>\n";
  }
  for (int b = e.min_b; b <= e.max_b; ++b) {
    os << "    <line x1=\"" << e.min_a << "\" y1=\"" << -b << "\" x2=\"" << e.max_a << "\" y2=\"" << -b << "\"/>\n";
  }
  os << "  </g>\n";
  const auto chain = chain_points(p);
  os << "  <polyline class=\"chain\" fill=\"none\" stroke=\"black\" stroke-width=\"0.05\" points=\"";
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const auto& q = p.points[static_cast<std::size_t>(chain[i])];
    os << (i ? " " : "") << q.first << ',' << -q.second;
  }
  os << "\"/>\n";
  for (const auto& f : p.faces) {
    if (f.kind != FaceKind::Edge) continue;
    const auto& a = p.points[static_cast<std::size_t>(f.endpoints[0])];
    const auto& b = p.points[static_cast<std::size_t>(f.endpoints[1])];
    const double mx = (a.first + b.first) / 2.0 + 0.15;
    const double my = -(a.second + b.second) / 2.0 - 0.15;
    os << "  <text class=\"slope\" x=\"" << fmt(mx) << "\" y=\"" << fmt(my)
       << "\" font-size=\"0.22\" fill=\"#a33\">slope " << (f.slope ? f.slope->str() : std::string("inf")) << "</text>\n";
  }
  for (std::size_t i = 0; i < p.points.size(); ++i) {
    const auto& q = p.points[i];
    const bool on_chain = std::find(chain.begin(), chain.end(), static_cast<int>(i)) != chain.end();
    os << "  <circle class=\"point\" cx=\"" << q.first << "\" cy=\"" << -q.second << "\" r=\"0.08\" fill=\""
       << (on_chain ? "black" : "#888") << "\"/>\n";
    os << "  <text class=\"label\" x=\"" << fmt(q.first + 0.1) << "\" y=\"" << fmt(-q.second + 0.3)
       << "\" font-size=\"0.22\">" << xml_escape(q.label) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string ascii(const LatticePolygon& p) {
  constexpr int sx = 4;
  constexpr int sy = 2;
  const Extent e = extent(p);
  const int width = (e.max_a - e.min_a) * sx + 1;
  const int height = (e.max_b - e.min_b) * sy + 1;
  std::vector<std::string> grid(static_cast<std::size_t>(height), std::string(static_cast<std::size_t>(width), ' '));
  const auto col = [&](int a) { return (a - e.min_a) * sx; };
  const auto row = [&](int b) { return (e.max_b - b) * sy; };
  for (const auto& f : p.faces) {
    if (f.kind != FaceKind::Edge) continue;
    const auto& a = p.points[static_cast<std::size_t>(f.endpoints[0])];
    const auto& b = p.points[static_cast<std::size_t>(f.endpoints[1])];
    char ch = '|';
    if (f.slope) ch = f.slope->sign() > 0 ? '/' : (f.slope->sign() < 0 ? '\\' : '-');
    const int c0 = col(a.first), r0 = row(a.second), c1 = col(b.first), r1 = row(b.second);
    const int steps = std::max(std::abs(c1 - c0), std::abs(r1 - r0));
    for (int s = 1; s < steps; ++s) {
      const int c = c0 + static_cast<int>(std::lround(static_cast<double>(c1 - c0) * s / steps));
      const int r = r0 + static_cast<int>(std::lround(static_cast<double>(r1 - r0) * s / steps));
      grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = ch;
    }
  }
  for (const auto& q : p.points) grid[static_cast<std::size_t>(row(q.second))][static_cast<std::size_t>(col(q.first))] = '*';
  std::ostringstream os;
  for (auto& line : grid) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  for (const auto& q : p.points) os << "(" << q.first << "," << q.second << ") " << q.label << '\n';
  for (const auto& f : p.faces) {
    if (f.kind != FaceKind::Edge) continue;
    const auto& a = p.points[static_cast<std::size_t>(f.endpoints[0])];
    const auto& b = p.points[static_cast<std::size_t>(f.endpoints[1])];
    os << "edge (" << a.first << "," << a.second << ")-(" << b.first << "," << b.second << ") slope "
       << (f.slope ? f.slope->str() : std::string("inf")) << ' ' << to_string(f.side) << '\n';
  }
  return os.str();
}

}  // namespace

json face_json(const LatticePolygon& p, const Face& face) {
  json j;
  const auto at = [&p](int i) { return coords(p.points[static_cast<std::size_t>(i)]); };
  if (face.kind == FaceKind::Vertex) {
    j["kind"] = "vertex";
    j["at"] = at(face.endpoints[0]);
    return j;
  }
  j["kind"] = "edge";
  j["from"] = at(face.endpoints[0]);
  j["to"] = at(face.endpoints[1]);
  j["members"] = json::array();
  for (const int m : face.members) j["members"].push_back(at(m));
  j["slope"] = face.slope ? json(face.slope->str()) : json(nullptr);
  j["side"] = to_string(face.side);
  return j;
}

json polygon_json(const LatticePolygon& p) {
  json j;
  j["flavor"] = p.flavor == Flavor::Petrovic ? "petrovic" : "fine";
  std::vector<std::size_t> order(p.points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&p](std::size_t a, std::size_t b) {
    return std::pair(p.points[a].first, p.points[a].second) < std::pair(p.points[b].first, p.points[b].second);
  });
  j["points"] = json::array();
  j["labels"] = json::array();
  for (const std::size_t i : order) {
    j["points"].push_back(coords(p.points[i]));
    j["labels"].push_back(p.points[i].label);
  }
  j["vertices"] = json::array();
  j["edges"] = json::array();
  for (const auto& f : p.faces) {
    if (f.kind == FaceKind::Vertex) {
      j["vertices"].push_back(coords(p.points[static_cast<std::size_t>(f.endpoints[0])]));
    } else {
      json e = face_json(p, f);
      e.erase("kind");
      j["edges"].push_back(std::move(e));
    }
  }
  return j;
}

std::string render_polygon(const LatticePolygon& p, PolygonFormat format) {
  switch (format) {
    case PolygonFormat::Svg:
      return svg(p);
    case PolygonFormat::Ascii:
      return ascii(p);
    case PolygonFormat::Json:
      return polygon_json(p).dump(2) + "\n";
  }
  return {};
}

json complex_json(const Complex& c) {
  if (c.is_exact()) {
    if (c.im().is_zero()) return c.re().str();
    return json{{"re", c.re().str()}, {"im", c.im().str()}};
  }
  const auto v = c.value();
  return json{{"value", {{"re", v.real()}, {"im", v.imag()}}}, {"precision", c.error()}};
}

}  // namespace odepoly::cli
