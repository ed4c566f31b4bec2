#pragma once

#include <string>

#include <json.hpp>

#include "odepoly/complex.hpp"
#include "odepoly/polygon.hpp"

namespace odepoly::cli {

enum class PolygonFormat { Svg, Ascii, Json };

/// svg: one circle and label per lattice point, the face chain as a
/// polyline, slope annotations. ascii: '*' points, '/', '\', '-', '|'
/// faces. json: see polygon_json.
std::string render_polygon(const LatticePolygon& p, PolygonFormat format);

/// {"flavor", "points": [[a,b],...] sorted, "labels", "vertices", "edges":
/// [{"from","to","members","slope","side"}]}; slopes as "p/q" strings.
nlohmann::json polygon_json(const LatticePolygon& p);

nlohmann::json face_json(const LatticePolygon& p, const Face& face);

/// Exact reals as "p/q", exact complex values as {"re","im"} strings,
/// approximations as {"value": {"re","im"}, "precision": bound}.
nlohmann::json complex_json(const Complex& c);

}  // namespace odepoly::cli
