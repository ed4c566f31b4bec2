#include "odepoly/cli/analyze.hpp"

#include <algorithm>
#include <sstream>

#include "odepoly/cli/parser.hpp"
#include "odepoly/cli/render.hpp"
#include "odepoly/errors.hpp"
#include "odepoly/fuchs.hpp"
#include "odepoly/singularities.hpp"
#include "odepoly/special.hpp"

#ifndef ODEPOLY_VERSION
#define ODEPOLY_VERSION "0.0.0"
#endif

namespace odepoly::cli {

namespace {

using nlohmann::json;

json rats_json(const std::vector<Rat>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(r.str());
  return a;
}

// Monomials of a first-order equation whose y'-exponent satisfies pred,
// as a polynomial in (u = x, v = y) after dropping y'.
template <typename Pred>
BiPoly y_part(const DiffPoly& f, Pred pred) {
  BiPoly r;
  for (const auto& m : f.monomials()) {
    if (!pred(m.exponent(1))) continue;
    std::vector<XPoly> c(static_cast<std::size_t>(m.exponent(0)) + 1);
    c.back() = m.coeff;
    r += BiPoly(std::move(c));
  }
  return r;
}

void require_first_order(const DiffPoly& f, const std::string& check) {
  if (f.order() != 1) raise(ErrorCode::NotFirstOrder, check + " check needs a first-order equation");
}

json fuchs_json(const DiffPoly& f, const AnalyzeOptions& o) {
  FuchsOptions fo;
  fo.seed = o.seed;
  fo.tolerance = o.tolerance;
  const FuchsReport r = fuchs_check(f, fo);
  static const char* names[] = {"leading coefficient free of y", "deg_y A_k <= 2k",
                                "discriminant branches are integrals", "branch exponents k >= m - 1"};
  json j;
  j["conditions"] = json::array();
  for (std::size_t i = 0; i < r.conditions.size(); ++i) {
    const auto& c = r.conditions[i];
    json cj{{"condition", names[i]}, {"verdict", to_string(c.verdict)}, {"witness", c.witness}};
    if (c.verdict == Verdict::NumericPass) cj["tolerance"] = c.tolerance;
    j["conditions"].push_back(std::move(cj));
  }
  j["discriminant"] = to_string(r.discriminant, "x", "y");
  j["discriminant_reduced"] = to_string(r.discriminant_reduced, "x", "y");
  j["samples"] = rats_json(r.samples);
  j["exponents"] = json::array();
  for (const auto& [k, m] : r.exponents) j["exponents"].push_back({{"k", k}, {"m", m}});
  j["seed"] = r.seed;
  j["passes"] = r.passes();
  return j;
}

json riccati_json(const DiffPoly& f) {
  require_first_order(f, "riccati");
  for (const auto& m : f.monomials()) {
    if (m.exponent(1) > 1) raise(ErrorCode::InvalidArgument, "riccati check needs an equation linear in y'");
  }
  BiPoly q = y_part(f, [](int e) { return e == 1; });
  BiPoly p = -y_part(f, [](int e) { return e == 0; });
  bool reduced = false;
  if (!p.is_zero()) {
    const BiPoly g = gcd(p, q);
    if (g.degree() > 0 || deg_u(g) > 0) {
      p = exact_div(p, g);
      q = exact_div(q, g);
      reduced = true;
    }
  }
  const RiccatiClass c = riccati_classify(p, q);
  json j{{"P", to_string(p, "x", "y")},
         {"Q", to_string(q, "x", "y")},
         {"reduced", reduced},
         {"distinct_root_count", c.distinct_root_count},
         {"verdict", to_string(c.verdict)},
         {"is_plain_riccati", c.is_plain_riccati}};
  if (!c.malmquist_note.empty()) j["note"] = c.malmquist_note;
  return j;
}

json binomial_json(const DiffPoly& f) {
  require_first_order(f, "binomial");
  int m = 0;
  for (const auto& mono : f.monomials()) {
    const int e = mono.exponent(1);
    if (e == 0) continue;
    if (m != 0 && e != m) raise(ErrorCode::InvalidArgument, "binomial check needs a single power of y'");
    m = e;
  }
  const BiPoly den = y_part(f, [m](int e) { return e == m; });
  const BiPoly num = -y_part(f, [](int e) { return e == 0; });
  const BinomialClass c = binomial_classify(m, num, den);
  json j{{"m", c.m},
         {"R_numerator", to_string(num, "x", "y")},
         {"R_denominator", to_string(den, "x", "y")},
         {"verdict", to_string(c.verdict)},
         {"yosida_ok", c.yosida_ok}};
  if (c.chi) j["chi"] = to_string(*c.chi, "x");
  j["roots"] = json::array();
  for (const auto& r : c.roots) j["roots"].push_back(complex_json(r));
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

json property_json(const PropertyIReport& r) {
  json j{{"holds", r.holds}};
  if (r.witness) {
    j["witness"] = {{"face", face_json(r.polygon, r.witness->face)},
                    {"value", r.witness->value.str()},
                    {"from_vertex", r.witness->from_vertex},
                    {"one_sided", r.witness->one_sided}};
  }
  j["checked_vertices"] = json::array();
  for (const int v : r.checked_vertices) {
    const auto& q = r.polygon.points[static_cast<std::size_t>(v)];
    j["checked_vertices"].push_back({q.first, q.second});
  }
  return j;
}

json convergence_json(const DiffPoly& f) {
  const ConvergenceFlag c = fine_convergence_check(f);
  json j{{"all_terms_full", c.all_terms_full}};
  if (c.offending_monomial) {
    const auto mono = f.monomials()[static_cast<std::size_t>(*c.offending_monomial)];
    j["offending_monomial"] = DiffPoly::normalize({mono}).str();
  }
  return j;
}

json movable_json(const DiffPoly& f, const BasePoint& x0) {
  const MovableReport r = movable_report(f, x0);
  json j{{"zero_orders", rats_json(r.movable_zero_orders)},
         {"pole_orders", rats_json(r.movable_pole_orders)},
         {"has_movable_zeros", r.has_movable_zeros},
         {"has_movable_poles", r.has_movable_poles},
         {"candidates_only", r.candidates_only}};
  j["candidate_only"] = json::array();
  for (const auto& face : r.candidate_only) j["candidate_only"].push_back(face_json(r.polygon, face));
  j["notes"] = r.notes;
  return j;
}

std::string origin_name(BranchOrigin o) {
  return o == BranchOrigin::EdgeEquation ? "edge-equation" : "characteristic-root";
}

json series_json(const DiffPoly& f, const PuiseuxSeries& s) {
  json j{{"x0", s.x0.str()}, {"ramification", s.ramification}};
  j["terms"] = json::array();
  for (const auto& t : s.terms) j["terms"].push_back({{"exponent", t.exponent.str()}, {"coeff", complex_json(t.coeff)}});
  j["resonances"] = json::array();
  for (const auto& r : s.resonances) {
    json rj{{"exponent", r.exponent.str()},
            {"status", r.status == ResonanceStatus::FreeParameter ? "free" : "obstructed"},
            {"name", r.name}};
    if (r.status == ResonanceStatus::FreeParameter) rj["value"] = complex_json(r.value);
    j["resonances"].push_back(std::move(rj));
  }
  j["certified_residual"] = s.certified_residual.str();
  const SubstitutionResult sub = substitute_series(f, s);
  if (sub.valuation) {
    j["residual"] = {{"valuation", sub.valuation->str()}, {"coeff", complex_json(sub.coeff)}};
  } else {
    j["residual"] = {{"valuation", "exact"}};
  }
  return j;
}

json branches_json(const DiffPoly& f, const AnalyzeOptions& o, const LatticePolygon& polygon) {
  json out = json::array();
  const int n = *o.series;
  for (const Branch& b : leading_branches(f, o.point, o.side)) {
    json bj{{"face", face_json(polygon, b.face)},
            {"lambda", complex_json(b.lambda)},
            {"origin", origin_name(b.origin)},
            {"equation", to_string(b.equation, "x0", b.origin == BranchOrigin::EdgeEquation ? "c" : "l")},
            {"slope_coincidence", b.slope_coincidence}};
    bj["leading"] = json::array();
    for (std::size_t i = 0; i < b.c0.size(); ++i) {
      json lj{{"c0", complex_json(b.c0[i])}, {"multiplicity", b.c0_multiplicity[i]}};
      if (o.point && b.rational()) {
        try {
          lj["series"] = series_json(f, extend_series(f, b.lambda.re(), b.c0[i], *o.point, n));
        } catch (const Error& e) {
          if (e.code() != ErrorCode::ObstructedResonance && e.code() != ErrorCode::InvalidBranch) throw;
          lj["error"] = e.what();
        }
      }
      bj["leading"].push_back(std::move(lj));
    }
    if (o.point && b.c0.empty()) bj["note"] = "leading coefficient unconstrained";
    out.push_back(std::move(bj));
  }
  return out;
}

LatticePolygon compute_polygon(const DiffPoly& f, const AnalyzeOptions& o) {
  if (o.polygon == Flavor::Fine) return fine_polygon(o.point ? shift(f, *o.point) : f);
  return o.point ? effective_polygon(f, *o.point) : petrovic_polygon(f);
}

std::string cx_text(const json& c) {
  if (c.is_string()) return c.get<std::string>();
  if (c.contains("precision")) {
    std::ostringstream os;
    os << c["value"]["re"].get<double>();
    const double im = c["value"]["im"].get<double>();
    if (im != 0.0) os << (im < 0 ? " - " : " + ") << std::abs(im) << "*i";
    os << " (+-" << c["precision"].get<double>() << ")";
    return os.str();
  }
  return c["re"].get<std::string>() + " + (" + c["im"].get<std::string>() + ")*i";
}

std::string join(const json& arr, const std::string& sep = ", ") {
  std::string s;
  for (const auto& v : arr) {
    if (!s.empty()) s += sep;
    s += v.is_string() ? v.get<std::string>() : v.dump();
  }
  return s;
}

}  // namespace

std::string version() { return ODEPOLY_VERSION; }

BasePoint parse_point(const std::string& text) {
  if (text == "generic") return std::nullopt;
  try {
    return Rat::parse(text);
  } catch (const std::exception&) {
    raise(ErrorCode::InvalidArgument, "base point must be 'generic' or a rational, got '" + text + "'");
  }
}

json build_report(const DiffPoly& f, const AnalyzeOptions& o) {
  json j;
  j["equation"] = f.str();
  j["order"] = f.order();
  const SingularSet sing = singular_points(f);
  j["singular_points"] = {{"points", rats_json(sing.points)},
                          {"algebraic", sing.algebraic.degree() > 0 ? json(to_string(sing.algebraic)) : json(nullptr)},
                          {"infinity", sing.includes_infinity}};
  j["point"] = o.point ? o.point->str() : "generic";
  const LatticePolygon polygon = compute_polygon(f, o);
  j["polygon"] = polygon_json(polygon);
  if (o.point && o.polygon == Flavor::Fine) j["polygon"]["shifted_to"] = o.point->str();

  const bool singular_point = o.point && sing.contains(*o.point);
  j["movable"] = movable_json(f, singular_point ? BasePoint{} : o.point);
  if (singular_point) j["movable"]["notes"].push_back("base point is singular; movable analysis at a generic point");

  json checks = json::object();
  for (const auto& c : o.checks) {
    if (c == "fuchs") {
      checks["fuchs"] = fuchs_json(f, o);
    } else if (c == "riccati") {
      checks["riccati"] = riccati_json(f);
    } else if (c == "binomial") {
      checks["binomial"] = binomial_json(f);
    } else if (c == "elliptic") {
      checks["elliptic"] = property_json(property_I_check(f));
    } else if (c == "convergence") {
      checks["convergence"] = convergence_json(f);
    } else {
      raise(ErrorCode::InvalidArgument, "unknown check '" + c + "'");
    }
  }
  if (o.psi) {
    const DiffPoly psi = parse_equation(*o.psi);
    const FirstIntegralReport r = partial_first_integral_report(f, psi, o.integral);
    checks["first_integral"] = {{"psi", psi.str()},
                                {"property_I", property_json(r.psi)},
                                {"first_integral", r.first_integral},
                                {"text", r.text}};
  }
  j["checks"] = std::move(checks);
  j["series"] = o.series ? branches_json(f, o, polygon) : json::array();
  j["meta"] = {{"seed", o.seed}, {"version", version()}, {"tolerance", o.tolerance}};
  return j;
}

std::string text_report(const json& r, const LatticePolygon& polygon) {
  std::ostringstream os;
  os << "equation: " << r["equation"].get<std::string>() << " = 0\n";
  os << "order: " << r["order"].get<int>() << "\n";
  const auto& sp = r["singular_points"];
  std::string sing = join(sp["points"]);
  if (!sp["algebraic"].is_null()) sing += (sing.empty() ? "" : ", ") + ("roots of " + sp["algebraic"].get<std::string>());
  if (sp["infinity"].get<bool>()) sing += sing.empty() ? "infinity" : ", infinity";
  os << "singular points: " << (sing.empty() ? "none" : sing) << "\n";
  os << "base point: " << r["point"].get<std::string>() << "\n\n";
  os << r["polygon"]["flavor"].get<std::string>() << " polygon:\n" << render_polygon(polygon, PolygonFormat::Ascii) << "\n";

  const auto& mv = r["movable"];
  os << "movable zeros: " << (mv["has_movable_zeros"].get<bool>() ? "orders " + join(mv["zero_orders"]) : "none") << "\n";
  os << "movable poles: " << (mv["has_movable_poles"].get<bool>() ? "orders " + join(mv["pole_orders"]) : "none") << "\n";
  if (mv["candidates_only"].get<bool>()) os << "  (candidates only: equation is not first order)\n";
  for (const auto& n : mv["notes"]) os << "  note: " << n.get<std::string>() << "\n";

  const auto& ch = r["checks"];
  if (ch.contains("fuchs")) {
    os << "\nfuchs test: " << (ch["fuchs"]["passes"].get<bool>() ? "pass" : "not passed") << "\n";
    os << "  discriminant: " << ch["fuchs"]["discriminant"].get<std::string>() << "\n";
    int i = 1;
    for (const auto& c : ch["fuchs"]["conditions"]) {
      os << "  " << i++ << ". " << c["condition"].get<std::string>() << ": " << c["verdict"].get<std::string>();
      if (!c["witness"].get<std::string>().empty()) os << " (" << c["witness"].get<std::string>() << ")";
      os << "\n";
    }
  }
  if (ch.contains("riccati")) {
    const auto& c = ch["riccati"];
    os << "\nriccati: y' = (" << c["P"].get<std::string>() << ") / (" << c["Q"].get<std::string>() << ")\n";
    os << "  distinct roots of Q: " << c["distinct_root_count"].get<int>() << ", verdict "
       << c["verdict"].get<std::string>() << (c["is_plain_riccati"].get<bool>() ? ", plain Riccati" : "") << "\n";
    if (c.contains("note")) os << "  note: " << c["note"].get<std::string>() << "\n";
  }
  if (ch.contains("binomial")) {
    const auto& c = ch["binomial"];
    os << "\nbinomial (m = " << c["m"].get<int>() << "): " << c["verdict"].get<std::string>()
       << ", deg_y R <= 2m: " << (c["yosida_ok"].get<bool>() ? "yes" : "no") << "\n";
    if (c.contains("chi")) os << "  chi = " << c["chi"].get<std::string>() << "\n";
    for (const auto& a : c["roots"]) os << "  root " << cx_text(a) << "\n";
    if (c.contains("note")) os << "  note: " << c["note"].get<std::string>() << "\n";
  }
  if (ch.contains("elliptic")) {
    const auto& c = ch["elliptic"];
    os << "\nproperty I: " << (c["holds"].get<bool>() ? "holds" : "fails") << "\n";
    if (c.contains("witness")) {
      const auto& w = c["witness"];
      os << "  witness: " << (w["from_vertex"].get<bool>() ? "characteristic root " : "edge slope ")
         << w["value"].get<std::string>() << (w["one_sided"].get<bool>() ? " (end vertex, one-sided interval)" : "")
         << "\n";
    }
  }
  if (ch.contains("first_integral")) {
    os << "\npartial first integral: " << ch["first_integral"]["text"].get<std::string>() << "\n";
  }
  if (ch.contains("convergence")) {
    const auto& c = ch["convergence"];
    os << "\nfine convergence: " << (c["all_terms_full"].get<bool>() ? "every term contains all derivatives" : "no");
    if (c.contains("offending_monomial")) os << " (" << c["offending_monomial"].get<std::string>() << ")";
    os << "\n";
  }
  if (!r["series"].empty()) os << "\nbranches:\n";
  for (const auto& b : r["series"]) {
    os << "  lambda = " << cx_text(b["lambda"]) << " [" << b["origin"].get<std::string>() << ": "
       << b["equation"].get<std::string>() << "]" << (b["slope_coincidence"].get<bool>() ? " (real part on a slope)" : "")
       << "\n";
    for (const auto& l : b["leading"]) {
      os << "    c0 = " << cx_text(l["c0"]);
      if (l["multiplicity"].get<int>() > 1) os << " (multiplicity " << l["multiplicity"].get<int>() << ")";
      os << "\n";
      if (l.contains("error")) os << "      " << l["error"].get<std::string>() << "\n";
      if (!l.contains("series")) continue;
      const auto& s = l["series"];
      for (const auto& t : s["terms"]) {
        os << "      " << cx_text(t["coeff"]) << " * (x - " << s["x0"].get<std::string>() << ")^("
           << t["exponent"].get<std::string>() << ")\n";
      }
      for (const auto& res : s["resonances"]) {
        os << "      resonance at exponent " << res["exponent"].get<std::string>() << ": "
           << res["status"].get<std::string>() << " " << res["name"].get<std::string>() << "\n";
      }
      os << "      residual valuation >= " << s["certified_residual"].get<std::string>() << " (substituted: "
         << s["residual"]["valuation"].get<std::string>() << ")\n";
    }
  }
  return os.str();
}

AnalyzeResult analyze(const AnalyzeOptions& o) {
  AnalyzeResult res;
  try {
    const DiffPoly f = load_equation(o.input).equation;
    res.report = build_report(f, o);
    switch (o.format) {
      case ReportFormat::Json:
        res.output = res.report.dump(2) + "\n";
        break;
      case ReportFormat::Svg:
        res.output = render_polygon(compute_polygon(f, o), PolygonFormat::Svg);
        break;
      case ReportFormat::Text:
        res.output = text_report(res.report, compute_polygon(f, o));
        break;
    }
  } catch (const Error& e) {
    res.error = e.what();
    switch (e.code()) {
      case ErrorCode::ParseError:
      case ErrorCode::EmptyEquation:
        res.exit_code = kExitParse;
        break;
      case ErrorCode::NumericFailure:
        res.exit_code = kExitNumeric;
        break;
      default:
        res.exit_code = kExitPrecondition;
    }
  } catch (const std::exception& e) {
    res.error = std::string("internal error: ") + e.what();
    res.exit_code = kExitNumeric;
  }
  if (res.exit_code != kExitOk) res.report = json();
  return res;
}

}  // namespace odepoly::cli
