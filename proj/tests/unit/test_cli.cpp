#include <doctest.h>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "odepoly/cli/analyze.hpp"
#include "odepoly/cli/corpus.hpp"
#include "odepoly/cli/parser.hpp"
#include "odepoly/cli/random_equation.hpp"
#include "odepoly/cli/render.hpp"
#include "odepoly/errors.hpp"

using namespace odepoly;
using namespace odepoly::cli;
using nlohmann::json;

namespace {

struct SvgCounts {
  int circles = 0;
  int labels = 0;
  int polylines = 0;
  std::string view_box;
};

SvgCounts parse_svg(const std::string& text) {
  namespace pt = boost::property_tree;
  std::istringstream in(text);
  pt::ptree tree;
  pt::read_xml(in, tree);  // throws on malformed XML
  SvgCounts c;
  const pt::ptree& svg = tree.get_child("svg");
  c.view_box = svg.get<std::string>("<xmlattr>.viewBox");
  for (const auto& [tag, node] : svg) {
    const std::string cls = node.get<std::string>("<xmlattr>.class", "");
    if (tag == "circle" && cls == "point") ++c.circles;
    if (tag == "text" && cls == "label") ++c.labels;
    if (tag == "polyline") ++c.polylines;
  }
  return c;
}

ParseError parse_failure(std::string_view text) {
  try {
    parse_equation(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for " << text);
  return ParseError(0, 0, "");
}

AnalyzeResult run(const std::string& input, std::vector<std::string> checks = {},
                  ReportFormat format = ReportFormat::Json) {
  AnalyzeOptions o;
  o.input = input;
  o.checks = std::move(checks);
  o.format = format;
  return analyze(o);
}

}  // namespace

TEST_CASE("parser examples") {
  const DiffPoly a = parse_equation("x*y'^3 + y*y' - 1 = 0");
  CHECK(a.order() == 1);
  CHECK(a.size() == 3);
  CHECK(parse_equation("y^(4) + y*y'' = 0").order() == 4);
  CHECK(parse_equation("y^(2)") == parse_equation("y''"));
  CHECK(parse_equation("y' = y^2 + x") == parse_equation("y' - y^2 - x"));
  CHECK(parse_equation("  # comment only line\ny' - 1/2*y  # trailing\n") == parse_equation("y' - 1/2*y"));
  CHECK(parse_equation("2/4*y") == parse_equation("1/2*y"));
  CHECK(parse_failure("y/2").column() == 2);
  CHECK(parse_equation("(y - 1)^2") == parse_equation("y^2 - 2*y + 1"));
  CHECK(parse_equation("-(x + 1)*y'") == parse_equation("-x*y' - y'"));
}

TEST_CASE("parser errors carry positions") {
  const ParseError e = parse_failure("y''' +");
  CHECK(e.line() == 1);
  CHECK(e.column() == 6);
  CHECK(e.code() == ErrorCode::ParseError);

  const ParseError f = parse_failure("y'\n  + z");
  CHECK(f.line() == 2);
  CHECK(f.column() == 5);

  CHECK(parse_failure("y = = 1").column() == 5);
  CHECK(parse_failure("1/0*y").code() == ErrorCode::ParseError);
  CHECK(parse_failure("y^(100)").code() == ErrorCode::ParseError);
  CHECK(parse_failure("(y").code() == ErrorCode::ParseError);
  CHECK(parse_failure("y^9999").code() == ErrorCode::ParseError);

  for (const char* blank : {"", "   ", "y' = y'", "# nothing"}) {
    try {
      parse_equation(blank);
      FAIL("expected EmptyEquation");
    } catch (const ParseError&) {
      FAIL("blank input is not a syntax error");
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::EmptyEquation);
    }
  }
}

TEST_CASE("print/parse round trip on random equations") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const DiffPoly f = random_equation(seed);
    CHECK(parse_equation(f.str()) == f);
  }
}

TEST_CASE("load_equation distinguishes files from inline text") {
  const EquationText a = load_equation("y' + y^2");
  CHECK(a.provenance == Provenance::Inline);
  const auto path = std::filesystem::temp_directory_path() / "odepoly_test_eq.txt";
  {
    std::ofstream(path) << "# cubic\nx*y'^3 + y*y' - 1 = 0\n";
  }
  const EquationText b = load_equation(path.string());
  CHECK(b.provenance == Provenance::File);
  CHECK(b.equation == parse_equation("x*y'^3 + y*y' - 1"));
  std::filesystem::remove(path);
}

TEST_CASE("polygon JSON") {
  const json a = polygon_json(petrovic_polygon(parse_equation("y'^2*(y-1) + 1")));
  CHECK(a["points"] == json::parse("[[0,0],[2,2],[3,2]]"));
  REQUIRE(a["edges"].size() == 2);
  CHECK(a["edges"][0]["slope"] == "1");
  CHECK(a["edges"][0]["side"] == "left");
  CHECK(a["edges"][1]["slope"] == "0");
  CHECK(a["edges"][1]["side"] == "horizontal");

  const json t = polygon_json(petrovic_polygon(parse_equation("y''^2 = y^4 + 1")));
  CHECK(t["vertices"] == json::parse("[[0,0],[2,4],[4,0]]"));
  CHECK(t["edges"][1]["slope"] == "-2");
  CHECK(t["edges"][1]["side"] == "right");

  const json f = polygon_json(fine_polygon(parse_equation("y'^2*(y-1) + 1")));
  CHECK(f["flavor"] == "fine");
  CHECK(f["edges"][1]["slope"].is_null());
}

TEST_CASE("SVG is well-formed with one circle and label per point") {
  for (const char* text : {"y'^2*(y-1) + 1", "y''^2 = y^4 + y^3 + y^2 + y + 1", "y' - y", "x*y'^3 + y*y' - 1"}) {
    const LatticePolygon p = petrovic_polygon(parse_equation(text));
    const SvgCounts c = parse_svg(render_polygon(p, PolygonFormat::Svg));
    CHECK(c.circles == static_cast<int>(p.points.size()));
    CHECK(c.labels == static_cast<int>(p.points.size()));
    CHECK(c.polylines == 1);
    CHECK_FALSE(c.view_box.empty());
  }
  // Fine points can have negative coordinates.
  const LatticePolygon fp = fine_polygon(parse_equation("x^3*y'' + y'^2 - y"));
  const SvgCounts c = parse_svg(render_polygon(fp, PolygonFormat::Svg));
  CHECK(c.circles == static_cast<int>(fp.points.size()));
}

TEST_CASE("SVG viewBox covers the lattice extent plus one unit") {
  const std::string svg = render_polygon(petrovic_polygon(parse_equation("y''^2 = y^4 + 1")), PolygonFormat::Svg);
  const SvgCounts c = parse_svg(svg);
  std::istringstream in(c.view_box);
  double x = 0, y = 0, w = 0, h = 0;
  in >> x >> y >> w >> h;
  CHECK(w > 0.0);
  CHECK(h > 0.0);
  // Extent is 4 x 4 lattice units; the margin adds one unit per side.
  CHECK(w / h == doctest::Approx(1.0));
}

TEST_CASE("ASCII rendering marks points and lists edges") {
  const std::string a = render_polygon(petrovic_polygon(parse_equation("y''^2 = y^4 + 1")), PolygonFormat::Ascii);
  CHECK(a.find('*') != std::string::npos);
  CHECK(a.find('/') != std::string::npos);
  CHECK(a.find('\\') != std::string::npos);
  CHECK(a.find("-2") != std::string::npos);
}

TEST_CASE("complex values are tagged in JSON") {
  CHECK(complex_json(Complex(Rat(-1, 3))) == "-1/3");
  const json g = complex_json(Complex(Rat(1), Rat(2)));
  CHECK(g["re"] == "1");
  CHECK(g["im"] == "2");
  const json n = complex_json(Complex::approx({1.5, -0.5}, 1e-14));
  CHECK(n.contains("value"));
  CHECK(n["precision"].get<double>() > 0.0);
}

TEST_CASE("analyze: report schema and verdicts") {
  const AnalyzeResult r = run("x*y'^3+y*y'-1=0", {"fuchs"});
  REQUIRE(r.exit_code == kExitOk);
  const json j = json::parse(r.output);
  for (const char* key : {"equation", "order", "singular_points", "polygon", "movable", "checks", "series", "meta"}) {
    CHECK_MESSAGE(j.contains(key), key);
  }
  CHECK(j["meta"].contains("seed"));
  CHECK(j["meta"].contains("version"));
  CHECK(j["meta"].contains("tolerance"));
  std::vector<std::string> v;
  for (const auto& c : j["checks"]["fuchs"]["conditions"]) v.push_back(c["verdict"]);
  CHECK(v == std::vector<std::string>{"pass", "pass", "fail", "skipped"});
  CHECK(j["equation"] == "x*y'^3 + y'*y - 1");
}

TEST_CASE("analyze: series at x0 = 1 on the cubic example") {
  AnalyzeOptions o;
  o.input = "x*y'^3+y*y'-1=0";
  o.point = Rat(1);
  o.series = 5;
  o.side = BranchSide::Zeros;
  o.format = ReportFormat::Json;
  const AnalyzeResult r = analyze(o);
  REQUIRE(r.exit_code == kExitOk);
  const json j = json::parse(r.output);
  bool found = false;
  for (const auto& b : j["series"]) {
    CHECK(b["lambda"] == "1");
    for (const auto& lead : b["leading"]) {
      if (lead["c0"] != "1") continue;
      found = true;
      const auto& terms = lead["series"]["terms"];
      REQUIRE(terms.size() >= 2);
      CHECK(terms[0]["coeff"] == "1");
      CHECK(terms[1]["coeff"] == "-1/3");
    }
  }
  CHECK(found);
}

TEST_CASE("analyze: Painleve I polygon") {
  const AnalyzeResult r = run("y''-6*y^2-x=0");
  REQUIRE(r.exit_code == kExitOk);
  const json j = json::parse(r.output);
  CHECK(j["polygon"]["edges"][1]["slope"] == "-2");
  CHECK(j["movable"]["pole_orders"] == json::parse("[\"2\"]"));
  CHECK(j["movable"]["candidates_only"] == true);
}

TEST_CASE("analyze: exit codes") {
  CHECK(run("y''' +").exit_code == kExitParse);
  CHECK(run("y''' +").error.rfind("ParseError", 0) == 0);
  CHECK(run("y' - y'").exit_code == kExitParse);
  CHECK(run("y'' = y", {"fuchs"}).exit_code == kExitPrecondition);
  CHECK(run("y' = y^2", {"nonsense"}).exit_code == kExitPrecondition);
  AnalyzeOptions o;
  o.input = "x*y'^3 + y*y' - 1";
  o.point = Rat(0);
  o.series = 3;
  o.side = BranchSide::Zeros;
  CHECK(analyze(o).exit_code == kExitPrecondition);
}

TEST_CASE("analyze: output is byte-stable for a seed") {
  AnalyzeOptions o;
  o.input = "(y' - 1)^2 = y - x";
  o.checks = {"fuchs", "binomial"};
  o.format = ReportFormat::Json;
  o.seed = 9;
  CHECK(analyze(o).output == analyze(o).output);
}

TEST_CASE("analyze: text and SVG formats") {
  const AnalyzeResult t = run("y'^2*(y-1) + 1", {}, ReportFormat::Text);
  REQUIRE(t.exit_code == kExitOk);
  CHECK(t.output.find("y'^2*y - y'^2 + 1") != std::string::npos);
  const AnalyzeResult s = run("y'^2*(y-1) + 1", {}, ReportFormat::Svg);
  REQUIRE(s.exit_code == kExitOk);
  CHECK(parse_svg(s.output).circles == 3);
}

TEST_CASE("parse_point") {
  CHECK_FALSE(parse_point("generic").has_value());
  CHECK(parse_point("-3/4") == Rat(-3, 4));
  CHECK_THROWS_AS(parse_point("abc"), Error);
}

TEST_CASE("random equations respect the requested shape") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const DiffPoly f = random_equation(seed);
    CHECK(f.order() <= 3);
    CHECK(f.size() <= 6);
    CHECK(f.coeff_degree() <= 3);
  }
  CHECK(random_equation(5) == random_equation(5));
}

TEST_CASE("corpus runner matches the golden reports") {
  CorpusOptions o;
  o.dir = ODEPOLY_CORPUS_DIR;
  const auto outcomes = run_corpus(o);
  CHECK(outcomes.size() >= 30);
  for (const auto& r : outcomes) CHECK_MESSAGE(r.status == FixtureStatus::Match, r.name << ": " << r.detail);
  for (std::size_t i = 1; i < outcomes.size(); ++i) CHECK(outcomes[i - 1].name < outcomes[i].name);

  o.filter = "riccati_*";
  const auto some = run_corpus(o);
  CHECK(some.size() == 5);
}
