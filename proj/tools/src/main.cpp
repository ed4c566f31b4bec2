#include <iostream>

#include <CLI11.hpp>

#include "odepoly/cli/analyze.hpp"
#include "odepoly/cli/corpus.hpp"
#include "odepoly/cli/parser.hpp"
#include "odepoly/cli/render.hpp"
#include "odepoly/errors.hpp"

#ifndef ODEPOLY_CORPUS_DIR
#define ODEPOLY_CORPUS_DIR "corpus"
#endif

namespace {

using namespace odepoly;
using namespace odepoly::cli;

const std::map<std::string, ReportFormat> kFormats{
    {"text", ReportFormat::Text}, {"json", ReportFormat::Json}, {"svg", ReportFormat::Svg}};
const std::map<std::string, PolygonFormat> kPolygonFormats{
    {"ascii", PolygonFormat::Ascii}, {"json", PolygonFormat::Json}, {"svg", PolygonFormat::Svg}};
const std::map<std::string, Flavor> kFlavors{{"petrovic", Flavor::Petrovic}, {"fine", Flavor::Fine}};
const std::map<std::string, BranchSide> kSides{
    {"zeros", BranchSide::Zeros}, {"poles", BranchSide::Poles}, {"all", BranchSide::All}};

int report_error(const AnalyzeResult& r) {
  std::cerr << "odepoly: " << r.error << "\n";
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polygon analysis of algebraic ordinary differential equations"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);

  AnalyzeOptions opts;
  std::string point = "generic";
  std::string checks;
  auto* an = app.add_subcommand("analyze", "Analyze one equation");
  an->add_option("equation", opts.input, "Equation text or a file containing it")->required();
  an->add_option("--point", point, "Base point: a rational or 'generic'");
  an->add_option("--polygon", opts.polygon, "petrovic or fine")->transform(CLI::CheckedTransformer(kFlavors));
  an->add_option("--series", opts.series, "Term budget for series branches")->check(CLI::Range(1, 1000));
  an->add_option("--side", opts.side, "Branches: zeros, poles or all")->transform(CLI::CheckedTransformer(kSides));
  an->add_option("--check", checks, "Comma list of fuchs,riccati,binomial,elliptic,convergence");
  an->add_option("--format", opts.format, "text, json or svg")->transform(CLI::CheckedTransformer(kFormats));
  an->add_option("--seed", opts.seed, "Seed for sampled checks");
  an->add_option("--tol", opts.tolerance, "Relative tolerance for numeric verdicts");
  an->add_option("--psi", opts.psi, "Transformed equation for the partial first integral report");
  an->add_option("--integral", opts.integral, "Description of the transformation R");

  std::string poly_input;
  std::string poly_point = "generic";
  Flavor poly_flavor = Flavor::Petrovic;
  PolygonFormat poly_format = PolygonFormat::Ascii;
  auto* pg = app.add_subcommand("polygon", "Render the polygon of one equation");
  pg->add_option("equation", poly_input, "Equation text or a file containing it")->required();
  pg->add_option("--flavor", poly_flavor, "petrovic or fine")->transform(CLI::CheckedTransformer(kFlavors));
  pg->add_option("--format", poly_format, "ascii, svg or json")->transform(CLI::CheckedTransformer(kPolygonFormats));
  pg->add_option("--point", poly_point, "Base point: a rational or 'generic'");

  CorpusOptions corpus;
  corpus.dir = ODEPOLY_CORPUS_DIR;
  std::string corpus_dir = corpus.dir.string();
  auto* cp = app.add_subcommand("corpus", "Bundled equation corpus");
  cp->require_subcommand(1);
  auto* run = cp->add_subcommand("run", "Analyze every fixture and compare with the golden reports");
  run->add_option("--filter", corpus.filter, "Glob over fixture names");
  run->add_flag("--update", corpus.update, "Rewrite the golden reports");
  run->add_option("--dir", corpus_dir, "Corpus directory");
  run->add_option("--jobs", corpus.jobs, "Worker threads (default: hardware concurrency)");

  CLI11_PARSE(app, argc, argv);

  if (an->parsed()) {
    try {
      opts.point = parse_point(point);
    } catch (const Error& e) {
      std::cerr << "odepoly: " << e.what() << "\n";
      return kExitPrecondition;
    }
    std::stringstream ss(checks);
    for (std::string item; std::getline(ss, item, ',');) {
      if (!item.empty()) opts.checks.push_back(item);
    }
    const AnalyzeResult r = analyze(opts);
    if (r.exit_code != kExitOk) return report_error(r);
    std::cout << r.output;
    return 0;
  }

  if (pg->parsed()) {
    try {
      const DiffPoly f = load_equation(poly_input).equation;
      const BasePoint x0 = parse_point(poly_point);
      const LatticePolygon p = poly_flavor == Flavor::Fine ? fine_polygon(x0 ? shift(f, *x0) : f)
                                                           : petrovic_polygon(f, x0);
      std::cout << render_polygon(p, poly_format);
      return 0;
    } catch (const Error& e) {
      std::cerr << "odepoly: " << e.what() << "\n";
      return e.code() == ErrorCode::ParseError || e.code() == ErrorCode::EmptyEquation ? kExitParse : kExitPrecondition;
    }
  }

  corpus.dir = corpus_dir;
  const auto outcomes = run_corpus(corpus);
  int bad = 0;
  for (const auto& o : outcomes) {
    std::cout << to_string(o.status) << "  " << o.name;
    if (!o.detail.empty()) std::cout << "  " << o.detail;
    std::cout << "\n";
    if (o.status == FixtureStatus::Diff || o.status == FixtureStatus::Missing) ++bad;
  }
  std::cout << outcomes.size() << " fixtures, " << bad << " failing\n";
  return bad == 0 ? 0 : 1;
}
