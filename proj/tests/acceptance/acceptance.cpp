// Acceptance runner: one PASS/FAIL line per criterion.
#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "odepoly/cli/analyze.hpp"
#include "odepoly/cli/corpus.hpp"
#include "odepoly/cli/parser.hpp"
#include "odepoly/cli/random_equation.hpp"
#include "odepoly/errors.hpp"
#include "odepoly/fuchs.hpp"
#include "odepoly/polygon.hpp"
#include "odepoly/series.hpp"
#include "odepoly/singularities.hpp"
#include "odepoly/special.hpp"
#include "oracles.hpp"

using namespace odepoly;
using cli::parse_equation;

namespace {

using Clock = std::chrono::steady_clock;

// Collects failed expectations for one criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    std::ostringstream out;
    out << (count_ - failures_.size()) << "/" << count_ << " checks";
    for (std::size_t i = 0; i < failures_.size() && i < 5; ++i) out << "; " << failures_[i];
    if (failures_.size() > 5) out << "; ...";
    return out.str();
  }

 private:
  std::size_t count_ = 0;
  std::vector<std::string> failures_;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string timing(double s) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << s << " s";
  return out.str();
}

using PointSet = std::set<std::pair<int, int>>;

PointSet point_set(const LatticePolygon& p) {
  PointSet s;
  for (const auto& q : p.points) s.insert({q.first, q.second});
  return s;
}

std::vector<Rat> slopes(const LatticePolygon& p) {
  std::vector<Rat> s;
  for (const Face* e : p.edges()) {
    if (e->slope) s.push_back(*e->slope);
  }
  return s;
}

std::vector<int> edge_member_points(const LatticePolygon& p, const Face& e, PointSet& out) {
  for (int m : e.members) out.insert({p.points[static_cast<std::size_t>(m)].first, p.points[static_cast<std::size_t>(m)].second});
  return e.members;
}

nlohmann::json fixture_report(const std::string& name) {
  const cli::Fixture fx = cli::load_fixture(std::filesystem::path(ODEPOLY_CORPUS_DIR) / "fixtures" / (name + ".json"));
  return cli::build_report(parse_equation(fx.options.input), fx.options);
}

const Branch* real_branch(const std::vector<Branch>& bs, std::size_t& index) {
  for (const auto& b : bs) {
    for (std::size_t i = 0; i < b.c0.size(); ++i) {
      if (b.c0[i].is_exact_real() || std::abs(b.c0[i].value().imag()) < 1e-12) {
        index = i;
        return &b;
      }
    }
  }
  return nullptr;
}

bool c1(Checker& c) {
  const auto t0 = Clock::now();

  const LatticePolygon p14 = petrovic_polygon(parse_equation("y'^2*(y-1) + 1"));
  c.expect(point_set(p14) == PointSet{{3, 2}, {2, 2}, {0, 0}}, "square-root family points");
  const auto s14 = slopes(p14);
  c.expect(s14 == std::vector<Rat>{Rat(1), Rat(0)}, "square-root family slopes 1, 0");
  bool left = false, horizontal = false;
  for (const Face* e : p14.edges()) {
    left = left || (e->side == Side::Left && e->slope == Rat(1));
    horizontal = horizontal || (e->side == Side::Horizontal && e->slope == Rat(0));
  }
  c.expect(left && horizontal, "square-root family left and horizontal edge");

  const LatticePolygon p14b = petrovic_polygon(parse_equation("y'^2*y + 1"));
  c.expect(slopes(p14b) == std::vector<Rat>{Rat(2, 3)}, "shifted family single edge of slope 2/3");

  const LatticePolygon p5n = petrovic_polygon(parse_equation("x*y'^3 + y*y' - 1"), Rat(1));
  c.expect(slopes(p5n) == std::vector<Rat>{Rat(1)}, "cubic example single edge of slope 1");
  bool through = false;
  for (const Face* e : p5n.edges()) {
    PointSet members;
    edge_member_points(p5n, *e, members);
    through = members == PointSet{{0, 0}, {3, 3}};
  }
  c.expect(through, "cubic example edge through (0,0), (3,3) only");
  c.expect(point_set(p5n).count({2, 1}) == 1, "cubic example has (2,1) below the edge");

  const LatticePolygon p5 = petrovic_polygon(parse_equation("y'^2 - (y'-1)*(y-1) + x"), Rat(2));
  bool collinear = false;
  for (const Face* e : p5.edges()) {
    PointSet members;
    edge_member_points(p5, *e, members);
    collinear = collinear || (e->slope == Rat(1) && members.count({0, 0}) && members.count({1, 1}) && members.count({2, 2}));
  }
  c.expect(collinear, "collinear example edge contains (0,0), (1,1), (2,2) with slope 1");

  const LatticePolygon tri = petrovic_polygon(parse_equation("y''^2 = y^4 + y^3 + y^2 + y + 1"));
  PointSet corners;
  for (const Face* v : tri.vertices()) {
    const auto& q = tri.points[static_cast<std::size_t>(v->endpoints[0])];
    corners.insert({q.first, q.second});
  }
  c.expect(corners == PointSet{{0, 0}, {4, 0}, {2, 4}}, "quartic triangle corners");

  const double s = seconds_since(t0);
  c.expect(s < 1.0, "time " + timing(s) + " >= 1 s");
  return c.ok();
}

bool c2(Checker& c) {
  const MovableReport a = movable_report(parse_equation("x*y'^3 + y*y' - 1"));
  c.expect(a.movable_zero_orders == std::vector<Rat>{Rat(1)}, "cubic example zero orders {1}");
  c.expect(a.movable_pole_orders.empty(), "cubic example no poles");
  const MovableReport b = movable_report(parse_equation("y' + y^2"));
  c.expect(b.movable_pole_orders == std::vector<Rat>{Rat(1)}, "y' + y^2 pole order 1");
  const MovableReport d = movable_report(parse_equation("y'^2*(y-1) + 1"));
  c.expect(d.movable_zero_orders == std::vector<Rat>{Rat(1)}, "square-root family zero orders {1}");
  return c.ok();
}

bool c3(Checker& c) {
  FuchsOptions o;
  o.tolerance = 1e-9;
  const FuchsReport r = fuchs_check(parse_equation("x*y'^3 + y*y' - 1"), o);
  std::vector<Verdict> v;
  for (const auto& k : r.conditions) v.push_back(k.verdict);
  c.expect(v == std::vector<Verdict>{Verdict::Pass, Verdict::Pass, Verdict::Fail, Verdict::Skipped},
           "cubic example verdicts (pass, pass, fail, skipped)");
  c.expect(to_string(r.discriminant_reduced, "x", "y") == "y^3 + 27/4*x", "cubic example discriminant zero set");

  int riccati = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) riccati += fuchs_check(gen::random_riccati(seed), o).passes();
  c.expect(riccati == 100, std::to_string(riccati) + "/100 Riccati equations pass");

  const FuchsReport cube = fuchs_check(parse_equation("y' - y^3"), o);
  c.expect(cube.conditions[1].verdict == Verdict::Fail, "y' - y^3 fails condition 2");

  const FuchsReport w = fuchs_check(parse_equation("y'^2 = 4*y^3 - 4*y"), o);
  bool all = true;
  for (const auto& k : w.conditions) all = all && (k.verdict == Verdict::Pass || k.verdict == Verdict::NumericPass);
  c.expect(all, "Weierstrass passes all four");
  return c.ok();
}

bool c4(Checker& c) {
  const DiffPoly cubic = parse_equation("x*y'^3 + y*y' - 1");

  const auto b8 = leading_branches(cubic, Rat(8), BranchSide::Zeros);
  bool half = false;
  for (const auto& b : b8) {
    for (const auto& c0 : b.c0) half = half || c0 == Complex(Rat(1, 2));
  }
  c.expect(half, "x0 = 8: leading coefficient 1/2");

  const PuiseuxSeries s1 = extend_series(cubic, Rat(1), Complex(1), Rat(1), 2);
  c.expect(s1.terms.size() == 2 && s1.terms[0].coeff == Complex(1) && s1.terms[1].coeff == Complex(Rat(-1, 3)),
           "x0 = 1: [1, -1/3]");

  const DiffPoly p1 = parse_equation("y'' - 6*y^2 - x");
  const auto bp = leading_branches(p1, Rat(0), BranchSide::Poles);
  c.expect(bp.size() == 1 && bp[0].c0.size() == 1 && bp[0].c0[0] == Complex(1), "Painleve I c0 = 1");
  const PuiseuxSeries sp = extend_series(p1, Rat(-2), Complex(1), Rat(0), 7);
  bool third = false;
  for (const auto& t : sp.terms) third = third || (t.exponent == Rat(3) && t.coeff == Complex(Rat(-1, 6)));
  c.expect(third, "Painleve I coefficient -1/6 at exponent 3");
  c.expect(sp.resonances.size() == 1 && sp.resonances[0].exponent == Rat(4) &&
               sp.resonances[0].status == ResonanceStatus::FreeParameter,
           "Painleve I free parameter at exponent 4");

  const auto b14 = leading_branches(parse_equation("y'^2*y + 1"), Rat(0), BranchSide::Zeros);
  c.expect(b14.size() == 1 && to_string(b14[0].equation, "x0", "c") == "4/9*c^3 + 1", "shifted family edge equation");
  bool cubes = !b14.empty() && !b14[0].c0.empty();
  for (const auto& b : b14) {
    for (const auto& c0 : b.c0) cubes = cubes && std::abs(std::pow(c0.value(), 3) + 2.25) < 1e-12;
  }
  c.expect(cubes, "shifted family c0^3 = -9/4");

  const auto t0 = Clock::now();
  for (int n = 1; n <= 50; ++n) {
    const PuiseuxSeries s = extend_series(cubic, Rat(1), Complex(1), Rat(1), n);
    const auto r = substitute_series(cubic, s);
    c.expect(!r.valuation || *r.valuation >= s.certified_residual, "certificate at N = " + std::to_string(n));
  }
  const double sec = seconds_since(t0);
  c.expect(sec < 1.0, "certificate sweep " + timing(sec) + " >= 1 s");
  return c.ok();
}

bool c5(Checker& c) {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 250; ++seed) {
    const DiffPoly f = cli::random_equation(seed);
    std::mt19937_64 rng(seed * 7919);
    const Rat x0 = gen::nonsingular_point(f, rng);
    const DiffPoly g = shift(f, x0);
    const auto ms = g.monomials();
    PointSet fine;
    for (const auto& q : fine_polygon(g).points) {
      for (const auto& k : q.contributors) {
        if (k.x_power == ms[static_cast<std::size_t>(k.monomial)].coeff.valuation()) fine.insert({q.first, q.second});
      }
    }
    PointSet rotated;
    for (const auto& q : petrovic_polygon(f, x0).points) rotated.insert({-q.second, q.first});
    ++checked;
    c.expect(fine == rotated, "seed " + std::to_string(seed));
  }
  c.expect(checked >= 200, "fewer than 200 equations");
  return c.ok();
}

bool c6(Checker& c) {
  const DiffPoly f = parse_equation("y'^2*y + 1");
  std::size_t i = 0;
  const auto bs = leading_branches(f, Rat(0), BranchSide::Zeros);
  const Branch* b = real_branch(bs, i);
  c.expect(b != nullptr, "real branch of shifted family");
  if (!b) return false;
  const PuiseuxSeries s = extend_series(f, b->lambda.re(), b->c0[i], Rat(0), 6);
  for (int sign : {1, -1}) {
    const auto ref = oracle::closed_form_family(sign, 6, false);
    for (int k = 0; k < 6; ++k) {
      const Rat e = b->lambda.re() + Rat(k, 3);
      std::complex<double> got = 0.0;
      for (const auto& t : s.terms) {
        if (t.exponent == e) got = t.coeff.value();
      }
      const auto& r = ref[static_cast<std::size_t>(k)];
      std::ostringstream what;
      what << "sign " << sign << ", exponent " << e.str() << ": cube " << std::pow(got, 3).real() << " vs "
           << r.cube.str();
      c.expect(r.exponent == e && std::abs(std::pow(got, 3) - r.cube.to_double()) < 1e-12, what.str());
    }
  }
  return c.ok();
}

bool c7(Checker& c) {
  const std::vector<std::pair<std::string, RiccatiVerdict>> fixtures{
      {"riccati_three_roots", RiccatiVerdict::AllSingleValuedRational},
      {"riccati_two_roots", RiccatiVerdict::AtMostOneTranscendental},
      {"riccati_double_root", RiccatiVerdict::AtMostTwoTranscendental}};
  for (const auto& [name, want] : fixtures) {
    const auto r = fixture_report(name);
    c.expect(r["checks"]["riccati"]["verdict"] == to_string(want), name);
  }

  std::mt19937_64 rng(41);
  int classified = 0;
  while (classified < 100) {
    const BiPoly q = cli::draw(rng, 0, 1) ? BiPoly(cli::draw_xpoly(rng, 2, 4, true)) : [&] {
      const int d = static_cast<int>(cli::draw(rng, 1, 3));
      std::vector<XPoly> co(static_cast<std::size_t>(d) + 1);
      for (int k = 0; k <= d; ++k) co[static_cast<std::size_t>(k)] = cli::draw_xpoly(rng, 2, 4, k == d);
      return BiPoly(co);
    }();
    const int dp = static_cast<int>(cli::draw(rng, 0, 3));
    std::vector<XPoly> pc(static_cast<std::size_t>(dp) + 1);
    for (int k = 0; k <= dp; ++k) pc[static_cast<std::size_t>(k)] = cli::draw_xpoly(rng, 2, 4, k == dp);
    const BiPoly p(pc);
    if (deg_v(gcd(p, q)) > 0) continue;
    const RiccatiClass r = riccati_classify(p, q);
    const bool plain = deg_v(q) == 0 && deg_v(p) <= 2;
    c.expect(r.is_plain_riccati == plain, "plain iff on input " + std::to_string(classified));
    if (r.is_plain_riccati) {
      std::vector<DiffMonomial> ms{{q.coeff(0), {0, 1}}};
      for (int k = 0; k <= p.degree(); ++k) ms.push_back({-p.coeff(k), {k}});
      c.expect(fuchs_check(DiffPoly::normalize(ms)).passes(), "plain Riccati fails Fuchs");
    }
    ++classified;
  }
  return c.ok();
}

bool c8(Checker& c) {
  for (int m = 1; m <= 4; ++m) {
    for (int n = m + 1; n <= 8; ++n) {
      const DiffPoly f = DiffPoly::normalize({{XPoly(Rat(1)), {0, 0, m}}, {XPoly(Rat(-1)), {n}}});
      c.expect(property_I_check(f).holds == oracle::property_I(m, n),
               "(m, n) = (" + std::to_string(m) + ", " + std::to_string(n) + ")");
    }
  }
  for (const auto& [m, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 4}, {2, 6}}) {
    const DiffPoly f = DiffPoly::normalize({{XPoly(Rat(1)), {0, 0, m}}, {XPoly(Rat(-1)), {n}}});
    c.expect(property_I_check(f).holds, "pair (" + std::to_string(m) + ", " + std::to_string(n) + ") holds");
  }
  c.expect(property_I_check(parse_equation("y'^2 = 4*y^3 - 4*y")).holds, "Weierstrass holds");
  c.expect(!property_I_check(parse_equation("y''^2 = y^5")).holds, "(y'')^2 = y^5 fails");
  return c.ok();
}

bool c9(Checker& c) {
  const auto r7 = fixture_report("binomial_repeated_root");
  c.expect(r7["checks"]["binomial"]["verdict"] == to_string(BinomialVerdict::FormEq7), "repeated-root fixture");
  const auto r8 = fixture_report("binomial_two_roots");
  c.expect(r8["checks"]["binomial"]["verdict"] == to_string(BinomialVerdict::FormEq8), "two-root fixture");

  cli::AnalyzeOptions o;
  o.checks = {"binomial"};
  const auto r = cli::build_report(parse_equation("y' = y^3"), o);
  c.expect(r["checks"]["binomial"]["verdict"] == to_string(BinomialVerdict::MovableSingularities),
           "y' = y^3 movable singularities");
  c.expect(r["checks"]["binomial"]["yosida_ok"] == false, "y' = y^3 yosida_ok = false");
  return c.ok();
}

bool c10(Checker& c) {
  const auto t0 = Clock::now();
  cli::CorpusOptions o;
  o.dir = ODEPOLY_CORPUS_DIR;
  const auto outcomes = cli::run_corpus(o);
  const double sec = seconds_since(t0);
  for (const auto& r : outcomes) {
    c.expect(r.status == cli::FixtureStatus::Match, r.name + " " + to_string(r.status) + " " + r.detail);
  }
  c.expect(outcomes.size() >= 30, std::to_string(outcomes.size()) + " fixtures");
  c.expect(sec < 5.0, "corpus " + timing(sec) + " >= 5 s");
  return c.ok();
}

const std::vector<std::pair<std::string, std::function<bool(Checker&)>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<bool(Checker&)>>> all{
      {"polygon fixtures", c1},        {"movable classification", c2}, {"Fuchs suite", c3},
      {"series suite", c4},            {"rotation property", c5},      {"closed-form cross-check", c6},
      {"Riccati classification", c7},  {"Property I", c8},             {"binomial and Yosida", c9},
      {"corpus end to end", c10}};
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"odepoly acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-10)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  bool all_ok = true;
  for (std::size_t i = 0; i < criteria().size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    if (only != 0 && only != n) continue;
    Checker c;
    bool ok = false;
    const auto t0 = Clock::now();
    try {
      ok = criteria()[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    ok = ok && c.ok();
    all_ok = all_ok && ok;
    std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << "  " << criteria()[i].first << " ("
              << c.summary() << ", " << timing(seconds_since(t0)) << ")\n";
  }
  return all_ok ? 0 : 1;
}
