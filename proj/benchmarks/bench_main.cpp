#include <benchmark/benchmark.h>

#include "odepoly/cli/corpus.hpp"
#include "odepoly/cli/parser.hpp"
#include "odepoly/cli/random_equation.hpp"
#include "odepoly/fuchs.hpp"
#include "odepoly/polygon.hpp"
#include "odepoly/resultant.hpp"
#include "odepoly/series.hpp"

using namespace odepoly;

namespace {

void BM_PetrovicPolygon(benchmark::State& state) {
  std::vector<DiffPoly> eqs;
  for (std::uint64_t seed = 1; seed <= 64; ++seed) eqs.push_back(cli::random_equation(seed));
  for (auto _ : state) {
    for (const auto& f : eqs) benchmark::DoNotOptimize(petrovic_polygon(f));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(eqs.size()));
}
BENCHMARK(BM_PetrovicPolygon);

void BM_FinePolygon(benchmark::State& state) {
  std::vector<DiffPoly> eqs;
  for (std::uint64_t seed = 1; seed <= 64; ++seed) eqs.push_back(cli::random_equation(seed));
  for (auto _ : state) {
    for (const auto& f : eqs) benchmark::DoNotOptimize(fine_polygon(f));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(eqs.size()));
}
BENCHMARK(BM_FinePolygon);

void BM_Fuchs(benchmark::State& state) {
  const DiffPoly f = cli::parse_equation("x*y'^3 + y*y' - 1");
  for (auto _ : state) benchmark::DoNotOptimize(fuchs_check(f));
}
BENCHMARK(BM_Fuchs);

void BM_FuchsWeierstrass(benchmark::State& state) {
  const DiffPoly f = cli::parse_equation("y'^2 = 4*y^3 - 4*y");
  for (auto _ : state) benchmark::DoNotOptimize(fuchs_check(f));
}
BENCHMARK(BM_FuchsWeierstrass);

void BM_SeriesCubic(benchmark::State& state) {
  const DiffPoly f = cli::parse_equation("x*y'^3 + y*y' - 1");
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(extend_series(f, Rat(1), Complex(1), Rat(1), n));
}
BENCHMARK(BM_SeriesCubic)->Arg(10)->Arg(25)->Arg(50);

void BM_SeriesPainleve(benchmark::State& state) {
  const DiffPoly f = cli::parse_equation("y'' - 6*y^2 - x");
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(extend_series(f, Rat(-2), Complex(1), Rat(0), n));
}
BENCHMARK(BM_SeriesPainleve)->Arg(10)->Arg(50);

void BM_Resultant(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const int d = static_cast<int>(state.range(0));
  auto random = [&] {
    std::vector<XPoly> c(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) c[static_cast<std::size_t>(i)] = cli::draw_xpoly(rng, 3, 9, i == d);
    return BiPoly(c);
  };
  const BiPoly p = random();
  const BiPoly q = random();
  for (auto _ : state) benchmark::DoNotOptimize(resultant(p, q, Var::V));
}
BENCHMARK(BM_Resultant)->Arg(2)->Arg(4)->Arg(6);

void BM_Corpus(benchmark::State& state) {
  cli::CorpusOptions o;
  o.dir = ODEPOLY_CORPUS_DIR;
  o.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cli::run_corpus(o));
}
BENCHMARK(BM_Corpus)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
