#include "odepoly/cli/corpus.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "odepoly/cli/random_equation.hpp"
#include "odepoly/errors.hpp"

namespace odepoly::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

BranchSide parse_side(const std::string& s) {
  if (s == "zeros") return BranchSide::Zeros;
  if (s == "poles") return BranchSide::Poles;
  if (s == "all") return BranchSide::All;
  raise(ErrorCode::InvalidArgument, "unknown branch side '" + s + "'");
}

std::string first_difference(const std::string& a, const std::string& b) {
  std::istringstream sa(a), sb(b);
  std::string la, lb;
  for (int line = 1;; ++line) {
    const bool ga = static_cast<bool>(std::getline(sa, la));
    const bool gb = static_cast<bool>(std::getline(sb, lb));
    if (!ga && !gb) return {};
    if (!ga || !gb || la != lb) {
      return "line " + std::to_string(line) + ": expected '" + (gb ? lb : "<eof>") + "', got '" + (ga ? la : "<eof>") +
             "'";
    }
  }
}

}  // namespace

Fixture load_fixture(const fs::path& path) {
  const json j = json::parse(read_file(path));
  Fixture fx;
  fx.name = path.stem().string();
  AnalyzeOptions& o = fx.options;
  if (j.contains("random_seed")) {
    o.input = random_equation(j["random_seed"].get<std::uint64_t>()).str();
  } else {
    o.input = j.at("equation").get<std::string>();
  }
  if (j.contains("point")) o.point = parse_point(j["point"].get<std::string>());
  if (j.contains("polygon")) o.polygon = j["polygon"].get<std::string>() == "fine" ? Flavor::Fine : Flavor::Petrovic;
  if (j.contains("series")) o.series = j["series"].get<int>();
  if (j.contains("side")) o.side = parse_side(j["side"].get<std::string>());
  if (j.contains("checks")) o.checks = j["checks"].get<std::vector<std::string>>();
  if (j.contains("seed")) o.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("tol")) o.tolerance = j["tol"].get<double>();
  if (j.contains("psi")) o.psi = j["psi"].get<std::string>();
  if (j.contains("integral")) o.integral = j["integral"].get<std::string>();
  o.format = ReportFormat::Json;
  return fx;
}

json golden_value(const AnalyzeResult& r) {
  if (r.exit_code == kExitOk) return r.report;
  return json{{"error", {{"exit_code", r.exit_code}, {"message", r.error}}}};
}

std::string to_string(FixtureStatus s) {
  switch (s) {
    case FixtureStatus::Match: return "ok";
    case FixtureStatus::Diff: return "DIFF";
    case FixtureStatus::Missing: return "MISSING";
    case FixtureStatus::Updated: return "updated";
  }
  return "?";
}

std::vector<FixtureOutcome> run_corpus(const CorpusOptions& options) {
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(options.dir / "fixtures")) {
    if (entry.path().extension() != ".json") continue;
    const std::string name = entry.path().stem().string();
    if (!options.filter.empty() && fnmatch(options.filter.c_str(), name.c_str(), 0) != 0) continue;
    paths.push_back(entry.path());
  }
  std::sort(paths.begin(), paths.end());

  std::vector<FixtureOutcome> out(paths.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&]() {
    for (std::size_t i = next++; i < paths.size(); i = next++) {
      FixtureOutcome& res = out[i];
      res.name = paths[i].stem().string();
      std::string got;
      try {
        const Fixture fx = load_fixture(paths[i]);
        got = golden_value(analyze(fx.options)).dump(2) + "\n";
      } catch (const std::exception& e) {
        got = json{{"error", {{"exit_code", -1}, {"message", std::string("bad fixture: ") + e.what()}}}}.dump(2) + "\n";
      }
      const fs::path golden = options.dir / "golden" / (res.name + ".json");
      if (options.update) {
        std::ofstream(golden) << got;
        res.status = FixtureStatus::Updated;
      } else if (!fs::exists(golden)) {
        res.status = FixtureStatus::Missing;
      } else {
        res.detail = first_difference(got, read_file(golden));
        res.status = res.detail.empty() ? FixtureStatus::Match : FixtureStatus::Diff;
      }
    }
  };
  unsigned jobs = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, paths.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace odepoly::cli
