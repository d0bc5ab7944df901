// Acceptance checks. Each criterion prints one PASS/FAIL/SKIP line. Exit
// status: 0 all passed, 1 any failure, 77 everything requested was skipped.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "ghosa/baselines.hpp"
#include "ghosa/continuous.hpp"
#include "ghosa/engine.hpp"
#include "ghosa/error.hpp"
#include "ghosa/harness.hpp"
#include "ghosa/ingest.hpp"
#include "ghosa/oracles.hpp"
#include "ghosa/problems/benchmarks.hpp"
#include "properties.hpp"
#include "random_instances.hpp"

namespace fs = std::filesystem;
using namespace ghosa;

namespace {

enum class Verdict { Pass, Fail, Skip };

struct Outcome {
  Verdict verdict;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

constexpr std::size_t kRuns = 10;
constexpr std::size_t kIterations = 25000;
constexpr std::size_t kPopulation = 50;

std::optional<fs::path> dataset(const fs::path& relative) {
  if (const char* root = std::getenv(harness::kDataDirEnv); root && *root) {
    if (fs::exists(fs::path(root) / relative)) return fs::path(root) / relative;
  }
  if (fs::exists(fs::path(GHOSA_REPO_DATA_DIR) / relative)) {
    return fs::path(GHOSA_REPO_DATA_DIR) / relative;
  }
  return std::nullopt;
}

// Steps the engine until `target` (internal fitness) is reached or the budget
// runs out; returns the best internal fitness.
double run_until(const DiscreteProblem& p, EngineConfig cfg, double target) {
  Engine engine(p, cfg);
  while (engine.state().iteration < cfg.iterations) {
    engine.step();
    if (engine.state().global_best.fitness <= target + 1e-9) break;
  }
  return engine.state().global_best.fitness;
}

struct NamedOptimum {
  const char* name;
  double optimum;
};

// Best of kRuns seeded runs must equal the optimum exactly, within a time
// limit per instance.
template <class Make>
Outcome optimum_recovery(const char* dir, const char* ext, const std::vector<NamedOptimum>& rows,
                         double limit_s, Make make) {
  std::vector<std::string> missing, failed, passed;
  for (const auto& row : rows) {
    const auto path = dataset(fs::path(dir) / (std::string(row.name) + ext));
    if (!path) {
      missing.push_back(row.name);
      continue;
    }
    const auto t0 = Clock::now();
    std::unique_ptr<DiscreteProblem> problem;
    try {
      problem = make(*path);
    } catch (const Error& e) {
      failed.push_back(fmt::format("{} ({})", row.name, e.what()));
      continue;
    }
    const double target = problem->sense() == Sense::Maximize ? -row.optimum : row.optimum;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < kRuns && best > target; ++r) {
      EngineConfig cfg;
      cfg.population = kPopulation;
      cfg.iterations = kIterations;
      cfg.seed = r + 1;
      best = std::min(best, run_until(*problem, cfg, target));
    }
    const double t = seconds_since(t0);
    const double reported = problem->reported(best);
    const auto msg = fmt::format("{}={} in {:.1f}s", row.name, reported, t);
    (reported == row.optimum && t <= limit_s ? passed : failed).push_back(msg);
  }
  if (passed.empty() && failed.empty()) {
    return {Verdict::Skip, fmt::format("no instances under ${}/{}", harness::kDataDirEnv, dir)};
  }
  std::string detail;
  for (const auto& s : passed) detail += s + " ";
  for (const auto& s : failed) detail += "MISSED " + s + " ";
  if (!missing.empty()) detail += fmt::format("({} instance(s) absent)", missing.size());
  return {failed.empty() ? Verdict::Pass : Verdict::Fail, detail};
}

Outcome qap_optimum() {
  return optimum_recovery("qaplib", ".dat",
                          {{"esc16a", 68}, {"had14", 2724}, {"nug20", 2570},
                           {"nug16a", 1610}, {"esc16b", 292}, {"esc32e", 2}},
                          120.0, [](const fs::path& p) -> std::unique_ptr<DiscreteProblem> {
                            auto inst = ingest::parse_qaplib(ingest::read_file(p));
                            return std::make_unique<problems::QapProblem>(std::move(inst));
                          });
}

Outcome knapsack_optimum() {
  return optimum_recovery("mknap", ".txt",
                          {{"flei", 2139}, {"pet2", 87061}, {"pet3", 4015}, {"pet4", 6120}},
                          120.0, [](const fs::path& p) -> std::unique_ptr<DiscreteProblem> {
                            auto all = ingest::parse_orlib_mknap(ingest::read_file(p));
                            return std::make_unique<problems::KnapsackProblem>(all.at(0));
                          });
}

Outcome tsp_ulysses16() {
  const auto path = dataset("ulysses16.tsp");
  if (!path) return {Verdict::Skip, "ulysses16.tsp not found"};
  const auto t0 = Clock::now();
  const auto inst = std::get<problems::TspInstance>(ingest::load_instance(*path).payload);
  problems::TspProblem problem(inst);
  double best_raw = std::numeric_limits<double>::infinity(), best_geo = best_raw;
  for (std::size_t r = 0; r < kRuns; ++r) {
    EngineConfig cfg;
    cfg.population = kPopulation;
    cfg.iterations = kIterations;
    cfg.seed = r + 1;
    Engine engine(problem, cfg);
    while (engine.state().iteration < cfg.iterations && engine.state().global_best.fitness > 6859) {
      engine.step();
    }
    const auto& tour = engine.state().global_best.sequence;
    best_geo = std::min(best_geo, engine.state().global_best.fitness);
    best_raw = std::min(best_raw, problems::tsp_tour_length(inst, tour, problems::TspMetric::Euclidean));
  }
  const double t = seconds_since(t0);
  const double gap = std::abs(best_raw - 74.11) / 74.11;
  return {gap <= 0.01 && t <= 60.0 ? Verdict::Pass : Verdict::Fail,
          fmt::format("best euclidean {:.4f} (gap {:.3f}%, target 74.11 within 1%), GEO {}, {:.1f}s",
                      best_raw, 100 * gap, best_geo, t)};
}

Outcome oracle_equivalence() {
  constexpr std::size_t kInstances = 20, kSeeds = 10, kIters = 1000;
  const auto t0 = Clock::now();
  auto family = [&](auto make_problem, auto solve) {
    std::size_t hits = 0;
    for (std::size_t i = 0; i < kInstances; ++i) {
      const std::uint64_t inst_seed = 9000 + i;
      auto problem = make_problem(inst_seed);
      const double optimum = solve(inst_seed);
      const double target = problem.sense() == Sense::Maximize ? -optimum : optimum;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t s = 0; s < kSeeds && best > target + 1e-9; ++s) {
        EngineConfig cfg;
        cfg.population = kPopulation;
        cfg.iterations = kIters;
        cfg.seed = s + 1;
        best = std::min(best, run_until(problem, cfg, target));
      }
      hits += std::abs(best - target) <= 1e-9 * std::max(1.0, std::abs(target));
    }
    return hits;
  };
  const std::size_t tsp = family(
      [](std::uint64_t s) { return problems::TspProblem(testing::random_tsp(8, s)); },
      [](std::uint64_t s) { return oracles::brute_force_tsp(testing::random_tsp(8, s)).optimum; });
  const std::size_t qap = family(
      [](std::uint64_t s) { return problems::QapProblem(testing::random_qap(7, s)); },
      [](std::uint64_t s) { return oracles::brute_force_qap(testing::random_qap(7, s)).optimum; });
  const std::size_t mkp = family(
      [](std::uint64_t s) { return problems::KnapsackProblem(testing::random_knapsack(3, 15, s)); },
      [](std::uint64_t s) { return oracles::exact_knapsack(testing::random_knapsack(3, 15, s)).optimum; });
  const std::size_t road = family(
      [](std::uint64_t s) { return problems::RoadProblem(testing::random_road_dag(10, s, 1)); },
      [](std::uint64_t s) {
        return oracles::exact_shortest_paths(testing::random_road_dag(10, s, 1)).optimum;
      });
  const double t = seconds_since(t0);
  const bool ok = tsp >= 18 && qap >= 18 && mkp >= 18 && road >= 18 && t <= 600.0;
  return {ok ? Verdict::Pass : Verdict::Fail,
          fmt::format("tsp {}/20 qap {}/20 knapsack {}/20 road {}/20 (need 18), {:.1f}s", tsp, qap,
                      mkp, road, t)};
}

struct ContinuousTarget {
  int id;
  double optimum;
  double tolerance;
};

const std::vector<ContinuousTarget> kContinuousTargets = {
    {18, 0.0, 0.01},        {19, 0.0, 0.01},       {20, 0.0, 0.01},
    {21, 0.0, 0.01},        {6, -1.03163, 1e-2},   {23, -1.03163, 1e-2},
    {8, 3.0, 0.02},         {13, -24777.0, 24.777},
};

template <class Solve>
Outcome best_of_runs(const std::vector<ContinuousTarget>& targets, Solve solve) {
  bool ok = true;
  std::string detail;
  const auto t0 = Clock::now();
  for (const auto& tg : targets) {
    problems::BenchmarkProblem f(problems::benchmark_function(tg.id));
    double best = std::numeric_limits<double>::infinity();
    std::size_t runs = 0;
    // Best of kRuns: the first run inside the band settles it.
    while (runs < kRuns && !(std::abs(best - tg.optimum) <= tg.tolerance)) {
      best = std::min(best, solve(f, ++runs));
    }
    const bool hit = std::abs(best - tg.optimum) <= tg.tolerance;
    ok = ok && hit;
    detail += fmt::format("f{}={:.6g}{} ", tg.id, best, hit ? "" : "(MISS)");
  }
  return {ok ? Verdict::Pass : Verdict::Fail, detail + fmt::format("{:.1f}s", seconds_since(t0))};
}

Outcome continuous_benchmarks() {
  return best_of_runs(kContinuousTargets, [](const problems::BenchmarkProblem& f, std::size_t run) {
    ContinuousConfig cfg;
    cfg.population = kPopulation;
    cfg.iterations = kIterations;
    cfg.seed = run;
    return optimize_continuous(f, cfg).best;
  });
}

Outcome baseline_sanity() {
  const std::vector<ContinuousTarget> targets = {
      {6, -1.03163, 1e-2}, {18, 0.0, 1e-6}, {19, 0.0, 1e-6}, {20, 0.0, 1e-6}, {21, 0.0, 1e-6}};
  std::string detail;
  bool ok = true;
  for (auto algo : {baselines::Algorithm::GA, baselines::Algorithm::PSO}) {
    const auto o = best_of_runs(targets, [algo](const problems::BenchmarkProblem& f, std::size_t run) {
      baselines::BaselineConfig cfg;
      cfg.algorithm = algo;
      cfg.population = kPopulation;
      cfg.iterations = kIterations;
      return baselines::run_baseline(f, cfg, run).best;
    });
    ok = ok && o.verdict == Verdict::Pass;
    detail += fmt::format("{}: {} ", baselines::to_string(algo), o.detail);
  }
  return {ok ? Verdict::Pass : Verdict::Fail, detail};
}

Outcome property_suites() {
  const auto t0 = Clock::now();
  const auto tsp = dataset("ulysses16.tsp");
  const auto results =
      testing::all_properties(testing::kPropertyCases, 2024, tsp ? tsp->string() : std::string{});
  bool ok = true;
  std::string detail;
  for (const auto& r : results) {
    ok = ok && r.ok() && r.cases == testing::kPropertyCases;
    detail += fmt::format("[{}: {}/{}{}] ", r.name, r.cases - r.failures, r.cases,
                          r.failures ? " first: " + r.first_failure : "");
  }
  return {ok ? Verdict::Pass : Verdict::Fail, detail + fmt::format("{:.1f}s", seconds_since(t0))};
}

std::string canonical(const ingest::Payload& payload) {
  return std::visit(
      [](const auto& p) -> std::string {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, problems::TspInstance>) return ingest::serialize_tsplib(p);
        else if constexpr (std::is_same_v<T, problems::QapInstance>) return ingest::serialize_qaplib(p);
        else if constexpr (std::is_same_v<T, problems::RoadNetwork>) return ingest::serialize_roadnet(p);
        else return ingest::serialize_orlib_mknap(p);
      },
      payload);
}

Outcome parser_golden() {
  const fs::path fixtures = GHOSA_TEST_FIXTURE_DIR;
  std::size_t round_trips = 0, rejections = 0;
  std::string problems_seen;
  for (const char* f : {"square5.tsp", "upper4.tsp", "lower_diag4.tsp", "extras.tsp", "toy3.dat",
                        "toy.txt", "toy.road"}) {
    const auto rec = ingest::load_instance(fixtures / f);
    const auto golden = ingest::read_file(fixtures / "golden" / (std::string(f) + ".golden"));
    const auto again = ingest::parse_instance(golden, rec.format);
    if (canonical(rec.payload) == golden && canonical(again.payload) == golden) {
      ++round_trips;
    } else {
      problems_seen += fmt::format("{} differs from golden; ", f);
    }
  }
  const std::pair<const char*, ErrorCode> bad[] = {{"bad_dimension.tsp", ErrorCode::DimensionMismatch},
                                                   {"truncated.dat", ErrorCode::TruncatedMatrix},
                                                   {"bad_caps.txt", ErrorCode::CountMismatch}};
  for (const auto& [f, code] : bad) {
    try {
      ingest::load_instance(fixtures / f);
      problems_seen += fmt::format("{} accepted; ", f);
    } catch (const Error& e) {
      if (e.code() == code) ++rejections;
      else problems_seen += fmt::format("{} raised {}; ", f, to_string(e.code()));
    }
  }
  const bool ok = round_trips == 7 && rejections == 3;
  return {ok ? Verdict::Pass : Verdict::Fail,
          fmt::format("{}/7 round trips, {}/3 mismatches rejected {}", round_trips, rejections,
                      problems_seen)};
}

const std::map<std::string, std::function<Outcome()>>& criteria() {
  static const std::map<std::string, std::function<Outcome()>> all = {
      {"qap_optimum", qap_optimum},
      {"knapsack_optimum", knapsack_optimum},
      {"tsp_ulysses16", tsp_ulysses16},
      {"oracle_equivalence", oracle_equivalence},
      {"continuous_benchmarks", continuous_benchmarks},
      {"baseline_sanity", baseline_sanity},
      {"property_suites", property_suites},
      {"parser_golden", parser_golden},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> wanted(argv + 1, argv + argc);
  if (wanted.empty() || wanted.front() == "all") {
    wanted.clear();
    for (const auto& [name, fn] : criteria()) wanted.push_back(name);
  }
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& name : wanted) {
    const auto it = criteria().find(name);
    if (it == criteria().end()) {
      std::cerr << "unknown criterion " << name << "\n";
      return 2;
    }
    Outcome o;
    try {
      o = it->second();
    } catch (const std::exception& e) {
      o = {Verdict::Fail, std::string("exception: ") + e.what()};
    }
    const char* tag = o.verdict == Verdict::Pass ? "PASS" : o.verdict == Verdict::Fail ? "FAIL" : "SKIP";
    std::cout << tag << " " << name << ": " << o.detail << std::endl;
    (o.verdict == Verdict::Pass ? passed : o.verdict == Verdict::Fail ? failed : skipped)++;
  }
  if (failed) return 1;
  return passed == 0 && skipped > 0 ? 77 : 0;
}
