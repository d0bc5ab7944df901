#include <benchmark/benchmark.h>

#include "ghosa/continuous.hpp"
#include "ghosa/engine.hpp"
#include "ghosa/ingest.hpp"
#include "ghosa/lbniv.hpp"
#include "ghosa/oracles.hpp"
#include "ghosa/problems/benchmarks.hpp"
#include "random_instances.hpp"

namespace {

using namespace ghosa;

void BM_Baiting(benchmark::State& state) {
  Rng rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  auto seq = problems::random_permutation(n, rng);
  std::size_t k = 0;
  for (auto _ : state) {
    const auto bait = static_cast<Event>(k % n + 1);
    apply_bait(seq, bait, (k * 7) % n, static_cast<BaitCase>(k % 3), SequenceKind::Permutation,
               static_cast<int>(n));
    benchmark::DoNotOptimize(seq.events.data());
    ++k;
  }
}
BENCHMARK(BM_Baiting)->Arg(16)->Arg(280);

void BM_Rotation(benchmark::State& state) {
  Rng rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto seq = problems::random_permutation(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(attracting_prey_swarms(seq, n / 2, 3, {0, n}));
  }
}
BENCHMARK(BM_Rotation)->Arg(16)->Arg(280);

void BM_LbnivMove(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  lbniv::LbnivParams p;
  p.bounds.assign(dim, Bounds{-5.0, 5.0});
  auto agent = lbniv::make_agent(std::vector<double>(dim, 1.0), 2.0, p);
  agent.d_rear.assign(dim, 0.1);
  agent.d_front.assign(dim, -0.1);
  const std::vector<double> best(dim, 0.0), front(dim, 2.0), rear(dim, -1.0);
  for (auto _ : state) benchmark::DoNotOptimize(lbniv::lbniv_move(agent, best, front, rear, p));
}
BENCHMARK(BM_LbnivMove)->Arg(2)->Arg(30);

void BM_TspIteration(benchmark::State& state) {
  problems::TspProblem p(testing::random_tsp(static_cast<std::size_t>(state.range(0)), 3));
  EngineConfig cfg;
  cfg.iterations = std::numeric_limits<std::size_t>::max();
  Engine engine(p, cfg);
  for (auto _ : state) engine.step();
}
BENCHMARK(BM_TspIteration)->Arg(16)->Arg(100);

void BM_QapIteration(benchmark::State& state) {
  problems::QapProblem p(testing::random_qap(static_cast<std::size_t>(state.range(0)), 4));
  EngineConfig cfg;
  cfg.iterations = std::numeric_limits<std::size_t>::max();
  Engine engine(p, cfg);
  for (auto _ : state) engine.step();
}
BENCHMARK(BM_QapIteration)->Arg(16)->Arg(32);

void BM_ContinuousRun(benchmark::State& state) {
  problems::BenchmarkProblem f(problems::benchmark_function(static_cast<int>(state.range(0))));
  ContinuousConfig cfg;
  cfg.iterations = 100;
  for (auto _ : state) benchmark::DoNotOptimize(optimize_continuous(f, cfg).best);
}
BENCHMARK(BM_ContinuousRun)->Arg(6)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_TspOracle(benchmark::State& state) {
  const auto inst = testing::random_tsp(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(oracles::brute_force_tsp(inst).optimum);
}
BENCHMARK(BM_TspOracle)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ParseTsplib(benchmark::State& state) {
  const auto text = ingest::serialize_tsplib([] {
    auto inst = testing::random_tsp(1000, 6);
    inst.metric = problems::TspMetric::Euc2d;
    return inst;
  }());
  for (auto _ : state) benchmark::DoNotOptimize(ingest::parse_tsplib(text).n);
}
BENCHMARK(BM_ParseTsplib)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
