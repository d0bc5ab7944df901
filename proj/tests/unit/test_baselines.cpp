#include <gtest/gtest.h>

#include "ghosa/baselines.hpp"
#include "ghosa/error.hpp"
#include "ghosa/problems/benchmarks.hpp"

namespace ghosa::baselines {
namespace {

class Constant final : public ContinuousProblem {
 public:
  std::string name() const override { return "constant"; }
  std::size_t dim() const override { return 2; }
  const std::vector<Bounds>& bounds() const override { return bounds_; }
  double evaluate(std::span<const double>, Rng&) const override { return 4.0; }

 private:
  std::vector<Bounds> bounds_{{-1.0, 1.0}, {-1.0, 1.0}};
};

// Records every point it is asked to evaluate.
class Recorder final : public ContinuousProblem {
 public:
  explicit Recorder(problems::BenchmarkFunction fn) : fn_(std::move(fn)) {}
  std::string name() const override { return fn_.name; }
  std::size_t dim() const override { return fn_.dim; }
  const std::vector<Bounds>& bounds() const override { return fn_.bounds; }
  double evaluate(std::span<const double> x, Rng&) const override {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] < fn_.bounds[i].lo || x[i] > fn_.bounds[i].hi) ++violations;
    }
    ++calls;
    return problems::eval_benchmark(fn_, x, nullptr);
  }
  mutable std::size_t violations = 0;
  mutable std::size_t calls = 0;

 private:
  problems::BenchmarkFunction fn_;
};

BaselineConfig small(Algorithm a, std::size_t iterations = 300) {
  BaselineConfig c;
  c.algorithm = a;
  c.iterations = iterations;
  return c;
}

TEST(Baselines, ConstantObjectiveGivesAFlatTrace) {
  for (auto a : {Algorithm::GA, Algorithm::PSO}) {
    const auto r = run_baseline(Constant{}, small(a, 20), 1);
    ASSERT_EQ(r.trace.total.size(), 20u);
    for (double v : r.trace.total) EXPECT_EQ(v, 4.0);
  }
}

TEST(Baselines, FrozenParticleNeverMoves) {
  BaselineConfig c = small(Algorithm::PSO, 50);
  c.population = 1;
  c.inertia = 0.0;
  c.cognitive = 0.0;
  c.social = 0.0;
  problems::BenchmarkProblem f(problems::benchmark_function(1, 3));
  const auto r = run_pso(f, c, 5);
  const double first = r.trace.total.front();
  for (double v : r.trace.total) EXPECT_EQ(v, first);
}

TEST(Baselines, GaWithoutVariationOnlyResamples) {
  BaselineConfig c = small(Algorithm::GA, 50);
  c.crossover_rate = 0.0;
  c.mutation_rate = 0.0;
  problems::BenchmarkProblem f(problems::benchmark_function(1, 3));
  const auto r = run_ga(f, c, 5);
  for (double v : r.trace.total) EXPECT_EQ(v, r.trace.total.front());
}

TEST(Baselines, RespectBoundsAndTracesAreMonotone) {
  for (int id : {1, 6, 8, 13, 18}) {
    for (auto a : {Algorithm::GA, Algorithm::PSO}) {
      Recorder f(problems::benchmark_function(id));
      const auto r = run_baseline(f, small(a), 3);
      EXPECT_EQ(f.violations, 0u) << id;
      EXPECT_GT(f.calls, 0u);
      for (std::size_t i = 1; i < r.trace.total.size(); ++i) {
        EXPECT_LE(r.trace.total[i], r.trace.total[i - 1]);
      }
      EXPECT_EQ(r.best, r.trace.total.back());
    }
  }
}

TEST(Baselines, SeededDeterminism) {
  problems::BenchmarkProblem f(problems::benchmark_function(6));
  for (auto a : {Algorithm::GA, Algorithm::PSO}) {
    const auto x = run_baseline(f, small(a), 8);
    const auto y = run_baseline(f, small(a), 8);
    EXPECT_EQ(x.best_x, y.best_x);
    EXPECT_EQ(x.trace.total, y.trace.total);
  }
}

TEST(Baselines, SixHumpCamel) {
  problems::BenchmarkProblem f(problems::benchmark_function(6));
  for (auto a : {Algorithm::GA, Algorithm::PSO}) {
    EXPECT_NEAR(run_baseline(f, small(a, 1000), 1).best, -1.03163, 1e-2) << to_string(a);
  }
}

TEST(Baselines, Validation) {
  BaselineConfig c;
  EXPECT_NO_THROW(c.validate());
  c.crossover_rate = 1.5;
  EXPECT_THROW(c.validate(), Error);
  c = {};
  c.iterations = 0;
  EXPECT_THROW(c.validate(), Error);
  c = {};
  c.algorithm = Algorithm::GA;
  c.tournament_size = 60;
  EXPECT_THROW(c.validate(), Error);
  c = {};
  c.mutation_rate = -0.1;
  EXPECT_THROW(c.validate(), Error);
  EXPECT_EQ(algorithm_from_string("ga"), Algorithm::GA);
  EXPECT_EQ(algorithm_from_string("pso"), Algorithm::PSO);
  EXPECT_FALSE(algorithm_from_string("de"));
}

}  // namespace
}  // namespace ghosa::baselines
