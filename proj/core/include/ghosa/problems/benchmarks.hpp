#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ghosa/continuous_problem.hpp"

namespace ghosa::problems {

inline constexpr int kBenchmarkCount = 25;

// One of the 25 closed-form test equations f1..f25.
struct BenchmarkFunction {
  int id = 0;
  std::string name;
  std::size_t dim = 0;
  std::vector<Bounds> bounds;
  double optimum = 0.0;            // tabulated value
  std::vector<double> optimizer;   // a point attaining the tabulated optimum
  double optimum_tolerance = 1e-6; // precision of the tabulated value
  bool noisy = false;              // f12 carries a uniform [0,1) term
  bool variable_dim = false;       // sum-type functions accept any D >= 1
};

// Throws InvalidConfig for unknown ids or a dimension the function does not
// support. `dim` defaults to the tabulated dimension.
BenchmarkFunction benchmark_function(int id, std::optional<std::size_t> dim = {});

// Closed-form value. Throws DimensionMismatch and OutOfBounds. The f12 noise
// term is drawn from `noise`; pass nullptr to drop it.
double eval_benchmark(const BenchmarkFunction& fn, std::span<const double> x, Rng* noise);
double eval_benchmark(int id, std::span<const double> x, Rng* noise);

class BenchmarkProblem final : public ContinuousProblem {
 public:
  explicit BenchmarkProblem(BenchmarkFunction fn) : fn_(std::move(fn)) {}

  std::string name() const override { return fn_.name; }
  std::size_t dim() const override { return fn_.dim; }
  const std::vector<Bounds>& bounds() const override { return fn_.bounds; }
  double evaluate(std::span<const double> x, Rng& rng) const override {
    return eval_benchmark(fn_, x, &rng);
  }

  const BenchmarkFunction& function() const noexcept { return fn_; }

 private:
  BenchmarkFunction fn_;
};

}  // namespace ghosa::problems
