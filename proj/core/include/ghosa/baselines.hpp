#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ghosa/continuous_problem.hpp"
#include "ghosa/types.hpp"

namespace ghosa::baselines {

enum class Algorithm { GA, PSO };

std::string_view to_string(Algorithm algo);
std::optional<Algorithm> algorithm_from_string(std::string_view name);

struct BaselineConfig {
  Algorithm algorithm = Algorithm::PSO;
  std::size_t population = 50;
  std::size_t iterations = 25000;

  // GA: binary tournament, BLX-alpha crossover, per-gene Gaussian mutation.
  std::size_t tournament_size = 2;
  double crossover_rate = 0.9;
  // Per-gene probability; unset means 1/D.
  std::optional<double> mutation_rate;
  // Gaussian sigma as a fraction of each variable's range.
  double mutation_scale = 0.1;
  double blend_alpha = 0.5;
  // Best individuals copied unchanged into the next generation.
  std::size_t elitism = 1;

  // PSO: global-best topology.
  double inertia = 0.72;
  double cognitive = 1.49;
  double social = 1.49;
  // Velocity clamp as a fraction of each variable's range.
  double velocity_clamp = 0.2;

  // Throws InvalidConfig: rates and fractions outside [0,1], zero budget or
  // population, tournament larger than the population.
  void validate() const;
};

struct BaselineResult {
  std::vector<double> best_x;
  double best = 0.0;
  ConvergenceTrace trace;  // per-iteration global best in `total`
};

BaselineResult run_pso(const ContinuousProblem& problem, const BaselineConfig& cfg,
                       std::uint64_t seed);
BaselineResult run_ga(const ContinuousProblem& problem, const BaselineConfig& cfg,
                      std::uint64_t seed);
// Dispatches on cfg.algorithm.
BaselineResult run_baseline(const ContinuousProblem& problem, const BaselineConfig& cfg,
                            std::uint64_t seed);

}  // namespace ghosa::baselines
