#pragma once

#include <cstdint>
#include <vector>

#include "ghosa/continuous_problem.hpp"
#include "ghosa/engine.hpp"
#include "ghosa/lbniv.hpp"

namespace ghosa {

struct ContinuousConfig {
  OperatorConfig ops;
  // bounds are taken from the problem; any value set here is overwritten.
  lbniv::LbnivParams lbniv;
  std::size_t population = 50;
  double replace_percent = 10.0;
  std::size_t iterations = 25000;
  std::uint64_t seed = 1;

  void validate() const;
};

struct ContinuousResult {
  std::vector<double> best_x;
  double best = 0.0;
  ConvergenceTrace trace;
  std::size_t evaluations = 0;
  std::size_t degenerate_d_updates = 0;
};

// GHOSA on a real vector: per agent, a baiting move on one variable picked by
// Change of Position (optionally after revolving the vector), then an LBNIV
// step on every variable; accept-if-better; worst X% re-randomized.
ContinuousResult optimize_continuous(const ContinuousProblem& problem, ContinuousConfig config);

}  // namespace ghosa
