#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ghosa/discrete_problem.hpp"
#include "ghosa/operators.hpp"
#include "ghosa/types.hpp"

namespace ghosa {

struct OperatorConfig {
  double p_miss = 1.0 / 3.0;
  double p_catch = 1.0 / 3.0;
  double p_false = 1.0 / 3.0;
  // Change of Position scans this fraction of strings longer than
  // full_scan_limit; shorter strings are scanned completely.
  double local_window_frac = 0.25;
  std::size_t full_scan_limit = 20;
  // Per agent-iteration probability of Attracting Prey Swarms.
  double attract_probability = 0.2;
  SecondaryMethod secondary_method = SecondaryMethod::NodeLinkage;
  // Accept a candidate whose fitness ties the incumbent (plateau moves).
  bool accept_equal = true;

  // Throws InvalidConfig.
  void validate() const;
};

struct EngineConfig {
  OperatorConfig ops;
  std::size_t population = 50;
  double replace_percent = 10.0;
  std::size_t iterations = 25000;
  std::uint64_t seed = 1;

  void validate() const;
};

struct PopulationState {
  std::vector<Agent> agents;
  Agent global_best;
  std::size_t iteration = 0;
  std::uint64_t rng_seed = 0;
};

struct OptimizeResult {
  Agent best;
  ConvergenceTrace trace;
};

// Number of agents replace_worst touches: floor(percent * N / 100).
std::size_t replacement_count(std::size_t population, double percent);

// Replaces the worst agents by freshly randomized, evaluated ones. Leaves
// global_best alone. Requires 0 <= percent < 100.
void replace_worst(PopulationState& pop, double percent, const DiscreteProblem& problem,
                   SecondaryMethod method, Rng& rng);

// Fills agent.secondary from the problem's linkage (0 when it has none).
void score_secondary(Agent& agent, const DiscreteProblem& problem, SecondaryMethod method);

// Iteration-level driver. Exposed so tests can observe state between steps;
// most callers want optimize().
class Engine {
 public:
  Engine(const DiscreteProblem& problem, EngineConfig config);

  const PopulationState& state() const noexcept { return state_; }
  const ConvergenceTrace& trace() const noexcept { return trace_; }

  // One pass of the per-agent pipeline followed by worst replacement.
  void step();
  void run();

 private:
  Agent evolve(const Agent& agent);
  Event draw_bait();
  BaitCase draw_case();
  IndexRange pick_window(const EventSequence& seq, IndexRange allowed);
  bool better(const Agent& candidate, const Agent& incumbent) const;
  void absorb_best(const Agent& agent);
  void record_trace();

  const DiscreteProblem& problem_;
  EngineConfig config_;
  Rng rng_;
  PopulationState state_;
  ConvergenceTrace trace_;
  std::vector<Event> pool_;
  std::vector<std::uint32_t> bait_counts_;
};

// Runs the full pipeline for config.iterations iterations. Deterministic for a
// fixed seed.
OptimizeResult optimize(const DiscreteProblem& problem, const EngineConfig& config);

}  // namespace ghosa
