#include "ghosa/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ghosa/error.hpp"

namespace ghosa {

double DiscreteProblem::local_cost(const Agent& agent, std::size_t position, Event bait,
                                   BaitCase kind) const {
  Agent trial = agent;
  apply_bait(trial.sequence, bait, position, kind, this->kind(), universe_size());
  return evaluate(trial);
}

IndexRange DiscreteProblem::bait_positions(const EventSequence& seq, BaitCase kind) const {
  const std::size_t n = seq.length();
  if (this->kind() == SequenceKind::Permutation) return {0, n};
  // Paths keep their endpoints: insert anywhere after the source, overwrite or
  // remove interior nodes only.
  if (kind == BaitCase::MissCatch) return {1, n >= 1 ? n - 1 : 0};
  return {1, n >= 3 ? n - 2 : 0};
}

std::vector<Event> DiscreteProblem::bait_pool() const {
  std::vector<Event> pool(static_cast<std::size_t>(universe_size()));
  std::iota(pool.begin(), pool.end(), 1);
  return pool;
}

void OperatorConfig::validate() const {
  if (p_miss < 0 || p_catch < 0 || p_false < 0 ||
      std::abs(p_miss + p_catch + p_false - 1.0) > 1e-9) {
    throw Error(ErrorCode::InvalidConfig, "baiting case probabilities must sum to 1");
  }
  if (!(local_window_frac > 0.0 && local_window_frac <= 1.0)) {
    throw Error(ErrorCode::InvalidConfig, "local_window_frac must lie in (0,1]");
  }
  if (attract_probability < 0.0 || attract_probability > 1.0) {
    throw Error(ErrorCode::InvalidConfig, "attract_probability must lie in [0,1]");
  }
}

void EngineConfig::validate() const {
  ops.validate();
  if (population == 0) throw Error(ErrorCode::InvalidConfig, "population must be >= 1");
  if (iterations == 0) throw Error(ErrorCode::InvalidConfig, "budget must be >= 1 iteration");
  if (replace_percent < 0.0 || replace_percent >= 100.0) {
    throw Error(ErrorCode::InvalidConfig, "replace percent must lie in [0,100)");
  }
}

std::size_t replacement_count(std::size_t population, double percent) {
  return static_cast<std::size_t>(std::floor(percent * static_cast<double>(population) / 100.0));
}

void score_secondary(Agent& agent, const DiscreteProblem& problem, SecondaryMethod method) {
  const auto linked = problem.linkage();
  if (!linked) {
    agent.secondary = 0.0;
    return;
  }
  agent.secondary =
      method == SecondaryMethod::NodeLinkage
          ? secondary_fitness_linkage(agent.sequence, *linked, problem.closure())
          : static_cast<double>(
                secondary_fitness_segments(agent.sequence, *linked, problem.closure()));
}

namespace {

Agent fresh_agent(const DiscreteProblem& problem, SecondaryMethod method, Rng& rng) {
  Agent a;
  a.sequence = problem.random_sequence(rng);
  problem.prepare(a, rng);
  a.fitness = problem.evaluate(a);
  score_secondary(a, problem, method);
  return a;
}

std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

void replace_worst(PopulationState& pop, double percent, const DiscreteProblem& problem,
                   SecondaryMethod method, Rng& rng) {
  if (percent < 0.0 || percent >= 100.0) {
    throw Error(ErrorCode::InvalidConfig, "replace percent must lie in [0,100)");
  }
  const std::size_t count = replacement_count(pop.agents.size(), percent);
  if (count == 0) return;
  std::vector<std::size_t> order(pop.agents.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pop.agents[a].fitness > pop.agents[b].fitness;
  });
  for (std::size_t k = 0; k < count; ++k) {
    pop.agents[order[k]] = fresh_agent(problem, method, rng);
  }
}

Engine::Engine(const DiscreteProblem& problem, EngineConfig config)
    : problem_(problem), config_(config), rng_(config.seed) {
  config_.validate();
  pool_ = problem_.bait_pool();
  bait_counts_.assign(pool_.size(), 0);

  state_.rng_seed = config_.seed;
  state_.agents.reserve(config_.population);
  for (std::size_t i = 0; i < config_.population; ++i) {
    state_.agents.push_back(fresh_agent(problem_, config_.ops.secondary_method, rng_));
  }
  state_.global_best = state_.agents.front();
  for (const auto& a : state_.agents) absorb_best(a);
}

Event Engine::draw_bait() {
  // Two uniform draws; the less often used event wins.
  const std::size_t a = uniform_index(rng_, 0, pool_.size() - 1);
  const std::size_t b = uniform_index(rng_, 0, pool_.size() - 1);
  const std::size_t pick = bait_counts_[b] < bait_counts_[a] ? b : a;
  ++bait_counts_[pick];
  return pool_[pick];
}

BaitCase Engine::draw_case() {
  const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng_);
  if (u < config_.ops.p_miss) return BaitCase::MissCatch;
  if (u < config_.ops.p_miss + config_.ops.p_catch) return BaitCase::Catch;
  return BaitCase::FalseCatch;
}

IndexRange Engine::pick_window(const EventSequence& seq, IndexRange allowed) {
  if (allowed.length <= config_.ops.full_scan_limit) return allowed;
  const auto width = std::max<std::size_t>(
      1, static_cast<std::size_t>(
             std::ceil(config_.ops.local_window_frac * static_cast<double>(allowed.length))));
  if (width >= allowed.length) return allowed;
  const std::size_t last_start = allowed.end() - width;

  // Incomplete paths: search around a gap, where secondary fitness is lowest.
  if (seq.incomplete) {
    if (auto linked = problem_.linkage()) {
      std::vector<std::size_t> gaps;
      for (std::size_t i = 0; i + 1 < seq.length(); ++i) {
        if (!(*linked)(seq[i], seq[i + 1])) gaps.push_back(i + 1);
      }
      if (!gaps.empty()) {
        const std::size_t g = gaps[uniform_index(rng_, 0, gaps.size() - 1)];
        const std::size_t start = g > width / 2 ? g - width / 2 : 0;
        return {std::clamp(start, allowed.begin, last_start), width};
      }
    }
  }
  return {uniform_index(rng_, allowed.begin, last_start), width};
}

Agent Engine::evolve(const Agent& agent) {
  Agent cand = agent;
  problem_.prepare(cand, rng_);

  BaitCase kind = draw_case();
  IndexRange allowed = problem_.bait_positions(cand.sequence, kind);
  if (allowed.length == 0 && kind != BaitCase::MissCatch) {
    kind = BaitCase::MissCatch;
    allowed = problem_.bait_positions(cand.sequence, kind);
  }
  if (allowed.length == 0 || pool_.empty()) return agent;

  const Event bait = draw_bait();
  const IndexRange window = pick_window(cand.sequence, allowed);
  const std::size_t position = change_of_position(
      window, [&](std::size_t p) { return problem_.local_cost(cand, p, bait, kind); });

  if (std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < config_.ops.attract_probability) {
    const std::size_t n = cand.sequence.length();
    const bool path = problem_.kind() == SequenceKind::Path;
    // Paths only revolve interior nodes.
    const IndexRange span = path ? IndexRange{1, n >= 3 ? n - 2 : 0} : IndexRange{0, n};
    IndexRange segment;
    if (!span.contains(position)) {
      segment = {position, 0};
    } else if (problem_.rotate_whole_string() && !path) {
      segment = span;
    } else {
      // A random sub-range covering the bait position.
      const std::size_t lo = uniform_index(rng_, span.begin, position);
      const std::size_t hi = uniform_index(rng_, position, span.end() - 1);
      segment = {lo, hi - lo + 1};
    }
    if (segment.length >= 2) {
      const std::size_t shift = uniform_index(rng_, 1, segment.length - 1);
      cand.sequence = attracting_prey_swarms(cand.sequence, position, shift, segment);
    }
  }

  apply_bait(cand.sequence, bait, position, kind, problem_.kind(), problem_.universe_size());
  cand.fitness = problem_.evaluate(cand);
  score_secondary(cand, problem_, config_.ops.secondary_method);
  return cand;
}

bool Engine::better(const Agent& candidate, const Agent& incumbent) const {
  if (candidate.fitness != incumbent.fitness) return candidate.fitness < incumbent.fitness;
  if (candidate.secondary != incumbent.secondary) {
    return config_.ops.secondary_method == SecondaryMethod::NodeLinkage
               ? candidate.secondary > incumbent.secondary
               : candidate.secondary < incumbent.secondary;
  }
  return config_.ops.accept_equal;
}

void Engine::absorb_best(const Agent& agent) {
  if (agent.fitness < state_.global_best.fitness) state_.global_best = agent;
}

void Engine::record_trace() {
  trace_.total.push_back(state_.global_best.fitness);
  const auto parts = problem_.components(state_.global_best);
  if (parts.size() >= 2) {
    trace_.travel.push_back(parts[0]);
    trace_.waiting.push_back(parts[1]);
  }
}

void Engine::step() {
  for (auto& agent : state_.agents) {
    Agent cand = evolve(agent);
    if (better(cand, agent)) agent = std::move(cand);
    absorb_best(agent);
  }
  replace_worst(state_, config_.replace_percent, problem_, config_.ops.secondary_method, rng_);
  for (const auto& a : state_.agents) absorb_best(a);
  ++state_.iteration;
  record_trace();
}

void Engine::run() {
  while (state_.iteration < config_.iterations) step();
}

OptimizeResult optimize(const DiscreteProblem& problem, const EngineConfig& config) {
  Engine engine(problem, config);
  engine.run();
  return {engine.state().global_best, engine.trace()};
}

}  // namespace ghosa
