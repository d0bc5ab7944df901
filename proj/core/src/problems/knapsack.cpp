#include "ghosa/problems/knapsack.hpp"

#include "ghosa/error.hpp"
#include "ghosa/problems/tsp.hpp"

namespace ghosa::problems {

Selection knapsack_decode(const EventSequence& intstring, int threshold) {
  const auto n = static_cast<int>(intstring.length());
  if (threshold < 1 || threshold > n) {
    throw Error(ErrorCode::ThresholdOutOfRange,
                "threshold " + std::to_string(threshold) + " outside 1.." + std::to_string(n));
  }
  if (!is_permutation_of_1_to_n(intstring.events)) {
    throw Error(ErrorCode::InvalidPermutation, "knapsack string is not a permutation");
  }
  Selection bits(intstring.length());
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = intstring[i] > threshold ? 1 : 0;
  return bits;
}

bool knapsack_feasible(const KnapsackInstance& inst, const Selection& bits) {
  if (bits.size() != inst.n) {
    throw Error(ErrorCode::DimensionMismatch, "selection length differs from item count");
  }
  for (std::size_t r = 0; r < inst.m; ++r) {
    double load = 0.0;
    for (std::size_t i = 0; i < inst.n; ++i) {
      if (bits[i]) load += inst.w(r, i);
    }
    if (load > inst.capacity[r]) return false;
  }
  return true;
}

double knapsack_profit(const KnapsackInstance& inst, const Selection& bits) {
  if (!knapsack_feasible(inst, bits)) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < inst.n; ++i) {
    if (bits[i]) total += inst.profit[i];
  }
  return total;
}

std::string_view to_string(ThresholdPolicy policy) {
  return policy == ThresholdPolicy::Random ? "random" : "sweep";
}

std::optional<ThresholdPolicy> threshold_policy_from_string(std::string_view name) {
  if (name == "random") return ThresholdPolicy::Random;
  if (name == "sweep") return ThresholdPolicy::Sweep;
  return std::nullopt;
}

KnapsackProblem::KnapsackProblem(KnapsackInstance inst, ThresholdPolicy policy)
    : inst_(std::move(inst)), policy_(policy) {
  if (inst_.n == 0) throw Error(ErrorCode::InvalidConfig, "knapsack without items");
}

EventSequence KnapsackProblem::random_sequence(Rng& rng) const {
  return random_permutation(inst_.n, rng);
}

void KnapsackProblem::prepare(Agent& agent, Rng& rng) const {
  if (policy_ == ThresholdPolicy::Random || agent.decode_param == 0) {
    agent.decode_param =
        std::uniform_int_distribution<int>(1, static_cast<int>(inst_.n))(rng);
  }
}

double KnapsackProblem::evaluate(Agent& agent) const {
  if (policy_ == ThresholdPolicy::Random) {
    if (agent.decode_param == 0) agent.decode_param = static_cast<int>(inst_.n);
    return -knapsack_profit(inst_, knapsack_decode(agent.sequence, agent.decode_param));
  }
  if (!is_permutation_of_1_to_n(agent.sequence.events) || agent.sequence.length() != inst_.n) {
    throw Error(ErrorCode::InvalidPermutation, "knapsack string is not a permutation");
  }
  // Lowering the threshold adds the item holding value t+1. Weights are
  // non-negative, so the first infeasible addition ends the sweep.
  std::vector<std::size_t> item_of(inst_.n + 1);
  for (std::size_t i = 0; i < inst_.n; ++i) item_of[static_cast<std::size_t>(agent.sequence[i])] = i;
  std::vector<double> load(inst_.m, 0.0);
  double profit = 0.0;
  int best_threshold = static_cast<int>(inst_.n);
  for (int t = static_cast<int>(inst_.n) - 1; t >= 1; --t) {
    const std::size_t item = item_of[static_cast<std::size_t>(t + 1)];
    bool fits = true;
    for (std::size_t r = 0; r < inst_.m; ++r) {
      if (load[r] + inst_.w(r, item) > inst_.capacity[r]) {
        fits = false;
        break;
      }
    }
    if (!fits) break;
    for (std::size_t r = 0; r < inst_.m; ++r) load[r] += inst_.w(r, item);
    profit += inst_.profit[item];
    best_threshold = t;
  }
  agent.decode_param = best_threshold;
  return -profit;
}

}  // namespace ghosa::problems
