#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ghosa/discrete_problem.hpp"

namespace ghosa::problems {

// 0/1 knapsack with m capacity constraints.
struct KnapsackInstance {
  std::string name;
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<double> profit;    // n
  std::vector<double> weight;    // row-major m*n
  std::vector<double> capacity;  // m
  std::optional<double> best_known;

  double w(std::size_t row, std::size_t item) const { return weight[row * n + item]; }
};

using Selection = std::vector<std::uint8_t>;

// Threshold encoding: item i is taken iff intstring[i] > threshold. Requires a
// permutation of 1..n and 1 <= threshold <= n (ThresholdOutOfRange).
Selection knapsack_decode(const EventSequence& intstring, int threshold);

bool knapsack_feasible(const KnapsackInstance& inst, const Selection& bits);

// Total profit of a feasible selection, 0 for an infeasible one.
double knapsack_profit(const KnapsackInstance& inst, const Selection& bits);

enum class ThresholdPolicy {
  Random,  // fresh uniform threshold per agent per iteration
  Sweep,   // every threshold is tried and the most profitable kept
};

std::string_view to_string(ThresholdPolicy policy);
std::optional<ThresholdPolicy> threshold_policy_from_string(std::string_view name);

class KnapsackProblem final : public DiscreteProblem {
 public:
  explicit KnapsackProblem(KnapsackInstance inst, ThresholdPolicy policy = ThresholdPolicy::Random);

  std::string name() const override { return inst_.name; }
  SequenceKind kind() const override { return SequenceKind::Permutation; }
  int universe_size() const override { return static_cast<int>(inst_.n); }
  Sense sense() const override { return Sense::Maximize; }
  EventSequence random_sequence(Rng& rng) const override;
  void prepare(Agent& agent, Rng& rng) const override;
  // Negated profit. Under Sweep, also stores the winning threshold.
  double evaluate(Agent& agent) const override;

  const KnapsackInstance& instance() const noexcept { return inst_; }
  ThresholdPolicy policy() const noexcept { return policy_; }

 private:
  KnapsackInstance inst_;
  ThresholdPolicy policy_;
};

}  // namespace ghosa::problems
