#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ghosa/discrete_problem.hpp"

namespace ghosa::problems {

struct QapInstance {
  std::string name;
  std::size_t n = 0;
  std::vector<std::int64_t> flow;  // row-major n*n
  std::vector<std::int64_t> dist;  // row-major n*n
  std::optional<std::int64_t> best_known;

  std::int64_t f(std::size_t i, std::size_t j) const { return flow[i * n + j]; }
  std::int64_t d(std::size_t i, std::size_t j) const { return dist[i * n + j]; }
};

// sum_ij flow[i][j] * dist[perm(i)][perm(j)], perm 1-based. Throws
// InvalidPermutation.
std::int64_t qap_cost(const QapInstance& inst, const EventSequence& perm);

// Cost change from exchanging the locations of facilities r and s (0-based).
std::int64_t qap_swap_delta(const QapInstance& inst, const EventSequence& perm, std::size_t r,
                            std::size_t s);

class QapProblem final : public DiscreteProblem {
 public:
  explicit QapProblem(QapInstance inst);

  std::string name() const override { return inst_.name; }
  SequenceKind kind() const override { return SequenceKind::Permutation; }
  int universe_size() const override { return static_cast<int>(inst_.n); }
  EventSequence random_sequence(Rng& rng) const override;
  double evaluate(Agent& agent) const override;
  // Catch is a swap and costs O(n) to score; other cases fall back to a full
  // evaluation.
  double local_cost(const Agent& agent, std::size_t position, Event bait,
                    BaitCase kind) const override;

  const QapInstance& instance() const noexcept { return inst_; }

 private:
  QapInstance inst_;
};

}  // namespace ghosa::problems
