#include "ghosa/problems/qap.hpp"

#include <algorithm>

#include "ghosa/error.hpp"
#include "ghosa/problems/tsp.hpp"

namespace ghosa::problems {

std::int64_t qap_cost(const QapInstance& inst, const EventSequence& perm) {
  if (perm.length() != inst.n || !is_permutation_of_1_to_n(perm.events)) {
    throw Error(ErrorCode::InvalidPermutation,
                "assignment is not a permutation of 1.." + std::to_string(inst.n));
  }
  std::int64_t total = 0;
  for (std::size_t i = 0; i < inst.n; ++i) {
    const auto pi = static_cast<std::size_t>(perm[i] - 1);
    for (std::size_t j = 0; j < inst.n; ++j) {
      total += inst.f(i, j) * inst.d(pi, static_cast<std::size_t>(perm[j] - 1));
    }
  }
  return total;
}

std::int64_t qap_swap_delta(const QapInstance& inst, const EventSequence& perm, std::size_t r,
                            std::size_t s) {
  if (r == s) return 0;
  auto p = [&](std::size_t i) { return static_cast<std::size_t>(perm[i] - 1); };
  // q is p with entries r and s exchanged.
  auto q = [&](std::size_t i) { return i == r ? p(s) : i == s ? p(r) : p(i); };
  std::int64_t delta = 0;
  for (std::size_t k = 0; k < inst.n; ++k) {
    if (k == r || k == s) continue;
    for (std::size_t x : {r, s}) {
      delta += inst.f(k, x) * (inst.d(p(k), q(x)) - inst.d(p(k), p(x)));
      delta += inst.f(x, k) * (inst.d(q(x), p(k)) - inst.d(p(x), p(k)));
    }
  }
  for (std::size_t x : {r, s}) {
    for (std::size_t y : {r, s}) {
      delta += inst.f(x, y) * (inst.d(q(x), q(y)) - inst.d(p(x), p(y)));
    }
  }
  return delta;
}

QapProblem::QapProblem(QapInstance inst) : inst_(std::move(inst)) {}

EventSequence QapProblem::random_sequence(Rng& rng) const { return random_permutation(inst_.n, rng); }

double QapProblem::evaluate(Agent& agent) const {
  return static_cast<double>(qap_cost(inst_, agent.sequence));
}

double QapProblem::local_cost(const Agent& agent, std::size_t position, Event bait,
                              BaitCase kind) const {
  if (kind != BaitCase::Catch) return DiscreteProblem::local_cost(agent, position, bait, kind);
  const auto& ev = agent.sequence.events;
  const auto other = static_cast<std::size_t>(std::find(ev.begin(), ev.end(), bait) - ev.begin());
  if (other >= ev.size() || position >= ev.size()) {
    return DiscreteProblem::local_cost(agent, position, bait, kind);
  }
  return agent.fitness + static_cast<double>(qap_swap_delta(inst_, agent.sequence, position, other));
}

}  // namespace ghosa::problems
