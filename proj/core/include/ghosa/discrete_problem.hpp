#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ghosa/operators.hpp"
#include "ghosa/types.hpp"

namespace ghosa {

// One candidate solution of a discrete problem.
struct Agent {
  EventSequence sequence;
  double fitness = 0.0;    // minimized
  double secondary = 0.0;  // linkage score or segment count
  // Problem-specific decoding parameter (the knapsack threshold); 0 if unused.
  int decode_param = 0;
};

// Adapter between the engine and a concrete combinatorial problem. The engine
// always minimizes `evaluate`; maximization problems negate their objective.
class DiscreteProblem {
 public:
  virtual ~DiscreteProblem() = default;

  virtual std::string name() const = 0;
  virtual SequenceKind kind() const = 0;
  // Events are 1..universe_size().
  virtual int universe_size() const = 0;
  virtual Sense sense() const { return Sense::Minimize; }

  virtual EventSequence random_sequence(Rng& rng) const = 0;

  // Called on every fresh or modified agent before its operators run; lets
  // encodings draw per-iteration decoding parameters.
  virtual void prepare(Agent& /*agent*/, Rng& /*rng*/) const {}

  // Internal (minimized) fitness. May refine agent.decode_param.
  virtual double evaluate(Agent& agent) const = 0;

  // Objective in the problem's own orientation (profit for knapsack).
  virtual double reported(double fitness) const {
    return sense() == Sense::Maximize ? -fitness : fitness;
  }

  // Local heuristic for Change of Position: the fitness obtained by completing
  // the bait at `position`. The default applies the case and evaluates.
  virtual double local_cost(const Agent& agent, std::size_t position, Event bait,
                            BaitCase kind) const;

  // Positions at which `kind` may be applied to `seq`.
  virtual IndexRange bait_positions(const EventSequence& seq, BaitCase kind) const;

  // Events eligible as bait.
  virtual std::vector<Event> bait_pool() const;

  // Adjacency used by the secondary fitness; nullopt makes it constant.
  virtual std::optional<LinkPredicate> linkage() const { return std::nullopt; }
  virtual Closure closure() const { return Closure::Open; }

  // Attracting Prey Swarms revolves the whole string when true, otherwise a
  // random sub-range around the bait position.
  virtual bool rotate_whole_string() const { return true; }

  // Objective components for traces (travel, waiting); empty if not split.
  virtual std::vector<double> components(const Agent& /*agent*/) const { return {}; }
};

}  // namespace ghosa
