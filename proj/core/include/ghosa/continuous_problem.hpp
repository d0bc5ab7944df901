#pragma once

#include <span>
#include <string>
#include <vector>

#include "ghosa/types.hpp"

namespace ghosa {

// Box-bounded real-vector objective, minimized.
class ContinuousProblem {
 public:
  virtual ~ContinuousProblem() = default;

  virtual std::string name() const = 0;
  virtual std::size_t dim() const = 0;
  virtual const std::vector<Bounds>& bounds() const = 0;
  // `rng` feeds stochastic objectives; deterministic ones ignore it.
  virtual double evaluate(std::span<const double> x, Rng& rng) const = 0;
};

}  // namespace ghosa
