#pragma once

// Location Based Neighbour Influenced Variation: the adaptive real-valued move
// used by the continuous engine.
//
//   x_t = x_{t-1} + |best - rear| * d_r * eps_r + |best - front| * d_f * eps_f + bias
//
// d is the relative fitness change of the last move, signed by which side of
// the neighbour the variable sits on; eps shrinks by k after an overshoot of
// the upper bound and grows by k after an undershoot of the lower bound.

#include <span>
#include <vector>

#include "ghosa/types.hpp"

namespace ghosa::lbniv {

struct LbnivParams {
  double k = 2.0;
  double bias = 0.001;
  double eps0 = 0.2;
  std::vector<Bounds> bounds;

  // Throws InvalidConfig unless k > 1, eps0 > 0 and every lo <= hi.
  void validate() const;
};

struct ContinuousAgent {
  std::vector<double> x;
  double J = 0.0;
  double J_prev = 0.0;
  std::vector<double> d_rear;
  std::vector<double> d_front;
  std::vector<double> eps_rear;
  std::vector<double> eps_front;

  std::size_t dim() const noexcept { return x.size(); }
};

// Agent at x with zero d and eps = eps0 everywhere.
ContinuousAgent make_agent(std::vector<double> x, double fitness, const LbnivParams& params);

// Unclamped candidate position. Throws DimensionMismatch.
std::vector<double> lbniv_update(const ContinuousAgent& agent, std::span<const double> best,
                                 std::span<const double> front, std::span<const double> rear,
                                 const LbnivParams& params);

struct DUpdate {
  double d = 0.0;
  bool degenerate = false;  // |J_prev| below the guard; d forced to 0
};

DUpdate update_d(double J_t, double J_prev, double x_t, double x_prev);

double update_epsilon(double eps, double x_t, Bounds bounds, double k);

std::vector<double> clamp_to_bounds(std::span<const double> x, std::span<const Bounds> bounds);

// Position half of one transition: computes the candidate, adapts eps from
// the unclamped values, then clamps. Returns the new agent.
ContinuousAgent lbniv_move(const ContinuousAgent& agent, std::span<const double> best,
                           std::span<const double> front, std::span<const double> rear,
                           const LbnivParams& params);

// Fitness half: with the candidate's fitness known, refreshes d_rear/d_front.
// The branch test compares the candidate to the respective neighbour.
// Returns the number of degenerate (J_prev ~ 0) updates.
std::size_t lbniv_feedback(ContinuousAgent& agent, std::span<const double> candidate,
                           double J_candidate, std::span<const double> front,
                           std::span<const double> rear);

}  // namespace ghosa::lbniv
