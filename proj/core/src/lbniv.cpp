#include "ghosa/lbniv.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ghosa/error.hpp"

namespace ghosa::lbniv {

namespace {

void require_dim(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has dimension " +
                                                  std::to_string(got) + ", expected " +
                                                  std::to_string(expected));
  }
}

}  // namespace

void LbnivParams::validate() const {
  if (!(k > 1.0)) throw Error(ErrorCode::InvalidConfig, "LBNIV k must exceed 1");
  if (!(eps0 > 0.0)) throw Error(ErrorCode::InvalidConfig, "LBNIV eps0 must be positive");
  for (const auto& b : bounds) {
    if (!(b.lo <= b.hi)) throw Error(ErrorCode::InvalidConfig, "bounds with lo > hi");
  }
}

ContinuousAgent make_agent(std::vector<double> x, double fitness, const LbnivParams& params) {
  ContinuousAgent a;
  const std::size_t n = x.size();
  a.x = std::move(x);
  a.J = fitness;
  a.J_prev = fitness;
  a.d_rear.assign(n, 0.0);
  a.d_front.assign(n, 0.0);
  a.eps_rear.assign(n, params.eps0);
  a.eps_front.assign(n, params.eps0);
  return a;
}

std::vector<double> lbniv_update(const ContinuousAgent& agent, std::span<const double> best,
                                 std::span<const double> front, std::span<const double> rear,
                                 const LbnivParams& params) {
  const std::size_t n = agent.dim();
  require_dim(n, best.size(), "best");
  require_dim(n, front.size(), "front neighbour");
  require_dim(n, rear.size(), "rear neighbour");
  require_dim(n, agent.d_rear.size(), "d_rear");
  require_dim(n, agent.d_front.size(), "d_front");
  require_dim(n, agent.eps_rear.size(), "eps_rear");
  require_dim(n, agent.eps_front.size(), "eps_front");
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = agent.x[i] + std::abs(best[i] - rear[i]) * agent.d_rear[i] * agent.eps_rear[i] +
             std::abs(best[i] - front[i]) * agent.d_front[i] * agent.eps_front[i] + params.bias;
  }
  return out;
}

DUpdate update_d(double J_t, double J_prev, double x_t, double x_prev) {
  const double scale = std::abs(J_prev);
  if (scale < std::numeric_limits<double>::epsilon()) return {0.0, true};
  const double d = x_t >= x_prev ? (J_prev - J_t) / scale : (J_t - J_prev) / scale;
  return {d, false};
}

double update_epsilon(double eps, double x_t, Bounds bounds, double k) {
  if (x_t > bounds.hi) return eps / k;
  if (x_t < bounds.lo) return eps * k;
  return eps;
}

std::vector<double> clamp_to_bounds(std::span<const double> x, std::span<const Bounds> bounds) {
  require_dim(x.size(), bounds.size(), "bounds");
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::clamp(x[i], bounds[i].lo, bounds[i].hi);
  return out;
}

ContinuousAgent lbniv_move(const ContinuousAgent& agent, std::span<const double> best,
                           std::span<const double> front, std::span<const double> rear,
                           const LbnivParams& params) {
  require_dim(agent.dim(), params.bounds.size(), "bounds");
  ContinuousAgent next = agent;
  const auto raw = lbniv_update(agent, best, front, rear, params);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    next.eps_rear[i] = update_epsilon(agent.eps_rear[i], raw[i], params.bounds[i], params.k);
    next.eps_front[i] = update_epsilon(agent.eps_front[i], raw[i], params.bounds[i], params.k);
  }
  next.x = clamp_to_bounds(raw, params.bounds);
  return next;
}

std::size_t lbniv_feedback(ContinuousAgent& agent, std::span<const double> candidate,
                           double J_candidate, std::span<const double> front,
                           std::span<const double> rear) {
  const std::size_t n = agent.dim();
  require_dim(n, candidate.size(), "candidate");
  require_dim(n, front.size(), "front neighbour");
  require_dim(n, rear.size(), "rear neighbour");
  std::size_t degenerate = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = update_d(J_candidate, agent.J, candidate[i], rear[i]);
    const auto f = update_d(J_candidate, agent.J, candidate[i], front[i]);
    agent.d_rear[i] = r.d;
    agent.d_front[i] = f.d;
    degenerate += (r.degenerate ? 1 : 0) + (f.degenerate ? 1 : 0);
  }
  return degenerate;
}

}  // namespace ghosa::lbniv
