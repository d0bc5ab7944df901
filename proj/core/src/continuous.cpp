#include "ghosa/continuous.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "ghosa/error.hpp"

namespace ghosa {

void ContinuousConfig::validate() const {
  ops.validate();
  lbniv.validate();
  if (population == 0) throw Error(ErrorCode::InvalidConfig, "population must be >= 1");
  if (iterations == 0) throw Error(ErrorCode::InvalidConfig, "budget must be >= 1 iteration");
  if (replace_percent < 0.0 || replace_percent >= 100.0) {
    throw Error(ErrorCode::InvalidConfig, "replace percent must lie in [0,100)");
  }
}

namespace {

class ContinuousRun {
 public:
  ContinuousRun(const ContinuousProblem& problem, ContinuousConfig config)
      : problem_(problem), config_(std::move(config)), rng_(config_.seed) {
    config_.lbniv.bounds = problem_.bounds();
    config_.validate();
    if (config_.lbniv.bounds.size() != problem_.dim()) {
      throw Error(ErrorCode::DimensionMismatch, "problem bounds do not match its dimension");
    }
    same_bounds_ = std::adjacent_find(config_.lbniv.bounds.begin(), config_.lbniv.bounds.end(),
                                      std::not_equal_to<>()) == config_.lbniv.bounds.end();
    agents_.reserve(config_.population);
    for (std::size_t i = 0; i < config_.population; ++i) agents_.push_back(fresh());
    best_ = agents_.front();
    for (const auto& a : agents_) absorb(a);
  }

  ContinuousResult run() {
    for (std::size_t t = 0; t < config_.iterations; ++t) step();
    return {best_.x, best_.J, trace_, evaluations_, degenerate_};
  }

 private:
  double evaluate(std::span<const double> x) {
    ++evaluations_;
    return problem_.evaluate(x, rng_);
  }

  std::vector<double> random_point() {
    std::vector<double> x(problem_.dim());
    for (std::size_t i = 0; i < x.size(); ++i) {
      const auto& b = config_.lbniv.bounds[i];
      x[i] = std::uniform_real_distribution<double>(b.lo, b.hi)(rng_);
    }
    return x;
  }

  lbniv::ContinuousAgent fresh() {
    auto x = random_point();
    const double J = evaluate(x);
    return lbniv::make_agent(std::move(x), J, config_.lbniv);
  }

  void absorb(const lbniv::ContinuousAgent& a) {
    if (a.J < best_.J) best_ = a;
  }

  BaitCase draw_case() {
    const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng_);
    if (u < config_.ops.p_miss) return BaitCase::MissCatch;
    if (u < config_.ops.p_miss + config_.ops.p_catch) return BaitCase::Catch;
    return BaitCase::FalseCatch;
  }

  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  // Steps 4-8 for one agent; returns the candidate position.
  std::vector<double> propose(std::size_t i, const std::vector<std::vector<double>>& snapshot) {
    const std::size_t dim = problem_.dim();
    const std::size_t n = snapshot.size();
    std::vector<double> cand = agents_[i].x;

    // The bait is a whole donor vector; one of its coordinates gets dropped in.
    std::vector<double> donor;
    switch (draw_case()) {
      case BaitCase::MissCatch: donor = random_point(); break;
      case BaitCase::Catch: donor = best_.x; break;
      case BaitCase::FalseCatch: donor = snapshot[index(0, n - 1)]; break;
    }

    IndexRange window{0, dim};
    if (dim > config_.ops.full_scan_limit) {
      const auto width = std::max<std::size_t>(
          1, static_cast<std::size_t>(std::ceil(config_.ops.local_window_frac * dim)));
      window = {index(0, dim - width), width};
    }
    std::vector<double> trial = cand;
    const std::size_t pos = window.length == 1 ? window.begin
                                               : change_of_position(window, [&](std::size_t p) {
                                                   trial[p] = donor[p];
                                                   const double c = evaluate(trial);
                                                   trial[p] = cand[p];
                                                   return c;
                                                 });

    if (same_bounds_ && dim >= 2 &&
        std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < config_.ops.attract_probability) {
      EventSequence order;
      order.events.resize(dim);
      std::iota(order.events.begin(), order.events.end(), 0);
      order = attracting_prey_swarms(order, pos, index(1, dim - 1), {0, dim});
      std::vector<double> turned(dim);
      for (std::size_t k = 0; k < dim; ++k) turned[k] = cand[static_cast<std::size_t>(order[k])];
      cand = std::move(turned);
    }
    cand[pos] = donor[pos];

    lbniv::ContinuousAgent moved = agents_[i];
    moved.x = cand;
    const auto& front = snapshot[(i + 1) % n];
    const auto& rear = snapshot[(i + n - 1) % n];
    moved = lbniv::lbniv_move(moved, best_.x, front, rear, config_.lbniv);
    agents_[i].eps_rear = moved.eps_rear;
    agents_[i].eps_front = moved.eps_front;
    return moved.x;
  }

  void step() {
    const std::size_t n = agents_.size();
    std::vector<std::vector<double>> snapshot(n);
    for (std::size_t i = 0; i < n; ++i) snapshot[i] = agents_[i].x;

    for (std::size_t i = 0; i < n; ++i) {
      auto cand = propose(i, snapshot);
      const double J = evaluate(cand);
      auto& a = agents_[i];
      degenerate_ += lbniv::lbniv_feedback(a, cand, J, snapshot[(i + 1) % n],
                                           snapshot[(i + n - 1) % n]);
      if (J < a.J || (J == a.J && config_.ops.accept_equal)) {
        a.J_prev = a.J;
        a.J = J;
        a.x = std::move(cand);
      }
      absorb(a);
    }

    const std::size_t count = replacement_count(n, config_.replace_percent);
    if (count > 0) {
      std::vector<std::size_t> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return agents_[a].J > agents_[b].J; });
      for (std::size_t k = 0; k < count; ++k) {
        agents_[order[k]] = fresh();
        absorb(agents_[order[k]]);
      }
    }
    trace_.total.push_back(best_.J);
  }

  const ContinuousProblem& problem_;
  ContinuousConfig config_;
  Rng rng_;
  bool same_bounds_ = false;
  std::vector<lbniv::ContinuousAgent> agents_;
  lbniv::ContinuousAgent best_;
  ConvergenceTrace trace_;
  std::size_t evaluations_ = 0;
  std::size_t degenerate_ = 0;
};

}  // namespace

ContinuousResult optimize_continuous(const ContinuousProblem& problem, ContinuousConfig config) {
  return ContinuousRun(problem, std::move(config)).run();
}

}  // namespace ghosa
