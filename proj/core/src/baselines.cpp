#include "ghosa/baselines.hpp"

#include <algorithm>
#include <limits>

#include "ghosa/error.hpp"

namespace ghosa::baselines {

std::string_view to_string(Algorithm algo) { return algo == Algorithm::GA ? "ga" : "pso"; }

std::optional<Algorithm> algorithm_from_string(std::string_view name) {
  if (name == "ga" || name == "GA") return Algorithm::GA;
  if (name == "pso" || name == "PSO") return Algorithm::PSO;
  return std::nullopt;
}

void BaselineConfig::validate() const {
  auto unit = [](double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error(ErrorCode::InvalidConfig, std::string(what) + " must lie in [0,1]");
    }
  };
  if (population == 0) throw Error(ErrorCode::InvalidConfig, "population must be >= 1");
  if (iterations == 0) throw Error(ErrorCode::InvalidConfig, "budget must be >= 1 iteration");
  unit(crossover_rate, "crossover rate");
  if (mutation_rate) unit(*mutation_rate, "mutation rate");
  unit(mutation_scale, "mutation scale");
  unit(blend_alpha, "blend alpha");
  unit(inertia, "inertia");
  unit(velocity_clamp, "velocity clamp");
  if (cognitive < 0.0 || social < 0.0) {
    throw Error(ErrorCode::InvalidConfig, "PSO coefficients must be nonnegative");
  }
  if (algorithm == Algorithm::GA) {
    if (tournament_size == 0 || tournament_size > population) {
      throw Error(ErrorCode::InvalidConfig, "tournament size must lie in [1, population]");
    }
    if (elitism > population) throw Error(ErrorCode::InvalidConfig, "elitism exceeds population");
  }
}

namespace {

double uniform(Rng& rng, double lo, double hi) {
  return lo == hi ? lo : std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::vector<double> random_point(const std::vector<Bounds>& b, Rng& rng) {
  std::vector<double> x(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) x[j] = uniform(rng, b[j].lo, b[j].hi);
  return x;
}

void clamp_into(std::vector<double>& x, const std::vector<Bounds>& b) {
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = std::clamp(x[j], b[j].lo, b[j].hi);
}

}  // namespace

BaselineResult run_pso(const ContinuousProblem& problem, const BaselineConfig& cfg,
                       std::uint64_t seed) {
  cfg.validate();
  Rng rng(seed);
  const auto& b = problem.bounds();
  const std::size_t dim = problem.dim();
  const std::size_t n = cfg.population;

  std::vector<double> vmax(dim);
  for (std::size_t j = 0; j < dim; ++j) vmax[j] = cfg.velocity_clamp * (b[j].hi - b[j].lo);

  std::vector<std::vector<double>> x(n), v(n, std::vector<double>(dim, 0.0)), pbest(n);
  std::vector<double> pbest_f(n);
  BaselineResult res;
  res.best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = random_point(b, rng);
    for (std::size_t j = 0; j < dim; ++j) v[i][j] = uniform(rng, -vmax[j], vmax[j]);
    pbest[i] = x[i];
    pbest_f[i] = problem.evaluate(x[i], rng);
    if (pbest_f[i] < res.best) {
      res.best = pbest_f[i];
      res.best_x = x[i];
    }
  }

  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (std::size_t t = 0; t < cfg.iterations; ++t) {
    // Synchronous update: every particle follows the previous iteration's best.
    const std::vector<double> g = res.best_x;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        const double r1 = u01(rng), r2 = u01(rng);
        double vel = cfg.inertia * v[i][j] + cfg.cognitive * r1 * (pbest[i][j] - x[i][j]) +
                     cfg.social * r2 * (g[j] - x[i][j]);
        vel = std::clamp(vel, -vmax[j], vmax[j]);
        v[i][j] = vel;
        x[i][j] += vel;
      }
      clamp_into(x[i], b);
      const double f = problem.evaluate(x[i], rng);
      if (f < pbest_f[i]) {
        pbest_f[i] = f;
        pbest[i] = x[i];
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (pbest_f[i] < res.best) {
        res.best = pbest_f[i];
        res.best_x = pbest[i];
      }
    }
    res.trace.total.push_back(res.best);
  }
  return res;
}

BaselineResult run_ga(const ContinuousProblem& problem, const BaselineConfig& cfg,
                      std::uint64_t seed) {
  cfg.validate();
  Rng rng(seed);
  const auto& b = problem.bounds();
  const std::size_t dim = problem.dim();
  const std::size_t n = cfg.population;
  const double p_mut = cfg.mutation_rate.value_or(dim ? 1.0 / static_cast<double>(dim) : 0.0);

  std::vector<std::vector<double>> pop(n);
  std::vector<double> fit(n);
  BaselineResult res;
  res.best = std::numeric_limits<double>::infinity();
  auto absorb = [&](const std::vector<double>& x, double f) {
    if (f < res.best) {
      res.best = f;
      res.best_x = x;
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    pop[i] = random_point(b, rng);
    fit[i] = problem.evaluate(pop[i], rng);
    absorb(pop[i], fit[i]);
  }

  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  auto tournament = [&]() {
    std::size_t winner = pick(rng);
    for (std::size_t k = 1; k < cfg.tournament_size; ++k) {
      const std::size_t c = pick(rng);
      if (fit[c] < fit[winner]) winner = c;
    }
    return winner;
  };

  std::vector<std::size_t> order(n);
  for (std::size_t t = 0; t < cfg.iterations; ++t) {
    std::vector<std::vector<double>> next;
    std::vector<double> next_fit;
    next.reserve(n);
    next_fit.reserve(n);

    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(cfg.elitism),
                      order.end(), [&](std::size_t a, std::size_t c) { return fit[a] < fit[c]; });
    for (std::size_t e = 0; e < cfg.elitism; ++e) {
      next.push_back(pop[order[e]]);
      next_fit.push_back(fit[order[e]]);
    }

    while (next.size() < n) {
      std::vector<double> c1 = pop[tournament()];
      std::vector<double> c2 = pop[tournament()];
      if (u01(rng) < cfg.crossover_rate) {
        for (std::size_t j = 0; j < dim; ++j) {
          const double lo = std::min(c1[j], c2[j]), hi = std::max(c1[j], c2[j]);
          const double span = cfg.blend_alpha * (hi - lo);
          const double a = uniform(rng, lo - span, hi + span);
          const double c = uniform(rng, lo - span, hi + span);
          c1[j] = a;
          c2[j] = c;
        }
      }
      for (auto* child : {&c1, &c2}) {
        for (std::size_t j = 0; j < dim; ++j) {
          if (u01(rng) < p_mut) {
            const double sigma = cfg.mutation_scale * (b[j].hi - b[j].lo);
            if (sigma > 0.0) (*child)[j] += std::normal_distribution<double>(0.0, sigma)(rng);
          }
        }
        clamp_into(*child, b);
        if (next.size() < n) {
          const double f = problem.evaluate(*child, rng);
          absorb(*child, f);
          next.push_back(std::move(*child));
          next_fit.push_back(f);
        }
      }
    }
    pop = std::move(next);
    fit = std::move(next_fit);
    res.trace.total.push_back(res.best);
  }
  return res;
}

BaselineResult run_baseline(const ContinuousProblem& problem, const BaselineConfig& cfg,
                            std::uint64_t seed) {
  return cfg.algorithm == Algorithm::GA ? run_ga(problem, cfg, seed) : run_pso(problem, cfg, seed);
}

}  // namespace ghosa::baselines
