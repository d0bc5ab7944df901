#pragma once

// Randomized property suites. Each returns how many cases ran and failed; the
// unit tests and the acceptance binary both drive them.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "ghosa/continuous.hpp"
#include "ghosa/engine.hpp"
#include "ghosa/harness.hpp"
#include "ghosa/lbniv.hpp"
#include "ghosa/operators.hpp"
#include "ghosa/problems/benchmarks.hpp"
#include "ghosa/problems/knapsack.hpp"
#include "ghosa/problems/tsp.hpp"
#include "random_instances.hpp"

namespace ghosa::testing {

struct PropertyOutcome {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return cases > 0 && failures == 0; }
  void fail(const std::string& why) {
    if (failures++ == 0) first_failure = why;
  }
};

inline constexpr std::size_t kPropertyCases = 10000;

namespace detail {

inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline EventSequence shuffled(std::size_t n, Rng& rng) {
  EventSequence s;
  s.events.resize(n);
  std::iota(s.events.begin(), s.events.end(), 1);
  std::shuffle(s.events.begin(), s.events.end(), rng);
  return s;
}

inline std::string show(const EventSequence& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.length(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "]";
}

}  // namespace detail

// Every baiting case and every rotation keeps a permutation of 1..n.
inline PropertyOutcome permutation_closure(std::size_t cases, std::uint64_t seed) {
  PropertyOutcome out{"permutation closure", 0, 0, {}};
  Rng rng(seed);
  for (std::size_t c = 0; c < cases; ++c, ++out.cases) {
    const std::size_t n = detail::pick(rng, 1, 40);
    const auto seq = detail::shuffled(n, rng);
    const auto kind = static_cast<BaitCase>(detail::pick(rng, 0, 2));
    const auto bait = static_cast<Event>(detail::pick(rng, 1, n));
    const std::size_t pos = detail::pick(rng, 0, n - 1);
    const auto baited = baiting(seq, bait, pos, kind, SequenceKind::Permutation, static_cast<int>(n));
    if (baited.length() != n || !is_permutation_of_1_to_n(baited.events)) {
      out.fail("baiting case " + std::to_string(static_cast<int>(kind)) + " on " +
               detail::show(seq) + " gave " + detail::show(baited));
      continue;
    }
    if (n < 2) continue;
    const std::size_t len = detail::pick(rng, 2, n);
    const std::size_t begin = detail::pick(rng, 0, n - len);
    const std::size_t at = detail::pick(rng, begin, begin + len - 1);
    const auto rotated = attracting_prey_swarms(baited, at, detail::pick(rng, 1, len - 1), {begin, len});
    if (!is_permutation_of_1_to_n(rotated.events)) {
      out.fail("rotation broke " + detail::show(baited) + " into " + detail::show(rotated));
    }
  }
  return out;
}

// Rotation keeps the multiset, leaves the outside alone and is undone by the
// complementary shift.
inline PropertyOutcome rotation_inversion(std::size_t cases, std::uint64_t seed) {
  PropertyOutcome out{"rotation multiset and inversion", 0, 0, {}};
  Rng rng(seed);
  for (std::size_t c = 0; c < cases; ++c, ++out.cases) {
    const std::size_t n = detail::pick(rng, 2, 40);
    EventSequence seq;
    for (std::size_t i = 0; i < n; ++i) seq.events.push_back(static_cast<Event>(detail::pick(rng, 1, 6)));
    const std::size_t len = detail::pick(rng, 2, n);
    const std::size_t begin = detail::pick(rng, 0, n - len);
    const std::size_t shift = detail::pick(rng, 1, len - 1);
    const std::size_t at = detail::pick(rng, begin, begin + len - 1);
    const auto r = attracting_prey_swarms(seq, at, shift, {begin, len});
    auto a = seq.events, b = r.events;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    bool outside = true;
    for (std::size_t i = 0; i < n; ++i) {
      if ((i < begin || i >= begin + len) && r[i] != seq[i]) outside = false;
    }
    bool moved = true;
    for (std::size_t i = 0; i < len; ++i) {
      if (r[begin + (i + shift) % len] != seq[begin + i]) moved = false;
    }
    const auto back = attracting_prey_swarms(r, at, len - shift, {begin, len});
    if (a != b || !outside || !moved || back != seq) {
      out.fail("rotation of " + detail::show(seq) + " by " + std::to_string(shift) + " over [" +
               std::to_string(begin) + "," + std::to_string(begin + len) + ")");
    }
  }
  return out;
}

inline PropertyOutcome knapsack_one_count(std::size_t cases, std::uint64_t seed) {
  PropertyOutcome out{"knapsack decode one-count", 0, 0, {}};
  Rng rng(seed);
  for (std::size_t c = 0; c < cases; ++c, ++out.cases) {
    const std::size_t n = detail::pick(rng, 1, 60);
    const auto seq = detail::shuffled(n, rng);
    const int t = static_cast<int>(detail::pick(rng, 1, n));
    const auto bits = problems::knapsack_decode(seq, t);
    const auto ones = static_cast<std::size_t>(std::count(bits.begin(), bits.end(), 1));
    if (ones != n - static_cast<std::size_t>(t)) {
      out.fail("n=" + std::to_string(n) + " t=" + std::to_string(t) + " gave " +
               std::to_string(ones) + " ones");
    }
  }
  return out;
}

inline PropertyOutcome knapsack_feasibility(std::size_t cases, std::uint64_t seed) {
  PropertyOutcome out{"nonzero profit implies feasibility", 0, 0, {}};
  Rng rng(seed);
  for (std::size_t c = 0; c < cases; ++c, ++out.cases) {
    const auto inst = random_knapsack(detail::pick(rng, 1, 5), detail::pick(rng, 1, 25), rng());
    problems::Selection bits(inst.n);
    for (auto& b : bits) b = static_cast<std::uint8_t>(detail::pick(rng, 0, 1));
    const double p = problems::knapsack_profit(inst, bits);
    bool rows_ok = true;
    for (std::size_t r = 0; r < inst.m; ++r) {
      double load = 0.0;
      for (std::size_t i = 0; i < inst.n; ++i) load += bits[i] * inst.w(r, i);
      rows_ok = rows_ok && load <= inst.capacity[r];
    }
    if (p > 0.0 && !rows_ok) out.fail("profit " + std::to_string(p) + " from an infeasible selection");
    if (rows_ok) {
      double expect = 0.0;
      for (std::size_t i = 0; i < inst.n; ++i) expect += bits[i] * inst.profit[i];
      if (p != expect) out.fail("feasible selection scored " + std::to_string(p));
    }
  }
  return out;
}

// d follows the two-branch relative-change rule; swapping the branch negates it.
inline PropertyOutcome d_branch_arithmetic(std::size_t cases, std::uint64_t seed) {
  PropertyOutcome out{"d and eps branch arithmetic", 0, 0, {}};
  Rng rng(seed);
  std::uniform_real_distribution<double> val(-1e3, 1e3), step(1e-3, 1e3);
  for (std::size_t c = 0; c < cases; ++c, ++out.cases) {
    double J_prev = val(rng);
    if (std::abs(J_prev) < 1e-6) J_prev = 1.0;
    const double J_t = val(rng), x_prev = val(rng);
    const double gap = step(rng);
    const auto up = lbniv::update_d(J_t, J_prev, x_prev + gap, x_prev);
    const auto down = lbniv::update_d(J_t, J_prev, x_prev - gap, x_prev);
    const auto same = lbniv::update_d(J_t, J_prev, x_prev, x_prev);
    const double expect = (J_prev - J_t) / std::abs(J_prev);
    if (up.d != expect || down.d != -expect || same.d != expect || up.degenerate) {
      out.fail("update_d(" + std::to_string(J_t) + ", " + std::to_string(J_prev) + ")");
    }
    if (lbniv::update_d(J_prev, J_prev, x_prev + gap, x_prev).d != 0.0) out.fail("equal J gave d != 0");

    const double lo = val(rng), hi = lo + step(rng), eps = step(rng), k = 1.0 + step(rng);
    const Bounds b{lo, hi};
    const double e_hi = lbniv::update_epsilon(eps, hi + gap, b, k);
    const double e_lo = lbniv::update_epsilon(eps, lo - gap, b, k);
    const double e_in = lbniv::update_epsilon(eps, lo + (hi - lo) / 2, b, k);
    if (e_hi != eps / k || e_lo != eps * k || e_in != eps) out.fail("update_epsilon branch");
  }
  return out;
}

// eps stays positive under any run of bound violations, and one overshoot
// followed by one undershoot restores it (exactly for k = 2, to rounding
// otherwise).
inline PropertyOutcome eps_positivity(std::size_t cases, std::uint64_t seed) {
  PropertyOutcome out{"eps positivity and inverse pair", 0, 0, {}};
  Rng rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const Bounds b{-1.0, 1.0};
  for (std::size_t c = 0; c < cases; ++c, ++out.cases) {
    const double k = c % 2 ? 2.0 : 1.0 + 9.0 * u01(rng) + 1e-9;
    const double eps0 = 1e-3 + u01(rng);
    double eps = eps0;
    const std::size_t steps = detail::pick(rng, 1, 60);
    for (std::size_t s = 0; s < steps; ++s) {
      const double x = u01(rng) < 0.5 ? 2.0 : -2.0;
      eps = lbniv::update_epsilon(eps, x, b, k);
      if (!(eps > 0.0)) {
        out.fail("eps reached " + std::to_string(eps));
        break;
      }
    }
    const double pair = lbniv::update_epsilon(lbniv::update_epsilon(eps0, 2.0, b, k), -2.0, b, k);
    const bool exact = k == 2.0 ? pair == eps0 : std::abs(pair - eps0) <= 4 * 2.2e-16 * eps0;
    if (!exact) out.fail("inverse pair with k=" + std::to_string(k));
  }
  return out;
}

// Short optimizations on random small problems; the recorded global best may
// never get worse.
inline PropertyOutcome monotone_traces(std::size_t cases, std::uint64_t seed) {
  PropertyOutcome out{"global-best traces monotone", 0, 0, {}};
  Rng rng(seed);
  auto check = [&](const std::vector<double>& t, bool maximize, const std::string& what) {
    for (std::size_t i = 1; i < t.size(); ++i) {
      if (maximize ? t[i] < t[i - 1] : t[i] > t[i - 1]) {
        out.fail(what + " trace worsened at iteration " + std::to_string(i));
        return;
      }
    }
  };
  for (std::size_t c = 0; c < cases; ++c, ++out.cases) {
    EngineConfig cfg;
    cfg.population = detail::pick(rng, 1, 8);
    cfg.iterations = detail::pick(rng, 1, 6);
    cfg.replace_percent = static_cast<double>(detail::pick(rng, 0, 60));
    cfg.seed = rng();
    const std::uint64_t inst_seed = rng();
    switch (c % 5) {
      case 0: {
        problems::TspProblem p(random_tsp(detail::pick(rng, 3, 9), inst_seed));
        check(optimize(p, cfg).trace.total, false, "tsp");
        break;
      }
      case 1: {
        problems::QapProblem p(random_qap(detail::pick(rng, 2, 8), inst_seed));
        check(optimize(p, cfg).trace.total, false, "qap");
        break;
      }
      case 2: {
        problems::KnapsackProblem p(random_knapsack(2, detail::pick(rng, 2, 15), inst_seed),
                                    c % 2 ? problems::ThresholdPolicy::Sweep
                                          : problems::ThresholdPolicy::Random);
        auto trace = optimize(p, cfg).trace.total;
        for (auto& v : trace) v = p.reported(v);
        check(trace, true, "knapsack");
        break;
      }
      case 3: {
        problems::RoadProblem p(random_road_dag(detail::pick(rng, 2, 10), inst_seed, c % 3));
        check(optimize(p, cfg).trace.total, false, "road");
        break;
      }
      default: {
        const int ids[] = {1, 6, 8, 13, 18, 21, 23};
        problems::BenchmarkProblem p(problems::benchmark_function(ids[detail::pick(rng, 0, 6)]));
        ContinuousConfig cc;
        cc.population = cfg.population;
        cc.iterations = cfg.iterations;
        cc.replace_percent = cfg.replace_percent;
        cc.seed = cfg.seed;
        check(optimize_continuous(p, cc).trace.total, false, "continuous");
      }
    }
  }
  return out;
}

// run_experiment twice on the same config, and once more from the config
// round-tripped through the JSON report, must agree bit for bit.
inline PropertyOutcome replay_determinism(std::size_t cases, std::uint64_t seed,
                                          const std::string& tsp_fixture = {}) {
  PropertyOutcome out{"seeded replay determinism", 0, 0, {}};
  Rng rng(seed);
  const int ids[] = {1, 3, 6, 7, 8, 12, 13, 14, 18, 19, 20, 21, 22, 23, 25};
  for (std::size_t c = 0; c < cases; ++c, ++out.cases) {
    harness::ExperimentConfig cfg;
    cfg.runs = detail::pick(rng, 1, 3);
    cfg.iterations = detail::pick(rng, 1, 4);
    cfg.population = detail::pick(rng, 2, 6);
    cfg.seed_base = rng() >> 1;
    cfg.algorithm = static_cast<harness::AlgoKind>(detail::pick(rng, 0, 2));
    if (!tsp_fixture.empty() && c % 50 == 0) {
      cfg.algorithm = harness::AlgoKind::Ghosa;
      cfg.problem.type = harness::ProblemType::Tsp;
      cfg.problem.instance = tsp_fixture;
    } else {
      cfg.problem.type = harness::ProblemType::Benchmark;
      cfg.problem.function_id = ids[detail::pick(rng, 0, std::size(ids) - 1)];
    }
    const auto a = harness::run_experiment(cfg);
    const auto b = harness::run_experiment(cfg);
    const auto r = harness::replay(harness::report_json(a));
    for (std::size_t i = 0; i < a.runs.size(); ++i) {
      if (a.runs[i].best != b.runs[i].best || a.runs[i].best != r.runs[i].best ||
          a.runs[i].trace.total != r.runs[i].trace.total) {
        out.fail("run " + std::to_string(i) + " of case " + std::to_string(c) + " differs");
        break;
      }
    }
  }
  return out;
}

inline std::vector<PropertyOutcome> all_properties(std::size_t cases, std::uint64_t seed,
                                                   const std::string& tsp_fixture = {}) {
  return {permutation_closure(cases, seed),     rotation_inversion(cases, seed + 1),
          knapsack_one_count(cases, seed + 2),  knapsack_feasibility(cases, seed + 3),
          d_branch_arithmetic(cases, seed + 4), eps_positivity(cases, seed + 5),
          monotone_traces(cases, seed + 6),     replay_determinism(cases, seed + 7, tsp_fixture)};
}

}  // namespace ghosa::testing
