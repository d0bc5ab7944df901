#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <vector>

#include "ghosa/problems/knapsack.hpp"
#include "ghosa/problems/qap.hpp"
#include "ghosa/problems/road.hpp"
#include "ghosa/problems/tsp.hpp"

namespace ghosa::oracles {

struct OracleResult {
  double optimum = 0.0;
  // Tour, permutation or node path (1-based), or a 0/1 vector for knapsack.
  std::vector<int> optimizer;
  std::uint64_t nodes_explored = 0;
};

inline constexpr std::size_t kMaxTspCities = 10;
inline constexpr std::size_t kMaxQapSize = 9;
inline constexpr std::size_t kMaxKnapsackItems = 22;
inline constexpr std::size_t kMaxEnumeratedRoadNodes = 15;

// All (n-1)!/2 tours with city 1 fixed. Throws TooLarge for n > 10.
OracleResult brute_force_tsp(const problems::TspInstance& inst,
                             std::optional<problems::TspMetric> override_metric = {});

// All n! assignments. Throws TooLarge for n > 9.
OracleResult brute_force_qap(const problems::QapInstance& inst);

// Exhaustive for n <= 22; single-constraint instances with integral weights
// fall back to a capacity DP. Throws TooLarge otherwise.
OracleResult exact_knapsack(const problems::KnapsackInstance& inst);

// Minimum f over simple source-destination paths that respect the resource
// caps. Hops use the same cheapest parallel edge as the GHOSA objective.
// Up to 15 nodes every simple path is enumerated; larger graphs use a
// label-correcting search. Throws Disconnected when no feasible path exists.
OracleResult exact_shortest_paths(const problems::RoadNetwork& net);

// Checksum of the canonical serialization, so equal instances share a key.
std::uint64_t instance_key(const problems::TspInstance& inst,
                           std::optional<problems::TspMetric> override_metric = {});
std::uint64_t instance_key(const problems::QapInstance& inst);
std::uint64_t instance_key(const problems::KnapsackInstance& inst);
std::uint64_t instance_key(const problems::RoadNetwork& net);

// Line-oriented "checksum optimum" store. Not synchronized.
class OracleCache {
 public:
  OracleCache() = default;
  // Loads `path` if it exists; save() writes back to it.
  explicit OracleCache(std::filesystem::path path);

  std::optional<double> lookup(std::uint64_t key) const;
  void store(std::uint64_t key, double optimum);
  void save() const;
  std::size_t size() const noexcept { return entries_.size(); }

  // Looks up `key`, computing and storing the optimum on a miss.
  template <class Solve>
  double get_or_compute(std::uint64_t key, Solve&& solve) {
    if (auto hit = lookup(key)) return *hit;
    const double v = solve().optimum;
    store(key, v);
    return v;
  }

 private:
  std::filesystem::path path_;
  std::map<std::uint64_t, double> entries_;
};

}  // namespace ghosa::oracles
