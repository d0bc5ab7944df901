#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ghosa/discrete_problem.hpp"

namespace ghosa::problems {

struct RoadEdge {
  int from = 0;  // 1-based node index
  int to = 0;
  double distance = 0.0;
  double awt = 0.0;                // average waiting time
  std::vector<double> resources;  // RCSP consumption, empty when unconstrained
};

// Directed road graph. Nodes are indexed 1..labels.size(); `labels` keeps the
// identifiers used in the source file.
struct RoadNetwork {
  std::vector<long long> labels;
  std::vector<RoadEdge> edges;
  double velocity = 1.0;
  int source = 0;
  int destination = 0;
  std::vector<double> resource_caps;  // empty: no resource constraints

  std::size_t node_count() const noexcept { return labels.size(); }
  // Cost of one edge in time units: D/V + AWT.
  double edge_cost(const RoadEdge& e) const { return e.distance / velocity + e.awt; }
  // Cheapest edge u->v, or nullptr.
  const RoadEdge* edge_between(int u, int v) const;
  // Builds the u->v lookup; call after editing `edges`.
  void index();
  // Throws NonPositiveVelocity, WrongEndpoints, InvalidConfig.
  void validate() const;

 private:
  std::vector<int> lookup_;  // (u-1)*n + (v-1) -> edge index or -1
};

struct RoadFitness {
  double travel = 0.0;   // sum D_k / V
  double waiting = 0.0;  // sum AWT_k
  double total = 0.0;
};

// Throws WrongEndpoints, DisconnectedPath.
RoadFitness road_fitness(const RoadNetwork& net, const EventSequence& path);

// Summed resource use along a complete path.
std::vector<double> road_resources(const RoadNetwork& net, const EventSequence& path);
bool road_feasible(const RoadNetwork& net, const EventSequence& path);

struct RoadNoise {
  double awt_sigma = 0.0;  // relative std-dev of waiting times; 0 disables
  std::uint64_t seed = 0;
};

// Returns a copy whose AWT values carry seeded multiplicative noise, clipped
// at zero. Models background traffic.
RoadNetwork perturb_waiting_times(const RoadNetwork& net, const RoadNoise& noise);

class RoadProblem final : public DiscreteProblem {
 public:
  explicit RoadProblem(RoadNetwork net);

  std::string name() const override { return "road"; }
  SequenceKind kind() const override { return SequenceKind::Path; }
  int universe_size() const override { return static_cast<int>(net_.node_count()); }
  EventSequence random_sequence(Rng& rng) const override;
  // f = f1 + f2 for complete feasible paths. Each gap or cap violation adds a
  // penalty larger than any simple path's cost.
  double evaluate(Agent& agent) const override;
  std::vector<Event> bait_pool() const override;
  std::optional<LinkPredicate> linkage() const override;
  bool rotate_whole_string() const override { return false; }
  std::vector<double> components(const Agent& agent) const override;

  const RoadNetwork& network() const noexcept { return net_; }
  double penalty() const noexcept { return penalty_; }

 private:
  RoadNetwork net_;
  double penalty_ = 0.0;
};

}  // namespace ghosa::problems
