#include "ghosa/problems/road.hpp"

#include <algorithm>

#include "ghosa/error.hpp"

namespace ghosa::problems {

void RoadNetwork::index() {
  const std::size_t n = node_count();
  lookup_.assign(n * n, -1);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& e = edges[k];
    if (e.from < 1 || e.to < 1 || static_cast<std::size_t>(e.from) > n ||
        static_cast<std::size_t>(e.to) > n) {
      throw Error(ErrorCode::UnknownNodeReference, "edge endpoint outside node set");
    }
    int& slot = lookup_[static_cast<std::size_t>(e.from - 1) * n + static_cast<std::size_t>(e.to - 1)];
    if (slot < 0 || edge_cost(e) < edge_cost(edges[static_cast<std::size_t>(slot)])) {
      slot = static_cast<int>(k);
    }
  }
}

const RoadEdge* RoadNetwork::edge_between(int u, int v) const {
  const std::size_t n = node_count();
  if (u < 1 || v < 1 || static_cast<std::size_t>(u) > n || static_cast<std::size_t>(v) > n ||
      lookup_.size() != n * n) {
    return nullptr;
  }
  const int k = lookup_[static_cast<std::size_t>(u - 1) * n + static_cast<std::size_t>(v - 1)];
  return k < 0 ? nullptr : &edges[static_cast<std::size_t>(k)];
}

void RoadNetwork::validate() const {
  if (!(velocity > 0.0)) throw Error(ErrorCode::NonPositiveVelocity, "V must be positive");
  const auto n = static_cast<int>(node_count());
  if (source < 1 || source > n || destination < 1 || destination > n) {
    throw Error(ErrorCode::UnknownNodeReference, "source or destination not a declared node");
  }
  if (source == destination) throw Error(ErrorCode::WrongEndpoints, "source equals destination");
  for (const auto& e : edges) {
    if (e.distance < 0.0 || e.awt < 0.0) {
      throw Error(ErrorCode::InvalidConfig, "negative distance or waiting time");
    }
    if (!resource_caps.empty() && e.resources.size() != resource_caps.size()) {
      throw Error(ErrorCode::DimensionMismatch, "edge resources do not match caps");
    }
  }
}

RoadFitness road_fitness(const RoadNetwork& net, const EventSequence& path) {
  if (path.length() < 2 || path[0] != net.source || path.events.back() != net.destination) {
    throw Error(ErrorCode::WrongEndpoints, "path must run from source to destination");
  }
  RoadFitness out;
  for (std::size_t k = 0; k + 1 < path.length(); ++k) {
    const RoadEdge* e = net.edge_between(path[k], path[k + 1]);
    if (!e) {
      throw Error(ErrorCode::DisconnectedPath, "no edge " + std::to_string(path[k]) + " -> " +
                                                   std::to_string(path[k + 1]));
    }
    out.travel += e->distance / net.velocity;
    out.waiting += e->awt;
  }
  out.total = out.travel + out.waiting;
  return out;
}

std::vector<double> road_resources(const RoadNetwork& net, const EventSequence& path) {
  std::vector<double> used(net.resource_caps.size(), 0.0);
  for (std::size_t k = 0; k + 1 < path.length(); ++k) {
    const RoadEdge* e = net.edge_between(path[k], path[k + 1]);
    if (!e) throw Error(ErrorCode::DisconnectedPath, "path has a gap");
    for (std::size_t r = 0; r < used.size(); ++r) used[r] += e->resources[r];
  }
  return used;
}

bool road_feasible(const RoadNetwork& net, const EventSequence& path) {
  const auto used = road_resources(net, path);
  for (std::size_t r = 0; r < used.size(); ++r) {
    if (used[r] > net.resource_caps[r]) return false;
  }
  return true;
}

RoadNetwork perturb_waiting_times(const RoadNetwork& net, const RoadNoise& noise) {
  RoadNetwork out = net;
  if (noise.awt_sigma <= 0.0) return out;
  Rng rng(noise.seed);
  std::normal_distribution<double> gauss(0.0, noise.awt_sigma);
  for (auto& e : out.edges) e.awt = std::max(0.0, e.awt * (1.0 + gauss(rng)));
  out.index();
  return out;
}

RoadProblem::RoadProblem(RoadNetwork net) : net_(std::move(net)) {
  net_.validate();
  net_.index();
  double sum = 0.0;
  for (const auto& e : net_.edges) sum += net_.edge_cost(e);
  penalty_ = sum + 1.0;
}

EventSequence RoadProblem::random_sequence(Rng& rng) const {
  // Random walk over unvisited successors; a dead end is closed with a gap.
  const std::size_t n = net_.node_count();
  std::vector<char> seen(n + 1, 0);
  EventSequence seq;
  int at = net_.source;
  seq.events.push_back(at);
  seen[static_cast<std::size_t>(at)] = 1;
  while (at != net_.destination) {
    std::vector<int> next;
    for (const auto& e : net_.edges) {
      if (e.from == at && !seen[static_cast<std::size_t>(e.to)]) next.push_back(e.to);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next.empty()) {
      seq.events.push_back(net_.destination);
      break;
    }
    at = next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)];
    seen[static_cast<std::size_t>(at)] = 1;
    seq.events.push_back(at);
  }
  return seq;
}

double RoadProblem::evaluate(Agent& agent) const {
  const auto& p = agent.sequence;
  if (p.length() < 2 || p[0] != net_.source || p.events.back() != net_.destination) {
    throw Error(ErrorCode::WrongEndpoints, "path must run from source to destination");
  }
  double cost = 0.0;
  std::size_t gaps = 0;
  std::vector<double> used(net_.resource_caps.size(), 0.0);
  for (std::size_t k = 0; k + 1 < p.length(); ++k) {
    const RoadEdge* e = net_.edge_between(p[k], p[k + 1]);
    if (!e) {
      ++gaps;
      continue;
    }
    cost += net_.edge_cost(*e);
    for (std::size_t r = 0; r < used.size(); ++r) used[r] += e->resources[r];
  }
  bool over = false;
  for (std::size_t r = 0; r < used.size(); ++r) over = over || used[r] > net_.resource_caps[r];
  agent.sequence.incomplete = gaps > 0;
  return cost + penalty_ * static_cast<double>(gaps + (over ? 1 : 0));
}

std::vector<Event> RoadProblem::bait_pool() const {
  std::vector<Event> pool;
  for (int v = 1; v <= universe_size(); ++v) {
    if (v != net_.source && v != net_.destination) pool.push_back(v);
  }
  return pool;
}

std::optional<LinkPredicate> RoadProblem::linkage() const {
  return LinkPredicate([this](Event a, Event b) { return net_.edge_between(a, b) != nullptr; });
}

std::vector<double> RoadProblem::components(const Agent& agent) const {
  double travel = 0.0, waiting = 0.0;
  const auto& p = agent.sequence;
  for (std::size_t k = 0; k + 1 < p.length(); ++k) {
    if (const RoadEdge* e = net_.edge_between(p[k], p[k + 1])) {
      travel += e->distance / net_.velocity;
      waiting += e->awt;
    }
  }
  return {travel, waiting};
}

}  // namespace ghosa::problems
