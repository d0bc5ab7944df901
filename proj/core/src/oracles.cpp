#include "ghosa/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include <fmt/format.h>

#include "ghosa/error.hpp"
#include "ghosa/ingest.hpp"

namespace ghosa::oracles {

using namespace ghosa::problems;

namespace {

void require_size(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit) {
    throw Error(ErrorCode::TooLarge,
                fmt::format("{} oracle handles at most {}, got {}", what, limit, n));
  }
}

}  // namespace

OracleResult brute_force_tsp(const TspInstance& inst, std::optional<TspMetric> override_metric) {
  require_size(inst.n, kMaxTspCities, "TSP");
  OracleResult res;
  if (inst.n == 0) return res;
  const DistanceMatrix dist(inst, override_metric);
  const std::size_t n = inst.n;

  std::vector<int> tour(n);
  std::iota(tour.begin(), tour.end(), 1);
  res.optimum = std::numeric_limits<double>::infinity();
  // City 1 stays first; a tour and its reverse are counted once by requiring
  // the second city to be smaller than the last.
  do {
    if (n >= 3 && tour[1] > tour[n - 1]) continue;
    ++res.nodes_explored;
    double len = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      len += dist(static_cast<std::size_t>(tour[k] - 1), static_cast<std::size_t>(tour[(k + 1) % n] - 1));
    }
    if (len < res.optimum) {
      res.optimum = len;
      res.optimizer = tour;
    }
  } while (std::next_permutation(tour.begin() + 1, tour.end()));
  return res;
}

OracleResult brute_force_qap(const QapInstance& inst) {
  require_size(inst.n, kMaxQapSize, "QAP");
  OracleResult res;
  const std::size_t n = inst.n;
  EventSequence perm;
  perm.events.resize(n);
  std::iota(perm.events.begin(), perm.events.end(), 1);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  do {
    ++res.nodes_explored;
    const std::int64_t c = qap_cost(inst, perm);
    if (c < best) {
      best = c;
      res.optimizer = perm.events;
    }
  } while (std::next_permutation(perm.events.begin(), perm.events.end()));
  res.optimum = static_cast<double>(best);
  return res;
}

namespace {

OracleResult knapsack_exhaustive(const KnapsackInstance& inst) {
  const std::size_t n = inst.n, m = inst.m;
  OracleResult res;
  res.optimizer.assign(n, 0);
  std::vector<double> load(m, 0.0);
  double profit = 0.0;
  std::uint64_t gray = 0;
  // Gray-code walk: each step flips one item, so loads update in O(m).
  // Sums are recomputed exactly at the winner to avoid drift.
  std::uint64_t best_mask = 0;
  double best = 0.0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < total; ++step) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(step));
    gray ^= std::uint64_t{1} << bit;
    const double sign = (gray >> bit) & 1 ? 1.0 : -1.0;
    profit += sign * inst.profit[bit];
    bool ok = true;
    for (std::size_t r = 0; r < m; ++r) {
      load[r] += sign * inst.w(r, bit);
      if (load[r] > inst.capacity[r] + 1e-9 * std::max(1.0, std::abs(inst.capacity[r]))) ok = false;
    }
    ++res.nodes_explored;
    if (ok && profit > best + 1e-9) {
      Selection bits(n);
      for (std::size_t i = 0; i < n; ++i) bits[i] = (gray >> i) & 1;
      if (!knapsack_feasible(inst, bits)) continue;
      const double exact = knapsack_profit(inst, bits);
      if (exact > best) {
        best = exact;
        best_mask = gray;
      }
    }
  }
  res.optimum = best;
  for (std::size_t i = 0; i < n; ++i) res.optimizer[i] = static_cast<int>((best_mask >> i) & 1);
  return res;
}

bool integral(double v) { return v >= 0.0 && std::floor(v) == v; }

OracleResult knapsack_dp(const KnapsackInstance& inst) {
  const std::size_t n = inst.n;
  const auto cap = static_cast<std::size_t>(inst.capacity[0]);
  OracleResult res;
  std::vector<double> best(cap + 1, 0.0);
  std::vector<bool> take(n * (cap + 1), false);
  for (std::size_t i = 0; i < n; ++i) {
    const auto w = static_cast<std::size_t>(inst.w(0, i));
    for (std::size_t c = cap + 1; c-- > w;) {
      ++res.nodes_explored;
      const double with = best[c - w] + inst.profit[i];
      if (with > best[c]) {
        best[c] = with;
        take[i * (cap + 1) + c] = true;
      }
    }
  }
  res.optimum = best[cap];
  res.optimizer.assign(n, 0);
  std::size_t c = cap;
  for (std::size_t i = n; i-- > 0;) {
    if (take[i * (cap + 1) + c]) {
      res.optimizer[i] = 1;
      c -= static_cast<std::size_t>(inst.w(0, i));
    }
  }
  return res;
}

}  // namespace

OracleResult exact_knapsack(const KnapsackInstance& inst) {
  if (inst.profit.size() != inst.n || inst.weight.size() != inst.m * inst.n ||
      inst.capacity.size() != inst.m) {
    throw Error(ErrorCode::DimensionMismatch, "knapsack arrays disagree with m and n");
  }
  if (inst.n <= kMaxKnapsackItems) return knapsack_exhaustive(inst);
  constexpr double kMaxDpCells = 2e8;
  if (inst.m == 1 && integral(inst.capacity[0]) &&
      std::all_of(inst.weight.begin(), inst.weight.end(), integral) &&
      static_cast<double>(inst.n) * (inst.capacity[0] + 1.0) <= kMaxDpCells) {
    return knapsack_dp(inst);
  }
  throw Error(ErrorCode::TooLarge,
              fmt::format("knapsack oracle needs n <= {} or one integral constraint, got m={} n={}",
                          kMaxKnapsackItems, inst.m, inst.n));
}

namespace {

struct RoadSearch {
  const RoadNetwork& net;
  std::vector<std::vector<const RoadEdge*>> out;  // cheapest edge per successor
  OracleResult res;
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> path;
  std::vector<bool> on_path;
  std::vector<double> used;

  explicit RoadSearch(const RoadNetwork& n) : net(n), out(n.node_count() + 1) {
    for (int u = 1; u <= static_cast<int>(n.node_count()); ++u) {
      for (int v = 1; v <= static_cast<int>(n.node_count()); ++v) {
        if (const RoadEdge* e = n.edge_between(u, v); e && u != v) {
          out[static_cast<std::size_t>(u)].push_back(e);
        }
      }
    }
  }

  bool within_caps(const std::vector<double>& r) const {
    for (std::size_t k = 0; k < net.resource_caps.size(); ++k) {
      if (r[k] > net.resource_caps[k]) return false;
    }
    return true;
  }

  void dfs(int u, double cost) {
    ++res.nodes_explored;
    if (u == net.destination) {
      if (within_caps(used) && cost < best) {
        best = cost;
        res.optimizer = path;
      }
      return;
    }
    for (const RoadEdge* e : out[static_cast<std::size_t>(u)]) {
      const int v = e->to;
      const double c = cost + net.edge_cost(*e);
      if (on_path[static_cast<std::size_t>(v)] || c >= best) continue;
      on_path[static_cast<std::size_t>(v)] = true;
      path.push_back(v);
      for (std::size_t k = 0; k < net.resource_caps.size(); ++k) used[k] += e->resources[k];
      dfs(v, c);
      for (std::size_t k = 0; k < net.resource_caps.size(); ++k) used[k] -= e->resources[k];
      path.pop_back();
      on_path[static_cast<std::size_t>(v)] = false;
    }
  }

  void enumerate() {
    on_path.assign(net.node_count() + 1, false);
    used.assign(net.resource_caps.size(), 0.0);
    path = {net.source};
    on_path[static_cast<std::size_t>(net.source)] = true;
    dfs(net.source, 0.0);
  }

  struct Label {
    int node;
    double cost;
    std::vector<double> used;
    int parent;  // label index, -1 at the source
    bool alive = true;
  };

  static bool dominates(const Label& a, const Label& b) {
    if (a.cost > b.cost) return false;
    for (std::size_t k = 0; k < a.used.size(); ++k) {
      if (a.used[k] > b.used[k]) return false;
    }
    return true;
  }

  // Pareto labels on (cost, resources). With nonnegative costs and resources a
  // cycle never helps, so the surviving best label is a simple path.
  void label_correcting() {
    for (const auto& e : net.edges) {
      for (double r : e.resources) {
        if (r < 0.0) throw Error(ErrorCode::InvalidConfig, "negative resource use on an edge");
      }
    }
    std::vector<Label> labels;
    std::vector<std::vector<int>> at(net.node_count() + 1);
    std::deque<int> queue;
    labels.push_back({net.source, 0.0, std::vector<double>(net.resource_caps.size(), 0.0), -1});
    at[static_cast<std::size_t>(net.source)].push_back(0);
    queue.push_back(0);
    while (!queue.empty()) {
      const int li = queue.front();
      queue.pop_front();
      if (!labels[static_cast<std::size_t>(li)].alive) continue;
      ++res.nodes_explored;
      const Label cur = labels[static_cast<std::size_t>(li)];
      if (cur.node == net.destination) continue;
      for (const RoadEdge* e : out[static_cast<std::size_t>(cur.node)]) {
        Label next{e->to, cur.cost + net.edge_cost(*e), cur.used, li};
        for (std::size_t k = 0; k < next.used.size(); ++k) next.used[k] += e->resources[k];
        if (!within_caps(next.used) || next.cost >= best) continue;
        auto& bucket = at[static_cast<std::size_t>(next.node)];
        bool dominated = false;
        for (int other : bucket) {
          if (labels[static_cast<std::size_t>(other)].alive &&
              dominates(labels[static_cast<std::size_t>(other)], next)) {
            dominated = true;
            break;
          }
        }
        if (dominated) continue;
        for (int other : bucket) {
          if (dominates(next, labels[static_cast<std::size_t>(other)])) {
            labels[static_cast<std::size_t>(other)].alive = false;
          }
        }
        std::erase_if(bucket, [&](int o) { return !labels[static_cast<std::size_t>(o)].alive; });
        labels.push_back(std::move(next));
        const int id = static_cast<int>(labels.size()) - 1;
        bucket.push_back(id);
        if (labels.back().node == net.destination) {
          if (labels.back().cost < best) {
            best = labels.back().cost;
            res.optimizer.clear();
            for (int k = id; k >= 0; k = labels[static_cast<std::size_t>(k)].parent) {
              res.optimizer.push_back(labels[static_cast<std::size_t>(k)].node);
            }
            std::reverse(res.optimizer.begin(), res.optimizer.end());
          }
        } else {
          queue.push_back(id);
        }
      }
    }
  }
};

}  // namespace

OracleResult exact_shortest_paths(const RoadNetwork& net) {
  net.validate();
  RoadNetwork indexed = net;
  indexed.index();
  RoadSearch search(indexed);
  if (indexed.node_count() <= kMaxEnumeratedRoadNodes) {
    search.enumerate();
  } else {
    search.label_correcting();
  }
  if (search.res.optimizer.empty()) {
    throw Error(ErrorCode::Disconnected, "no feasible source-destination path");
  }
  // Report the value the objective itself computes for this path.
  EventSequence p;
  p.events = search.res.optimizer;
  search.res.optimum = road_fitness(indexed, p).total;
  return search.res;
}

std::uint64_t instance_key(const TspInstance& inst, std::optional<TspMetric> override_metric) {
  TspInstance canon = inst;
  canon.name.clear();
  canon.best_known.reset();
  if (canon.metric == TspMetric::Euclidean) canon.metric = TspMetric::Euc2d;
  return ingest::checksum(ingest::serialize_tsplib(canon) + "metric " +
                          std::string(to_string(override_metric.value_or(inst.metric))));
}

std::uint64_t instance_key(const QapInstance& inst) {
  return ingest::checksum(ingest::serialize_qaplib(inst));
}

std::uint64_t instance_key(const KnapsackInstance& inst) {
  KnapsackInstance canon = inst;
  canon.best_known.reset();
  return ingest::checksum(ingest::serialize_orlib_mknap({canon}));
}

std::uint64_t instance_key(const RoadNetwork& net) {
  return ingest::checksum(ingest::serialize_roadnet(net));
}

OracleCache::OracleCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    std::istringstream row(line);
    std::string hex;
    double value = 0.0;
    if (!(row >> hex >> value)) {
      throw Error(ErrorCode::IoFailure,
                  fmt::format("{}:{}: expected 'checksum optimum'", path_.string(), lineno));
    }
    entries_[std::stoull(hex, nullptr, 16)] = value;
  }
}

std::optional<double> OracleCache::lookup(std::uint64_t key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void OracleCache::store(std::uint64_t key, double optimum) { entries_[key] = optimum; }

void OracleCache::save() const {
  if (path_.empty()) return;
  std::ofstream out(path_, std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoFailure, "cannot write " + path_.string());
  for (const auto& [key, value] : entries_) {
    out << fmt::format("{} {}\n", ingest::checksum_hex(key), value);
  }
  if (!out) throw Error(ErrorCode::IoFailure, "cannot write " + path_.string());
}

}  // namespace ghosa::oracles
