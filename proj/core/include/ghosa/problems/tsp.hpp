#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ghosa/discrete_problem.hpp"

namespace ghosa::problems {

enum class TspMetric {
  Euc2d,     // TSPLIB EUC_2D, rounded to nearest integer
  Att,       // TSPLIB ATT pseudo-Euclidean
  Geo,       // TSPLIB GEO great-circle, degrees.minutes coordinates
  Explicit,  // distance matrix given in the file
  Euclidean, // plain unrounded Euclidean over the raw coordinates
};

std::string_view to_string(TspMetric metric);
std::optional<TspMetric> tsp_metric_from_string(std::string_view name);

struct TspInstance {
  std::string name;
  std::size_t n = 0;
  std::vector<std::array<double, 2>> coords;  // empty for Explicit
  TspMetric metric = TspMetric::Euc2d;
  std::vector<double> matrix;  // row-major n*n, Explicit only
  std::optional<double> best_known;
};

// Dense symmetric distance matrix.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(const TspInstance& inst, std::optional<TspMetric> override_metric = {});

  std::size_t size() const noexcept { return n_; }
  // 0-based city indices.
  double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }

 private:
  std::size_t n_ = 0;
  std::vector<double> d_;
};

double tsp_distance(const TspInstance& inst, std::size_t i, std::size_t j, TspMetric metric);

// Closed tour length over a permutation of 1..n. Throws InvalidTour.
double tsp_tour_length(const TspInstance& inst, const EventSequence& tour,
                       std::optional<TspMetric> override_metric = {});
double tsp_tour_length(const DistanceMatrix& dist, const EventSequence& tour);

// Cost of inserting `bait` before slot `slot` of a (possibly partial) closed
// tour: d(prev,bait) + d(bait,next) - d(prev,next).
double tsp_insertion_cost(const DistanceMatrix& dist, const EventSequence& tour,
                          std::size_t slot, Event bait);

class TspProblem final : public DiscreteProblem {
 public:
  explicit TspProblem(TspInstance inst, std::optional<TspMetric> override_metric = {});

  std::string name() const override { return inst_.name; }
  SequenceKind kind() const override { return SequenceKind::Permutation; }
  int universe_size() const override { return static_cast<int>(inst_.n); }
  EventSequence random_sequence(Rng& rng) const override;
  double evaluate(Agent& agent) const override;
  // Revolving a whole tour leaves its length unchanged.
  bool rotate_whole_string() const override { return false; }

  const TspInstance& instance() const noexcept { return inst_; }
  const DistanceMatrix& distances() const noexcept { return dist_; }

 private:
  TspInstance inst_;
  DistanceMatrix dist_;
};

EventSequence random_permutation(std::size_t n, Rng& rng);

}  // namespace ghosa::problems
