#include "ghosa/problems/tsp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ghosa/error.hpp"

namespace ghosa::problems {

namespace {

constexpr double kTsplibPi = 3.141592;
constexpr double kEarthRadius = 6378.388;

double nint(double x) { return static_cast<double>(static_cast<long long>(x + 0.5)); }

double geo_radians(double x) {
  const double deg = std::trunc(x);
  const double min = x - deg;
  return kTsplibPi * (deg + 5.0 * min / 3.0) / 180.0;
}

void check_tour(const EventSequence& tour, std::size_t n) {
  if (tour.length() != n || !is_permutation_of_1_to_n(tour.events)) {
    throw Error(ErrorCode::InvalidTour, "tour is not a permutation of 1.." + std::to_string(n));
  }
}

}  // namespace

std::string_view to_string(TspMetric metric) {
  switch (metric) {
    case TspMetric::Euc2d: return "EUC_2D";
    case TspMetric::Att: return "ATT";
    case TspMetric::Geo: return "GEO";
    case TspMetric::Explicit: return "EXPLICIT";
    case TspMetric::Euclidean: return "EUCLIDEAN";
  }
  return "?";
}

std::optional<TspMetric> tsp_metric_from_string(std::string_view name) {
  for (auto m : {TspMetric::Euc2d, TspMetric::Att, TspMetric::Geo, TspMetric::Explicit,
                 TspMetric::Euclidean}) {
    if (name == to_string(m)) return m;
  }
  return std::nullopt;
}

double tsp_distance(const TspInstance& inst, std::size_t i, std::size_t j, TspMetric metric) {
  if (metric == TspMetric::Explicit) {
    if (inst.matrix.size() != inst.n * inst.n) {
      throw Error(ErrorCode::DimensionMismatch, "explicit metric without a full matrix");
    }
    return inst.matrix[i * inst.n + j];
  }
  if (inst.coords.size() != inst.n) {
    throw Error(ErrorCode::DimensionMismatch, "coordinate metric without coordinates");
  }
  if (i == j) return 0.0;
  const auto& a = inst.coords[i];
  const auto& b = inst.coords[j];
  const double dx = a[0] - b[0];
  const double dy = a[1] - b[1];
  switch (metric) {
    case TspMetric::Euc2d: return nint(std::sqrt(dx * dx + dy * dy));
    case TspMetric::Euclidean: return std::sqrt(dx * dx + dy * dy);
    case TspMetric::Att: {
      const double r = std::sqrt((dx * dx + dy * dy) / 10.0);
      const double t = nint(r);
      return t < r ? t + 1.0 : t;
    }
    case TspMetric::Geo: {
      const double lat_i = geo_radians(a[0]), lon_i = geo_radians(a[1]);
      const double lat_j = geo_radians(b[0]), lon_j = geo_radians(b[1]);
      const double q1 = std::cos(lon_i - lon_j);
      const double q2 = std::cos(lat_i - lat_j);
      const double q3 = std::cos(lat_i + lat_j);
      return std::trunc(kEarthRadius * std::acos(0.5 * ((1.0 + q1) * q2 - (1.0 - q1) * q3)) +
                        1.0);
    }
    case TspMetric::Explicit: break;
  }
  return 0.0;
}

DistanceMatrix::DistanceMatrix(const TspInstance& inst, std::optional<TspMetric> override_metric)
    : n_(inst.n), d_(inst.n * inst.n, 0.0) {
  const TspMetric metric = override_metric.value_or(inst.metric);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) d_[i * n_ + j] = tsp_distance(inst, i, j, metric);
  }
}

double tsp_tour_length(const DistanceMatrix& dist, const EventSequence& tour) {
  check_tour(tour, dist.size());
  const std::size_t n = tour.length();
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    total += dist(static_cast<std::size_t>(tour[k] - 1),
                  static_cast<std::size_t>(tour[(k + 1) % n] - 1));
  }
  return total;
}

double tsp_tour_length(const TspInstance& inst, const EventSequence& tour,
                       std::optional<TspMetric> override_metric) {
  check_tour(tour, inst.n);
  return tsp_tour_length(DistanceMatrix(inst, override_metric), tour);
}

double tsp_insertion_cost(const DistanceMatrix& dist, const EventSequence& tour,
                          std::size_t slot, Event bait) {
  const std::size_t len = tour.length();
  if (len == 0 || slot >= len) {
    throw Error(ErrorCode::InvalidPosition, "insertion slot outside tour");
  }
  const auto prev = static_cast<std::size_t>(tour[(slot + len - 1) % len] - 1);
  const auto next = static_cast<std::size_t>(tour[slot] - 1);
  const auto b = static_cast<std::size_t>(bait - 1);
  return dist(prev, b) + dist(b, next) - dist(prev, next);
}

EventSequence random_permutation(std::size_t n, Rng& rng) {
  EventSequence seq;
  seq.events.resize(n);
  std::iota(seq.events.begin(), seq.events.end(), 1);
  std::shuffle(seq.events.begin(), seq.events.end(), rng);
  return seq;
}

TspProblem::TspProblem(TspInstance inst, std::optional<TspMetric> override_metric)
    : inst_(std::move(inst)), dist_(inst_, override_metric) {}

EventSequence TspProblem::random_sequence(Rng& rng) const { return random_permutation(inst_.n, rng); }

double TspProblem::evaluate(Agent& agent) const { return tsp_tour_length(dist_, agent.sequence); }

}  // namespace ghosa::problems
