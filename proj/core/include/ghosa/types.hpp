#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace ghosa {

using Rng = std::mt19937_64;

// Events are 1-based identifiers drawn from the problem's event universe.
using Event = int;

enum class SequenceKind {
  Permutation,  // every event 1..n exactly once
  Path,         // source first, destination last, interior events distinct
};

struct EventSequence {
  std::vector<Event> events;
  // Set for path sequences whose consecutive events are not all adjacent.
  bool incomplete = false;

  std::size_t length() const noexcept { return events.size(); }
  Event operator[](std::size_t i) const { return events[i]; }
  Event& operator[](std::size_t i) { return events[i]; }
  friend bool operator==(const EventSequence&, const EventSequence&) = default;
};

struct IndexRange {
  std::size_t begin = 0;
  std::size_t length = 0;

  std::size_t end() const noexcept { return begin + length; }
  bool contains(std::size_t i) const noexcept { return i >= begin && i < end(); }
};

struct Bounds {
  double lo = 0.0;
  double hi = 0.0;
  friend bool operator==(const Bounds&, const Bounds&) = default;
};

enum class Sense { Minimize, Maximize };

// Per-iteration global best. `travel` and `waiting` are filled only for road
// networks, where the scalar objective splits into two time components.
struct ConvergenceTrace {
  std::vector<double> total;
  std::vector<double> travel;
  std::vector<double> waiting;
};

bool is_permutation_of_1_to_n(const std::vector<Event>& events);

}  // namespace ghosa
