#include "ghosa/operators.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "ghosa/error.hpp"

namespace ghosa {

namespace {

void check_position(const EventSequence& seq, std::size_t position, std::size_t limit) {
  if (position >= limit) {
    throw Error(ErrorCode::InvalidPosition, "position " + std::to_string(position) +
                                                " outside string of length " +
                                                std::to_string(seq.length()));
  }
}

std::ptrdiff_t find_event(const EventSequence& seq, Event e) {
  auto it = std::find(seq.events.begin(), seq.events.end(), e);
  return it == seq.events.end() ? -1 : it - seq.events.begin();
}

bool linked_at(const EventSequence& seq, std::size_t i, const LinkPredicate& linked) {
  const std::size_t j = (i + 1) % seq.length();
  return linked(seq[i], seq[j]);
}

}  // namespace

void apply_bait(EventSequence& seq, Event bait, std::size_t position, BaitCase kind,
                SequenceKind sequence_kind, int universe) {
  if (bait < 1 || bait > universe) {
    throw Error(ErrorCode::UnknownEvent, "bait " + std::to_string(bait) +
                                             " not in 1.." + std::to_string(universe));
  }
  auto& ev = seq.events;
  switch (kind) {
    case BaitCase::MissCatch: {
      // Insertion slot may equal the length for paths (append).
      check_position(seq, position,
                     sequence_kind == SequenceKind::Path ? ev.size() + 1 : ev.size());
      const std::ptrdiff_t old = find_event(seq, bait);
      ev.insert(ev.begin() + static_cast<std::ptrdiff_t>(position), bait);
      if (old >= 0) {
        const std::ptrdiff_t stale = old >= static_cast<std::ptrdiff_t>(position) ? old + 1 : old;
        ev.erase(ev.begin() + stale);
      }
      break;
    }
    case BaitCase::Catch: {
      check_position(seq, position, ev.size());
      const std::ptrdiff_t old = find_event(seq, bait);
      if (old >= 0) {
        std::swap(ev[static_cast<std::size_t>(old)], ev[position]);
      } else if (sequence_kind == SequenceKind::Path) {
        ev[position] = bait;
      } else {
        throw Error(ErrorCode::UnknownEvent,
                    "bait " + std::to_string(bait) + " missing from permutation");
      }
      break;
    }
    case BaitCase::FalseCatch: {
      check_position(seq, position, ev.size());
      const Event taken = ev[position];
      ev.erase(ev.begin() + static_cast<std::ptrdiff_t>(position));
      if (sequence_kind == SequenceKind::Permutation) ev.push_back(taken);
      break;
    }
  }
}

EventSequence baiting(const EventSequence& seq, Event bait, std::size_t position, BaitCase kind,
                      SequenceKind sequence_kind, int universe) {
  EventSequence out = seq;
  apply_bait(out, bait, position, kind, sequence_kind, universe);
  return out;
}

std::size_t change_of_position(IndexRange window, const LocalCost& local_cost) {
  if (window.length == 0) throw Error(ErrorCode::EmptyWindow, "no candidate positions");
  std::size_t best = window.begin;
  double best_cost = std::numeric_limits<double>::infinity();
  for (std::size_t p = window.begin; p < window.end(); ++p) {
    const double c = local_cost(p);
    if (c < best_cost) {
      best_cost = c;
      best = p;
    }
  }
  return best;
}

EventSequence attracting_prey_swarms(const EventSequence& seq, std::size_t bait_position,
                                     std::size_t shift, IndexRange segment) {
  if (segment.end() > seq.length()) {
    throw Error(ErrorCode::InvalidPosition, "segment exceeds string");
  }
  if (!segment.contains(bait_position)) {
    throw Error(ErrorCode::InvalidPosition, "bait position outside rotated segment");
  }
  if (shift < 1 || shift >= segment.length) {
    throw Error(ErrorCode::ShiftOutOfRange, "shift " + std::to_string(shift) +
                                                " for segment of length " +
                                                std::to_string(segment.length));
  }
  EventSequence out = seq;
  auto first = out.events.begin() + static_cast<std::ptrdiff_t>(segment.begin);
  auto last = first + static_cast<std::ptrdiff_t>(segment.length);
  std::rotate(first, last - static_cast<std::ptrdiff_t>(shift), last);
  return out;
}

double secondary_fitness_linkage(const EventSequence& seq, const LinkPredicate& linked,
                                 Closure closure) {
  const std::size_t n = seq.length();
  if (n == 0) return 0.0;
  const std::size_t links = closure == Closure::Cyclic ? n : n - 1;
  std::vector<int> value(n, 0);
  for (std::size_t i = 0; i < links; ++i) {
    if (n > 1 && linked_at(seq, i, linked)) {
      ++value[i];
      ++value[(i + 1) % n];
    }
  }
  double sum = 0.0;
  for (int v : value) sum += v;
  return sum / static_cast<double>(n);
}

std::size_t secondary_fitness_segments(const EventSequence& seq, const LinkPredicate& linked,
                                       Closure closure) {
  const std::size_t n = seq.length();
  if (n == 0) return 0;
  if (n == 1) return 1;
  std::size_t breaks = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!linked_at(seq, i, linked)) ++breaks;
  }
  if (closure == Closure::Open) return breaks + 1;
  // On a cycle the closing link can join the first and last runs.
  if (!linked_at(seq, n - 1, linked)) ++breaks;
  return std::max<std::size_t>(breaks, 1);
}

bool is_permutation_of_1_to_n(const std::vector<Event>& events) {
  std::vector<char> seen(events.size() + 1, 0);
  for (Event e : events) {
    if (e < 1 || static_cast<std::size_t>(e) > events.size() || seen[e]) return false;
    seen[e] = 1;
  }
  return true;
}

}  // namespace ghosa
