#pragma once

// The three heron behaviours that act on a solution string, plus the two
// partial-solution ("secondary") fitness measures.

#include <cstddef>
#include <functional>

#include "ghosa/types.hpp"

namespace ghosa {

enum class BaitCase {
  MissCatch,   // bait settles at the position; the excess copy is removed
  Catch,       // bait replaces the element at the position
  FalseCatch,  // element at the position is taken without using the bait
};

enum class SecondaryMethod {
  NodeLinkage,   // mean node value in [0,2], higher is better
  SegmentCount,  // number of linked runs, lower is better
};

enum class Closure { Open, Cyclic };

using LinkPredicate = std::function<bool(Event, Event)>;
using LocalCost = std::function<double(std::size_t position)>;

// Applies one baiting outcome in place.
//
// Permutation strings keep every event exactly once:
//   MissCatch  inserts `bait` at `position` and deletes its previous copy,
//   Catch      swaps the element at `position` with `bait`'s current slot,
//   FalseCatch moves the element at `position` to the end of the string.
// Path strings have variable length: MissCatch inserts (deleting a previous
// copy if there is one), Catch overwrites (or swaps if `bait` is already on the
// path) and FalseCatch removes the element.
//
// `universe` is the number of events; valid baits are 1..universe.
void apply_bait(EventSequence& seq, Event bait, std::size_t position, BaitCase kind,
                SequenceKind sequence_kind, int universe);

// Value-returning form of apply_bait.
EventSequence baiting(const EventSequence& seq, Event bait, std::size_t position,
                      BaitCase kind, SequenceKind sequence_kind, int universe);

// Local search over `window`: the position with the smallest local cost, ties
// to the lowest index.
std::size_t change_of_position(IndexRange window, const LocalCost& local_cost);

// Cyclically rotates `segment` right by `shift` places so that a different
// event comes to rest under `bait_position`. Requires 1 <= shift < length.
EventSequence attracting_prey_swarms(const EventSequence& seq, std::size_t bait_position,
                                     std::size_t shift, IndexRange segment);

// Mean node value: each node scores 1 per linked side.
double secondary_fitness_linkage(const EventSequence& seq, const LinkPredicate& linked,
                                 Closure closure = Closure::Open);

// Number of maximal linked runs.
std::size_t secondary_fitness_segments(const EventSequence& seq, const LinkPredicate& linked,
                                       Closure closure = Closure::Open);

}  // namespace ghosa
