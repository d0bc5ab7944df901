#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "ghosa/error.hpp"
#include "ghosa/operators.hpp"
#include "ghosa/problems/tsp.hpp"

namespace ghosa {
namespace {

// Letters A..I map to events 1..9; F is 6.
enum : Event { A = 1, B, C, D, E, F, G, H, I };

EventSequence seq(std::vector<Event> v) { return EventSequence{std::move(v)}; }

template <class Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::InvalidConfig;
}

TEST(Baiting, InsertReplaceRemoveOnAPath) {
  const auto s = seq({A, B, C, D, E, G, H, I});
  EXPECT_EQ(baiting(s, F, 5, BaitCase::MissCatch, SequenceKind::Path, 9),
            seq({A, B, C, D, E, F, G, H, I}));
  EXPECT_EQ(baiting(s, F, 5, BaitCase::Catch, SequenceKind::Path, 9),
            seq({A, B, C, D, E, F, H, I}));
  EXPECT_EQ(baiting(s, F, 5, BaitCase::FalseCatch, SequenceKind::Path, 9),
            seq({A, B, C, D, E, H, I}));
}

TEST(Baiting, CatchSwapsInPermutation) {
  EXPECT_EQ(baiting(seq({1, 2, 3}), 3, 0, BaitCase::Catch, SequenceKind::Permutation, 3),
            seq({3, 2, 1}));
}

TEST(Baiting, FalseCatchMovesToEnd) {
  EXPECT_EQ(baiting(seq({1, 2, 3, 4}), 2, 1, BaitCase::FalseCatch, SequenceKind::Permutation, 4),
            seq({1, 3, 4, 2}));
}

TEST(Baiting, MissCatchDropsTheOldCopy) {
  EXPECT_EQ(baiting(seq({1, 2, 3, 4}), 4, 1, BaitCase::MissCatch, SequenceKind::Permutation, 4),
            seq({1, 4, 2, 3}));
  EXPECT_EQ(baiting(seq({1, 2, 3, 4}), 1, 3, BaitCase::MissCatch, SequenceKind::Permutation, 4),
            seq({2, 3, 1, 4}));
}

TEST(Baiting, PathAppendAndOverwrite) {
  EXPECT_EQ(baiting(seq({1, 2}), 5, 2, BaitCase::MissCatch, SequenceKind::Path, 5),
            seq({1, 2, 5}));
  EXPECT_EQ(baiting(seq({1, 2, 3}), 5, 1, BaitCase::Catch, SequenceKind::Path, 5),
            seq({1, 5, 3}));
}

TEST(Baiting, Errors) {
  EXPECT_EQ(code_of([] { baiting(seq({1, 2, 3}), 1, 3, BaitCase::Catch, SequenceKind::Permutation, 3); }),
            ErrorCode::InvalidPosition);
  EXPECT_EQ(code_of([] { baiting(seq({1, 2, 3}), 4, 0, BaitCase::Catch, SequenceKind::Permutation, 3); }),
            ErrorCode::UnknownEvent);
  EXPECT_EQ(code_of([] { baiting(seq({1, 2, 3}), 0, 0, BaitCase::MissCatch, SequenceKind::Path, 3); }),
            ErrorCode::UnknownEvent);
}

TEST(ChangeOfPosition, UnitSquareInsertion) {
  problems::TspInstance sq;
  sq.n = 4;
  sq.metric = problems::TspMetric::Euclidean;
  sq.coords = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const problems::DistanceMatrix dist(sq);
  const auto partial = seq({1, 2, 4});
  const Event bait = 3;

  const auto chosen = change_of_position({0, 3}, [&](std::size_t slot) {
    return problems::tsp_insertion_cost(dist, partial, slot, bait);
  });

  // Independent check: score every slot of the closed partial tour directly
  // from coordinates.
  auto d = [&](Event a, Event b) {
    const auto& p = sq.coords[a - 1];
    const auto& q = sq.coords[b - 1];
    return std::hypot(p[0] - q[0], p[1] - q[1]);
  };
  std::size_t expect = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t slot = 0; slot < 3; ++slot) {
    const Event prev = partial[(slot + 2) % 3];
    const Event next = partial[slot];
    const double cost = d(prev, bait) + d(bait, next) - d(prev, next);
    if (cost < best) best = cost, expect = slot;
  }
  EXPECT_EQ(chosen, expect);
  EXPECT_EQ(chosen, 2u);
}

TEST(ChangeOfPosition, SingleCandidateAndTies) {
  EXPECT_EQ(change_of_position({7, 1}, [](std::size_t) { return 42.0; }), 7u);
  EXPECT_EQ(change_of_position({3, 5}, [](std::size_t) { return 1.0; }), 3u);
  EXPECT_EQ(code_of([] { change_of_position({0, 0}, [](std::size_t) { return 0.0; }); }),
            ErrorCode::EmptyWindow);
}

TEST(AttractingPreySwarms, ThreeTurnsBringBUnderTheBait) {
  const auto s = seq({A, B, C, D, E, G, H, I});
  const auto r = attracting_prey_swarms(s, 4, 3, {0, 8});
  EXPECT_EQ(r[4], B);
  EXPECT_EQ(r, seq({G, H, I, A, B, C, D, E}));
}

TEST(AttractingPreySwarms, ShiftBoundsAndSubSegments) {
  EXPECT_EQ(attracting_prey_swarms(seq({1, 2, 3}), 0, 1, {0, 3}), seq({3, 1, 2}));
  EXPECT_EQ(attracting_prey_swarms(seq({1, 2, 3, 4, 5}), 2, 1, {1, 3}), seq({1, 4, 2, 3, 5}));
  EXPECT_EQ(code_of([] { attracting_prey_swarms(seq({1, 2, 3}), 0, 3, {0, 3}); }),
            ErrorCode::ShiftOutOfRange);
  EXPECT_EQ(code_of([] { attracting_prey_swarms(seq({1, 2, 3}), 0, 0, {0, 3}); }),
            ErrorCode::ShiftOutOfRange);
  EXPECT_EQ(code_of([] { attracting_prey_swarms(seq({1, 2, 3}), 0, 1, {1, 2}); }),
            ErrorCode::InvalidPosition);
}

TEST(SecondaryFitness, Linkage) {
  const LinkPredicate all = [](Event, Event) { return true; };
  const LinkPredicate none = [](Event, Event) { return false; };
  // Events 1-2-3 form a chain; 4, 5, 6 link to nothing.
  const LinkPredicate chain = [](Event a, Event b) {
    return (a == 1 && b == 2) || (a == 2 && b == 3);
  };
  EXPECT_DOUBLE_EQ(secondary_fitness_linkage(seq({1, 2, 3, 4, 5}), all, Closure::Cyclic), 2.0);
  EXPECT_DOUBLE_EQ(secondary_fitness_linkage(seq({1, 2, 3, 4, 5}), none), 0.0);
  EXPECT_DOUBLE_EQ(secondary_fitness_linkage(seq({1, 2, 3, 4, 5, 6}), chain), 4.0 / 6.0);
}

TEST(SecondaryFitness, SegmentCount) {
  const LinkPredicate all = [](Event, Event) { return true; };
  const LinkPredicate none = [](Event, Event) { return false; };
  const LinkPredicate broken = [](Event a, Event b) { return !(a == 3 && b == 4); };
  EXPECT_EQ(secondary_fitness_segments(seq({1, 2, 3, 4, 5}), all), 1u);
  EXPECT_EQ(secondary_fitness_segments(seq({1, 2, 3, 4, 5}), none), 5u);
  EXPECT_EQ(secondary_fitness_segments(seq({1, 2, 3, 4, 5}), broken), 2u);
}

}  // namespace
}  // namespace ghosa
