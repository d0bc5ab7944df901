#include <gtest/gtest.h>

#include "properties.hpp"

namespace ghosa::testing {
namespace {

void expect_ok(const PropertyOutcome& o) {
  EXPECT_EQ(o.cases, kPropertyCases) << o.name;
  EXPECT_EQ(o.failures, 0u) << o.name << ": " << o.first_failure;
}

TEST(Properties, PermutationClosure) { expect_ok(permutation_closure(kPropertyCases, 11)); }
TEST(Properties, RotationInversion) { expect_ok(rotation_inversion(kPropertyCases, 12)); }
TEST(Properties, KnapsackOneCount) { expect_ok(knapsack_one_count(kPropertyCases, 13)); }
TEST(Properties, KnapsackFeasibility) { expect_ok(knapsack_feasibility(kPropertyCases, 14)); }
TEST(Properties, DBranchArithmetic) { expect_ok(d_branch_arithmetic(kPropertyCases, 15)); }
TEST(Properties, EpsPositivity) { expect_ok(eps_positivity(kPropertyCases, 16)); }
TEST(Properties, MonotoneTraces) { expect_ok(monotone_traces(kPropertyCases, 17)); }
TEST(Properties, ReplayDeterminism) {
  expect_ok(replay_determinism(kPropertyCases, 18, GHOSA_TEST_DATA_DIR "/ulysses16.tsp"));
}

}  // namespace
}  // namespace ghosa::testing
