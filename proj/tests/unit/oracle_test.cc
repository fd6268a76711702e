#include "rwap/oracle.h"

#include <gtest/gtest.h>

#include "fixtures.h"
#include "oracles.h"
#include "rwap/error.h"

namespace rwap {
namespace {

TEST(BruteForceIpTest, TwoRequestExample) {
  const Instance inst = testing::two_request_example();
  const SolveReport r = brute_force_ip(inst, build_conflict_sets(inst), beta_base(inst));
  EXPECT_EQ(r.method, "exact");
  EXPECT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_EQ(r.solution.to_string(), "1001110");
  EXPECT_EQ(r.f_alpha, 8);
  EXPECT_EQ(r.objective, -14);
  EXPECT_EQ(r.work, 128);
}

TEST(BruteForceIpTest, TightExampleAndEmpty) {
  const Instance tight = tight_example(2, 3);
  const SolveReport r = brute_force_ip(tight, build_conflict_sets(tight), explicit_weights(tight, 1, 6));
  EXPECT_EQ(r.objective, -1);
  EXPECT_EQ(r.solution.to_string(), "11");

  const Instance empty(Network(1, {}), 1, {});
  const SolveReport e = brute_force_ip(empty, build_conflict_sets(empty), explicit_weights(empty, 1, 1));
  EXPECT_EQ(e.objective, 0);
  EXPECT_EQ(e.solution.size(), 0);
}

TEST(BruteForceIpTest, CapIsEnforced) {
  const Instance inst = testing::two_request_example();
  EXPECT_THROW(brute_force_ip(inst, build_conflict_sets(inst), beta_base(inst), 6),
               EnumerationLimitError);
}

TEST(BruteForceIpTest, AgreesWithNaiveOptimum) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Instance inst = testing::random_instance(seed);
    const Weights w = explicit_weights(inst, 1 + seed % 3, 1 + seed % 17);
    const SolveReport r = brute_force_ip(inst, build_conflict_sets(inst), w);
    EXPECT_EQ(r.objective, testing::naive_optimum(testing::all_feasible(inst), w.alpha, w.beta)) << seed;
    EXPECT_TRUE(testing::naive_feasible(inst, r.solution));
  }
}

TEST(BruteForceQuboTest, TightExample) {
  const Instance tight = tight_example(2, 3);
  const QuboModel q = build_qubo(tight, build_conflict_sets(tight), explicit_weights(tight, 1, 6), 7);
  const QuboMinimum m = brute_force_qubo(q);
  EXPECT_EQ(m.energy, -1);
  EXPECT_EQ(m.bits, (std::vector<std::uint8_t>{1, 1}));
}

TEST(BruteForceQuboTest, ZeroModelPicksAllZero) {
  const QuboModel q(3, {0, 0, 0}, {}, 4);
  const QuboMinimum m = brute_force_qubo(q);
  EXPECT_EQ(m.energy, 4);
  EXPECT_EQ(m.bits, (std::vector<std::uint8_t>{0, 0, 0}));
  EXPECT_THROW(brute_force_qubo(QuboModel(30, std::vector<std::int64_t>(30, 0), {}, 0)),
               EnumerationLimitError);
}

TEST(BruteForceQuboTest, MatchesIpOptimumAtSafePenalty) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Instance inst = testing::random_instance(seed);
    const ConflictSets sets = build_conflict_sets(inst);
    const Weights w = explicit_weights(inst, 1, 1 + seed % 9);
    const std::int64_t rho = rho_base(inst, w).rho;
    const QuboMinimum m = brute_force_qubo(build_qubo(inst, sets, w, rho));
    const SolveReport ip = brute_force_ip(inst, sets, w);
    EXPECT_EQ(m.energy, ip.objective) << seed;
    Solution s;
    s.bits = m.bits;
    EXPECT_TRUE(testing::naive_feasible(inst, s)) << seed;
  }
}

TEST(BranchAndBoundTest, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Instance inst = testing::random_instance(seed);
    const Weights w = explicit_weights(inst, 1 + seed % 2, 1 + seed % 13);
    const SolveReport exact = brute_force_ip(inst, build_conflict_sets(inst), w);
    const SolveReport bnb = branch_and_bound(inst, build_strong_groups(inst), w);
    EXPECT_EQ(bnb.method, "bnb");
    EXPECT_EQ(bnb.status, SolveStatus::kOptimal);
    EXPECT_EQ(bnb.objective, exact.objective) << seed;
    EXPECT_TRUE(testing::naive_feasible(inst, bnb.solution)) << seed;
    ASSERT_TRUE(bnb.lower_bound.has_value());
    EXPECT_EQ(*bnb.lower_bound, bnb.objective);
  }
}

TEST(BranchAndBoundTest, TightExampleIsSmall) {
  const Instance tight = tight_example(2, 3);
  const SolveReport r = branch_and_bound(tight, build_strong_groups(tight), explicit_weights(tight, 1, 6));
  EXPECT_EQ(r.objective, -1);
  EXPECT_LE(r.work, 5);
}

TEST(BranchAndBoundTest, ConflictFreeInstanceGrantsAll) {
  // Each request gets private links: one working and one protection link.
  std::vector<Link> links;
  std::vector<Request> reqs;
  for (int r = 0; r < 6; ++r) {
    const int s = 2 * r, t = 2 * r + 1;
    links.push_back({s, t});
    links.push_back({s, t});
    Request q;
    q.id = r;
    q.source = s;
    q.destination = t;
    q.working = {{{2 * r}, 0}};
    q.protection = {{{2 * r + 1}, 0}};
    reqs.push_back(q);
  }
  const Instance inst(Network(12, links), 1, reqs);
  const SolveReport r = branch_and_bound(inst, build_strong_groups(inst), beta_base(inst));
  EXPECT_EQ(r.granted.size(), 6u);
  EXPECT_EQ(r.f_alpha, 12);
}

TEST(BranchAndBoundTest, NodeLimitGivesValidBound) {
  testing::RandomInstanceOptions opt;
  opt.max_requests = 6;
  opt.max_variables = 40;
  int aborted = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance inst = testing::random_instance(seed, opt);
    const Weights w = explicit_weights(inst, 1, 30);
    const StrongGroups g = build_strong_groups(inst);
    const SolveReport full = branch_and_bound(inst, g, w);
    const SolveReport cut = branch_and_bound(inst, g, w, 3);
    ASSERT_TRUE(cut.lower_bound.has_value());
    EXPECT_LE(*cut.lower_bound, full.objective) << seed;
    EXPECT_GE(cut.objective, full.objective);
    EXPECT_TRUE(cut.feasible);
    aborted += cut.status == SolveStatus::kBudgetExhausted;
  }
  EXPECT_GT(aborted, 0);
}

}  // namespace
}  // namespace rwap
