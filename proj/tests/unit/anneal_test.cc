#include "rwap/anneal.h"

#include <gtest/gtest.h>

#include "fixtures.h"
#include "oracles.h"
#include "rwap/error.h"
#include "rwap/oracle.h"
#include "rwap/verify.h"

namespace rwap {
namespace {

QuboModel tight_qubo() {
  const Instance inst = tight_example(2, 3);
  return build_qubo(inst, build_conflict_sets(inst), explicit_weights(inst, 1, 6), 7);
}

AnnealConfig small_config(std::uint64_t seed, std::int64_t iterations = 500) {
  AnnealConfig c = default_anneal_config(7, seed, iterations);
  c.check_interval = 64;
  return c;
}

TEST(AnnealTest, TightExampleReachesOptimum) {
  const QuboModel q = tight_qubo();
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const AnnealResult r = anneal(q, small_config(seed));
    EXPECT_EQ(r.best_energy, -1);
    EXPECT_EQ(r.best_bits, (std::vector<std::uint8_t>{1, 1}));
  }
}

TEST(AnnealTest, ZeroAndEmptyModels) {
  const QuboModel zero(4, {0, 0, 0, 0}, {}, 0);
  const AnnealResult r = anneal(zero, small_config(1, 50));
  EXPECT_EQ(r.best_energy, 0);
  ASSERT_FALSE(r.trace.empty());
  EXPECT_EQ(r.trace.front().best_energy, 0);

  const QuboModel empty(0, {}, {}, 5);
  const AnnealResult e = anneal(empty, small_config(1));
  EXPECT_TRUE(e.best_bits.empty());
  EXPECT_EQ(e.best_energy, 5);
}

TEST(AnnealTest, BestEnergyMatchesBitsAndTraceIsMonotone) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance inst = testing::random_grantable_instance(seed);
    const Weights w = beta_base(inst);
    const QuboModel q = build_qubo(inst, build_conflict_sets(inst), w, default_rho(w));
    AnnealConfig c = default_anneal_config(default_rho(w), seed, 2000);
    c.check_interval = 100;
    const AnnealResult r = anneal(q, c);
    EXPECT_EQ(q.energy(r.best_bits), r.best_energy);
    for (std::size_t i = 1; i < r.trace.size(); ++i) {
      EXPECT_LT(r.trace[i].best_energy, r.trace[i - 1].best_energy);
      EXPECT_GT(r.trace[i].iteration, r.trace[i - 1].iteration);
    }
    EXPECT_EQ(r.trace.back().best_energy, r.best_energy);
  }
}

TEST(AnnealTest, MatchesBruteForceOnSmallInstances) {
  int hits = 0, runs = 0;
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Instance inst = testing::random_grantable_instance(seed);
    const Weights w = beta_base(inst);
    const std::int64_t rho = default_rho(w);
    const QuboModel q = build_qubo(inst, build_conflict_sets(inst), w, rho);
    const QuboMinimum best = brute_force_qubo(q);
    for (std::uint64_t s = 0; s < 3; ++s) {
      ++runs;
      hits += anneal(q, default_anneal_config(rho, s, 5000)).best_energy == best.energy;
    }
  }
  EXPECT_GE(hits, runs * 9 / 10);
}

TEST(AnnealTest, DeterministicAcrossThreadCounts) {
  testing::RandomInstanceOptions opt;
  opt.max_variables = 24;
  const Instance inst = testing::random_grantable_instance(5, opt);
  const Weights w = beta_base(inst);
  const QuboModel q = build_qubo(inst, build_conflict_sets(inst), w, default_rho(w));
  for (AnnealMode mode : {AnnealMode::kTempering, AnnealMode::kSingle}) {
    AnnealConfig c = default_anneal_config(default_rho(w), 42, 3000);
    c.mode = mode;
    c.threads = 1;
    const AnnealResult one = anneal(q, c);
    c.threads = 4;
    const AnnealResult four = anneal(q, c);
    EXPECT_EQ(one, four);
    EXPECT_EQ(anneal(q, c), four);
    c.seed = 43;
    (void)anneal(q, c);  // different seed runs fine
  }
}

TEST(AnnealTest, OffsetResetsOnAcceptAndGrowsOtherwise) {
  const Instance inst = testing::two_request_example();
  const Weights w = beta_base(inst);
  const std::int64_t rho = default_rho(w);
  const QuboModel q = build_qubo(inst, build_conflict_sets(inst), w, rho);
  AnnealConfig c = default_anneal_config(rho, 3, 3000);
  c.mode = AnnealMode::kSingle;  // no exchanges, which also reset the offset
  c.replicas = 2;
  c.t_max = 2;
  c.offset_increment = 0.5;
  std::vector<double> last(2, 0.0);
  std::vector<bool> last_accepted(2, true);
  int stalls = 0;
  c.observer = [&](const AnnealStep& st) {
    if (st.accepted) {
      EXPECT_EQ(st.offset, 0.0);
    } else {
      ++stalls;
      const double before = last_accepted[st.replica] ? 0.0 : last[st.replica];
      EXPECT_GT(st.offset, before);
      EXPECT_DOUBLE_EQ(st.offset, before + 0.5);
    }
    last[st.replica] = st.offset;
    last_accepted[st.replica] = st.accepted;
  };
  const AnnealResult r = anneal(q, c);
  EXPECT_GT(stalls, 0);
  EXPECT_EQ(r.offset_activations, stalls);
}

TEST(AnnealTest, IncrementalEnergyMatchesEveryIteration) {
  const Instance inst = testing::random_grantable_instance(11);
  const Weights w = beta_base(inst);
  const QuboModel q = build_qubo(inst, build_conflict_sets(inst), w, default_rho(w));
  AnnealConfig c = default_anneal_config(default_rho(w), 1, 1000);
  c.observer = [&](const AnnealStep&) {};
  c.check_interval = 1;
  EXPECT_NO_THROW(anneal(q, c));
}

TEST(AnnealTest, TemperingExchangesHappen) {
  const Instance inst = testing::two_request_example();
  const Weights w = beta_base(inst);
  const QuboModel q = build_qubo(inst, build_conflict_sets(inst), w, default_rho(w));
  AnnealConfig c = default_anneal_config(default_rho(w), 9, 5000);
  const AnnealResult r = anneal(q, c);
  EXPECT_GT(r.exchanges_attempted, 0);
  EXPECT_GT(r.exchanges_accepted, 0);
  EXPECT_LE(r.exchanges_accepted, r.exchanges_attempted);
}

TEST(AnnealConfigTest, DefaultsAndValidation) {
  const AnnealConfig c = default_anneal_config(1111, 5, 100);
  EXPECT_EQ(c.replicas, 8);
  EXPECT_DOUBLE_EQ(c.t_max, 1111);
  EXPECT_DOUBLE_EQ(c.t_min, 1);
  EXPECT_DOUBLE_EQ(c.offset_increment, 11.11);
  EXPECT_EQ(c.exchange_interval, 100);
  EXPECT_DOUBLE_EQ(default_anneal_config(50).offset_increment, 1.0);

  const QuboModel q = tight_qubo();
  AnnealConfig bad = c;
  bad.t_min = 2000;
  EXPECT_THROW(anneal(q, bad), ConfigError);
  bad = c;
  bad.replicas = 0;
  EXPECT_THROW(anneal(q, bad), ConfigError);
  bad = c;
  bad.exchange_interval = 0;
  EXPECT_THROW(anneal(q, bad), ConfigError);
}

TEST(SolveDaTest, TwoRequestExample) {
  const Instance inst = testing::two_request_example();
  const Weights w = beta_base(inst);
  const SolveReport r = solve_rwap_da(inst, w, default_rho(w), default_anneal_config(default_rho(w), 0, 5000));
  EXPECT_EQ(r.granted.size(), 2u);
  EXPECT_EQ(r.f_alpha, 8);
  EXPECT_TRUE(r.feasible);
  EXPECT_FALSE(r.repaired);
  EXPECT_EQ(r.objective, -14);
  EXPECT_EQ(r.rho, default_rho(w));
}

TEST(SolveDaTest, TightExampleAndNothingGrantable) {
  const Instance tight = tight_example(2, 3);
  const Weights w = explicit_weights(tight, 1, 6);
  EXPECT_EQ(solve_rwap_da(tight, w, 7, small_config(0)).granted.size(), 1u);

  Network net(2, {{0, 1}});
  Request r;
  r.source = 0;
  r.destination = 1;
  r.working = {{{0}, 0}};
  const Instance none(net, 1, {r});
  const Weights w1 = explicit_weights(none, 1, 1);
  const SolveReport rep = solve_rwap_da(none, w1, 101, small_config(0));
  EXPECT_TRUE(rep.granted.empty());
  EXPECT_TRUE(rep.feasible);
}

TEST(RepairTest, ClearsViolationsGreedily) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Instance inst = testing::random_instance(seed);
    const ConflictSets sets = build_conflict_sets(inst);
    Solution s = testing::random_bits(seed, inst.variable_count(), 0.6);
    const Solution before = s;
    const int cleared = repair_solution(inst, sets, explicit_weights(inst, 1, 10), s);
    EXPECT_TRUE(testing::naive_feasible(inst, s));
    for (int v = 0; v < inst.variable_count(); ++v) EXPECT_LE(s.bits[v], before.bits[v]);
    EXPECT_EQ(cleared == 0, testing::naive_feasible(inst, before));
  }
}

TEST(SolveDaTest, LowPenaltyTriggersRepair) {
  // With rho = 1 the cheapest state takes many conflicting lightpaths.
  bool saw_repair = false;
  for (std::uint64_t seed = 0; seed < 30 && !saw_repair; ++seed) {
    const Instance inst = testing::random_grantable_instance(seed);
    const Weights w = beta_base(inst);
    const SolveReport r = solve_rwap_da(inst, w, 1, default_anneal_config(1, seed, 500));
    EXPECT_TRUE(r.feasible);
    saw_repair = r.repaired;
  }
  EXPECT_TRUE(saw_repair);
}

}  // namespace
}  // namespace rwap
