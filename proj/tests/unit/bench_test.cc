#include "rwap/bench.h"

#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.h"

namespace rwap {
namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

BenchConfig quick() {
  BenchConfig c;
  c.da_iterations = 3000;
  c.rs_budget = 20;
  c.threads = 2;
  return c;
}

TEST(BenchTest, AllMethodsOnTwoRequestExample) {
  BenchConfig c = quick();
  c.methods = {"da", "rs", "exact", "bnb"};
  c.seeds = {0, 1};
  const auto rows = run_bench({{"example", testing::two_request_example()}}, c);
  ASSERT_EQ(rows.size(), 8u);
  for (const BenchRow& r : rows) {
    EXPECT_FALSE(r.failed()) << r.error;
    EXPECT_EQ(r.instance, "example");
    EXPECT_EQ(r.granted, 2) << r.method;
    EXPECT_EQ(r.links, 8) << r.method;
    EXPECT_DOUBLE_EQ(r.links_per_granted, 4.0);
    EXPECT_TRUE(r.feasible);
    EXPECT_EQ(r.rho.has_value(), r.method == "da");
    if (r.method == "da") EXPECT_EQ(*r.rho, 11 + 100);
  }
  const auto agg = aggregate(rows);
  ASSERT_EQ(agg.size(), 4u);
  for (const auto& a : agg) {
    EXPECT_EQ(a.rows, 2);
    EXPECT_EQ(a.failures, 0);
    EXPECT_DOUBLE_EQ(a.mean_granted, 2.0);
    EXPECT_DOUBLE_EQ(a.feasible_rate, 1.0);
  }
}

TEST(BenchTest, EmptyInstanceListWritesHeaderOnly) {
  const auto rows = run_bench({}, quick());
  EXPECT_TRUE(rows.empty());
  std::ostringstream out;
  write_rows_csv(out, rows);
  const auto ls = lines(out.str());
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_EQ(ls[0], std::string("# ") + kBenchCsvVersion);
  std::ostringstream agg;
  write_aggregate_csv(agg, aggregate(rows));
  EXPECT_EQ(lines(agg.str()).size(), 2u);
}

TEST(BenchTest, PenaltySweepGivesOneAggregatePerOffset) {
  BenchConfig c = quick();
  c.methods = {"da"};
  c.rho_offsets = {1, 10, 100};
  c.seeds = {0, 1, 2};
  const auto rows = run_bench({{"a", testing::two_request_example()}, {"b", tight_example(2, 3)}}, c);
  EXPECT_EQ(rows.size(), 18u);
  const auto agg = aggregate(rows);
  ASSERT_EQ(agg.size(), 3u);
  for (const auto& a : agg) {
    EXPECT_EQ(a.method, "da");
    EXPECT_EQ(a.rows, 6);
    ASSERT_TRUE(a.rho_offset.has_value());
  }
  std::ostringstream out;
  write_rows_csv(out, rows);
  EXPECT_EQ(lines(out.str()).size(), 20u);
}

TEST(BenchTest, FailedRowsAreRecorded) {
  BenchConfig c = quick();
  c.methods = {"exact", "nonsense"};
  testing::RandomInstanceOptions opt;
  opt.max_variables = 60;
  opt.max_requests = 12;
  opt.min_nodes = 8;
  opt.max_nodes = 10;
  // Large enough that exhaustive enumeration refuses it.
  Instance big = testing::random_instance(1, opt);
  for (std::uint64_t s = 2; big.variable_count() <= 24; ++s) big = testing::random_instance(s, opt);
  const auto rows = run_bench({{"big", big}}, c);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_TRUE(rows[0].failed());
  EXPECT_TRUE(rows[1].failed());
  const auto agg = aggregate(rows);
  for (const auto& a : agg) EXPECT_EQ(a.failures, 1);
  std::ostringstream out;
  write_rows_csv(out, rows);
  EXPECT_NE(out.str().find("nonsense"), std::string::npos);
}

}  // namespace
}  // namespace rwap
