#ifndef RWAP_BENCH_H_
#define RWAP_BENCH_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rwap/instance.h"

namespace rwap {

struct NamedInstance {
  std::string name;
  Instance instance;
};

struct BenchConfig {
  std::vector<std::string> methods{"da", "rs"};  // da | rs | exact | bnb
  std::vector<std::uint64_t> seeds{0};
  std::int64_t da_iterations = 20000;
  int da_replicas = 8;
  std::int64_t rs_budget = 7243;
  std::int64_t node_limit = 0;
  // Penalty for "da" is beta + offset; one set of da rows per offset.
  std::vector<std::int64_t> rho_offsets{100};
  int threads = 0;  // rows in flight; 0: resolve_threads()
};

struct BenchRow {
  std::string instance;
  std::string method;
  std::uint64_t seed = 0;
  std::optional<std::int64_t> rho;         // da only: beta + rho_offset
  std::optional<std::int64_t> rho_offset;
  std::int64_t granted = 0;
  std::int64_t links = 0;
  double links_per_granted = 0;
  std::int64_t objective = 0;
  bool feasible = false;
  bool repaired = false;
  std::int64_t work = 0;
  double wall_ms = 0;
  std::string error;  // non-empty when the row failed

  bool failed() const { return !error.empty(); }
};

struct BenchAggregate {
  std::string method;
  std::optional<std::int64_t> rho_offset;
  std::int64_t rows = 0;
  std::int64_t failures = 0;
  double mean_granted = 0;
  double mean_links_per_granted = 0;  // over rows with at least one grant
  double feasible_rate = 0;
  double mean_wall_ms = 0;
};

// One row per (instance, method, seed[, rho offset]) in that nesting order.
// Weights are alpha = 1 and the closed-form beta (beta = 1 when undefined).
// Row failures are recorded, not thrown.
std::vector<BenchRow> run_bench(const std::vector<NamedInstance>& instances,
                                const BenchConfig& config);

// Groups by (method, rho offset) in first-appearance order.
std::vector<BenchAggregate> aggregate(const std::vector<BenchRow>& rows);

inline constexpr const char* kBenchCsvVersion = "rwap-bench-rows v1";
inline constexpr const char* kAggregateCsvVersion = "rwap-bench-aggregate v1";

void write_rows_csv(std::ostream& out, const std::vector<BenchRow>& rows);
void write_aggregate_csv(std::ostream& out, const std::vector<BenchAggregate>& aggregates);

}  // namespace rwap

#endif  // RWAP_BENCH_H_
