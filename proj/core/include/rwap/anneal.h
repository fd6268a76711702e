#ifndef RWAP_ANNEAL_H_
#define RWAP_ANNEAL_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "rwap/conflicts.h"
#include "rwap/instance.h"
#include "rwap/qubo.h"
#include "rwap/solve_report.h"
#include "rwap/weights.h"

namespace rwap {

enum class AnnealMode {
  kSingle,     // independent chains, temperature falls geometrically per iteration
  kTempering,  // fixed geometric ladder across replicas with state exchange
};

struct AnnealStep {
  int replica = 0;
  std::int64_t iteration = 0;  // 0-based
  bool accepted = false;
  double offset = 0;           // E_off after this iteration's update
  std::int64_t energy = 0;     // current energy after this iteration
};

struct AnnealConfig {
  std::int64_t iterations = 20000;  // per replica
  int replicas = 8;
  double t_min = 1.0;
  double t_max = 100.0;
  double offset_increment = 1.0;
  std::int64_t exchange_interval = 100;
  std::uint64_t seed = 0;
  AnnealMode mode = AnnealMode::kTempering;
  int threads = 0;  // 0: resolve_threads()
  // Full energy re-evaluation every this many iterations (0 disables).
#ifdef NDEBUG
  std::int64_t check_interval = 0;
#else
  std::int64_t check_interval = 1024;
#endif
  // Called after every iteration of every replica. Forces one worker thread.
  std::function<void(const AnnealStep&)> observer;

  // Throws ConfigError on t_min <= 0, t_min > t_max, replicas < 1,
  // exchange_interval < 1, iterations < 0 or a negative offset increment.
  void validate() const;
};

// 8 replicas, t_max = rho, t_min = 1, offset increment max(1, rho/100),
// exchange every 100 iterations.
AnnealConfig default_anneal_config(std::int64_t rho, std::uint64_t seed = 0,
                                   std::int64_t iterations = 20000);

struct TracePoint {
  std::int64_t iteration = 0;
  std::int64_t best_energy = 0;
  friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

struct AnnealResult {
  std::vector<std::uint8_t> best_bits;
  std::int64_t best_energy = 0;
  std::vector<TracePoint> trace;       // one point per improvement of the global best
  std::int64_t accepted_flips = 0;
  std::int64_t offset_activations = 0; // iterations that ended with no accepted flip
  std::int64_t exchanges_attempted = 0;
  std::int64_t exchanges_accepted = 0;

  friend bool operator==(const AnnealResult&, const AnnealResult&) = default;
};

// Parallel-trial annealing from the all-zero state. Deterministic in
// (qubo, config) for any thread count.
AnnealResult anneal(const QuboModel& qubo, const AnnealConfig& config);

// Anneals the QUBO of `instance`, decodes, verifies, and greedily clears
// violating bits (smallest objective increase first) if the raw state is
// infeasible. `trace`, if given, receives the annealer's best-energy trace.
SolveReport solve_rwap_da(const Instance& instance, const ConflictSets& sets,
                          const Weights& weights, std::int64_t rho, const AnnealConfig& config,
                          std::vector<TracePoint>* trace = nullptr);
SolveReport solve_rwap_da(const Instance& instance, const Weights& weights, std::int64_t rho,
                          const AnnealConfig& config);

// Clears bits of `solution` until it is feasible; returns the number cleared.
int repair_solution(const Instance& instance, const ConflictSets& sets, const Weights& weights,
                    Solution& solution);

}  // namespace rwap

#endif  // RWAP_ANNEAL_H_
