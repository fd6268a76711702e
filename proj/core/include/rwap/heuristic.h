#ifndef RWAP_HEURISTIC_H_
#define RWAP_HEURISTIC_H_

#include <cstdint>

#include "rwap/conflicts.h"
#include "rwap/instance.h"
#include "rwap/solve_report.h"
#include "rwap/weights.h"

namespace rwap {

inline constexpr std::int64_t kDefaultPermutationBudget = 7243;

struct RsConfig {
  std::int64_t permutation_budget = kDefaultPermutationBudget;
  std::uint64_t seed = 0;
  int threads = 0;  // 0: resolve_threads()
  // Also try different wavelengths for working and protection once no
  // common wavelength fits.
  bool mixed_wavelengths = true;
  // Benchmarking only: stop after this many seconds (0 = no limit). Results
  // then depend on machine speed.
  double time_limit_seconds = 0;

  // Throws ConfigError when the budget is below 1.
  void validate() const;
};

// Random-permutation greedy. Each permutation grants requests in order,
// taking the shortest link-disjoint (working path, protection path) pair and
// the first free wavelength(s); the permutation granting the most requests
// wins (ties: fewer links, then earlier permutation). `weights` only affect
// the reported objective.
SolveReport rs_heur(const Instance& instance, const ConflictSets& sets, const RsConfig& config,
                    const Weights& weights = {});

}  // namespace rwap

#endif  // RWAP_HEURISTIC_H_
