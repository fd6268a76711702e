#ifndef RWAP_SOLVE_REPORT_H_
#define RWAP_SOLVE_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rwap/conflicts.h"
#include "rwap/instance.h"
#include "rwap/weights.h"

namespace rwap {

enum class SolveStatus {
  kOptimal,         // proven optimal
  kBudgetExhausted, // exact search stopped early; lower_bound is valid
  kHeuristic,       // no optimality claim
};

std::string to_string(SolveStatus s);

struct SolveReport {
  std::string method;
  Solution solution;
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  std::int64_t f_alpha = 0;
  std::int64_t f_beta = 0;
  std::int64_t objective = 0;
  bool feasible = false;
  bool repaired = false;
  SolveStatus status = SolveStatus::kHeuristic;
  std::optional<std::int64_t> lower_bound;
  std::optional<std::int64_t> energy;  // QUBO energy of the raw annealer state
  std::optional<std::int64_t> rho;
  std::int64_t work = 0;  // iterations, permutations, nodes, or vectors
  std::vector<int> granted;  // request ids with a working lightpath
  std::vector<std::string> notes;
};

// Fills f_alpha, f_beta, objective and feasibility for `solution`.
SolveReport make_report(std::string method, const Instance& instance, const ConflictSets& sets,
                        Solution solution, const Weights& weights);

}  // namespace rwap

#endif  // RWAP_SOLVE_REPORT_H_
