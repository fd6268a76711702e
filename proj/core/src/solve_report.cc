#include "rwap/solve_report.h"

#include "rwap/verify.h"

namespace rwap {

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kBudgetExhausted: return "budget-exhausted";
    case SolveStatus::kHeuristic: return "heuristic";
  }
  return "?";
}

SolveReport make_report(std::string method, const Instance& instance, const ConflictSets& sets,
                        Solution solution, const Weights& weights) {
  SolveReport report;
  report.method = std::move(method);
  report.alpha = weights.alpha;
  report.beta = weights.beta;
  report.f_alpha = f_alpha(instance, solution);
  report.f_beta = f_beta(instance, solution);
  report.objective = weights.alpha * report.f_alpha - weights.beta * report.f_beta;
  report.feasible = verify_feasible(instance, sets, solution).feasible();
  report.granted = granted_requests(instance, solution);
  report.solution = std::move(solution);
  return report;
}

}  // namespace rwap
