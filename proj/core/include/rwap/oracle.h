#ifndef RWAP_ORACLE_H_
#define RWAP_ORACLE_H_

#include <cstdint>
#include <vector>

#include "rwap/conflicts.h"
#include "rwap/instance.h"
#include "rwap/qubo.h"
#include "rwap/solve_report.h"
#include "rwap/weights.h"

namespace rwap {

// Minimum objective over every feasible bit vector. Ties: fewer links, then
// the lexicographically smallest bit string. Throws EnumerationLimitError
// when the instance has more than `max_variables` variables.
SolveReport brute_force_ip(const Instance& instance, const ConflictSets& sets,
                           const Weights& weights, int max_variables = kDefaultEnumerationCap);

struct QuboMinimum {
  std::vector<std::uint8_t> bits;
  std::int64_t energy = 0;
};

// Global minimum by Gray-code enumeration; ties go to the lexicographically
// smallest bit string.
QuboMinimum brute_force_qubo(const QuboModel& qubo, int max_variables = kDefaultEnumerationCap);

// Depth-first search over requests (each takes one link-disjoint working and
// protection pair, or nothing) with (link, wavelength) occupancy propagation
// and an optimistic bound. node_limit 0 means unlimited. On exhaustion the
// report carries the incumbent and a proven lower bound.
SolveReport branch_and_bound(const Instance& instance, const StrongGroups& groups,
                             const Weights& weights, std::int64_t node_limit = 0);

}  // namespace rwap

#endif  // RWAP_ORACLE_H_
