#ifndef RWAP_VERIFY_H_
#define RWAP_VERIFY_H_

#include <string>
#include <vector>

#include "rwap/conflicts.h"
#include "rwap/instance.h"

namespace rwap {

enum class ConstraintClass {
  kBalance,    // as many protection as working lightpaths per request
  kAtMostOne,  // at most one working lightpath per request
  kC1,
  kC2,
  kC3,
  kC4,
};

std::string to_string(ConstraintClass c);

struct Violation {
  ConstraintClass kind = ConstraintClass::kBalance;
  // Balance / AtMostOne: {r}; C1: {r, w, p}; C2..C4: {r1, r2, a, b}.
  std::vector<int> tuple;

  std::string describe() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct Verdict {
  std::vector<Violation> violations;

  bool feasible() const { return violations.empty(); }
  int count(ConstraintClass kind) const;
};

// Checks every IP constraint and reports each violated one. The instance's
// conflict sets must have been built from the same instance.
Verdict verify_feasible(const Instance& instance, const ConflictSets& sets,
                        const Solution& solution);

}  // namespace rwap

#endif  // RWAP_VERIFY_H_
