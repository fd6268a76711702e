#include "rwap/verify.h"

#include <algorithm>

namespace rwap {

std::string to_string(ConstraintClass c) {
  switch (c) {
    case ConstraintClass::kBalance: return "balance";
    case ConstraintClass::kAtMostOne: return "at-most-one";
    case ConstraintClass::kC1: return "C1";
    case ConstraintClass::kC2: return "C2";
    case ConstraintClass::kC3: return "C3";
    case ConstraintClass::kC4: return "C4";
  }
  return "?";
}

std::string Violation::describe() const {
  std::string s = to_string(kind) + " (";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(tuple[i]);
  }
  return s + ")";
}

int Verdict::count(ConstraintClass kind) const {
  return static_cast<int>(std::count_if(violations.begin(), violations.end(),
                                         [kind](const Violation& v) { return v.kind == kind; }));
}

Verdict verify_feasible(const Instance& instance, const ConflictSets& sets,
                        const Solution& solution) {
  check_dimension(instance, solution);
  Verdict verdict;
  for (const Request& req : instance.requests()) {
    int working = 0;
    int protection = 0;
    for (int w = 0; w < static_cast<int>(req.working.size()); ++w) {
      working += solution[instance.working_var(req.id, w)];
    }
    for (int p = 0; p < static_cast<int>(req.protection.size()); ++p) {
      protection += solution[instance.protection_var(req.id, p)];
    }
    if (working != protection) {
      verdict.violations.push_back({ConstraintClass::kBalance, {req.id}});
    }
    if (working > 1) verdict.violations.push_back({ConstraintClass::kAtMostOne, {req.id}});
  }
  for (const auto& t : sets.c1) {
    if (solution[instance.working_var(t.r, t.w)] && solution[instance.protection_var(t.r, t.p)]) {
      verdict.violations.push_back({ConstraintClass::kC1, {t.r, t.w, t.p}});
    }
  }
  for (const auto& t : sets.c2) {
    if (solution[instance.working_var(t.r1, t.w)] && solution[instance.protection_var(t.r2, t.p)]) {
      verdict.violations.push_back({ConstraintClass::kC2, {t.r1, t.r2, t.w, t.p}});
    }
  }
  for (const auto& t : sets.c3) {
    if (solution[instance.working_var(t.r1, t.w1)] && solution[instance.working_var(t.r2, t.w2)]) {
      verdict.violations.push_back({ConstraintClass::kC3, {t.r1, t.r2, t.w1, t.w2}});
    }
  }
  for (const auto& t : sets.c4) {
    if (solution[instance.protection_var(t.r1, t.p1)] &&
        solution[instance.protection_var(t.r2, t.p2)]) {
      verdict.violations.push_back({ConstraintClass::kC4, {t.r1, t.r2, t.p1, t.p2}});
    }
  }
  return verdict;
}

}  // namespace rwap
