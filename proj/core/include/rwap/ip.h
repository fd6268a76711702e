#ifndef RWAP_IP_H_
#define RWAP_IP_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "rwap/conflicts.h"
#include "rwap/instance.h"
#include "rwap/weights.h"

namespace rwap {

enum class ModelKind { kBase, kStrong };

std::string to_string(ModelKind kind);

enum class Relation { kEqual, kLessEqual };

struct Term {
  int var = 0;
  std::int64_t coeff = 0;
  friend bool operator==(const Term&, const Term&) = default;
};

struct Constraint {
  std::string name;
  std::vector<Term> terms;  // ascending var, non-zero coefficients
  Relation relation = Relation::kLessEqual;
  std::int64_t rhs = 0;
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

// Minimization model over binary variables.
struct LinearModel {
  ModelKind kind = ModelKind::kBase;
  std::vector<std::string> var_names;
  std::vector<std::int64_t> objective;  // folded per-variable coefficient
  std::vector<Constraint> constraints;

  int variable_count() const { return static_cast<int>(var_names.size()); }
  bool satisfied_by(const Solution& s) const;
  std::int64_t evaluate(const Solution& s) const;
  friend bool operator==(const LinearModel&, const LinearModel&) = default;
};

// Base: balance and at-most-one rows per request, then one row per C1..C4
// tuple. Strong: same request rows, one pbar row per working lightpath, and
// one row per (link, wavelength) group with at least two members.
LinearModel build_ip(const Instance& instance, const ConflictSets& sets,
                     const StrongGroups& groups, const Weights& weights, ModelKind kind);

// CPLEX LP text (Minimize / Subject To / Binary / End), deterministic order.
void write_lp(std::ostream& out, const LinearModel& model);
// Writes to `path.tmp` then renames over `path`.
void export_lp(const LinearModel& model, const std::filesystem::path& path);

// Writes `contents` to a sibling temp file and renames it into place.
void write_file_atomically(const std::filesystem::path& path, const std::string& contents);

}  // namespace rwap

#endif  // RWAP_IP_H_
