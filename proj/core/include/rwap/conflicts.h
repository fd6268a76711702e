#ifndef RWAP_CONFLICTS_H_
#define RWAP_CONFLICTS_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "rwap/instance.h"

namespace rwap {

// Working w and protection p of one request share a link.
struct C1Tuple {
  int r = 0, w = 0, p = 0;
  friend auto operator<=>(const C1Tuple&, const C1Tuple&) = default;
};
// Working w of r1 and protection p of r2 (r1 != r2): same wavelength, shared link.
struct C2Tuple {
  int r1 = 0, r2 = 0, w = 0, p = 0;
  friend auto operator<=>(const C2Tuple&, const C2Tuple&) = default;
};
// Two working lightpaths: same wavelength, shared link. Stored once per
// unordered pair: r1 < r2, or r1 == r2 with w1 < w2.
struct C3Tuple {
  int r1 = 0, r2 = 0, w1 = 0, w2 = 0;
  friend auto operator<=>(const C3Tuple&, const C3Tuple&) = default;
};
// Two protection lightpaths, canonical order as for C3Tuple.
struct C4Tuple {
  int r1 = 0, r2 = 0, p1 = 0, p2 = 0;
  friend auto operator<=>(const C4Tuple&, const C4Tuple&) = default;
};

struct ConflictSets {
  std::vector<C1Tuple> c1;
  std::vector<C2Tuple> c2;
  std::vector<C3Tuple> c3;
  std::vector<C4Tuple> c4;

  std::int64_t total() const {
    return static_cast<std::int64_t>(c1.size() + c2.size() + c3.size() + c4.size());
  }
  friend bool operator==(const ConflictSets&, const ConflictSets&) = default;
};

// Exact enumeration of C1..C4; each set sorted lexicographically.
ConflictSets build_conflict_sets(const Instance& instance);

// Every conflicting variable pair (i < j), sorted and deduplicated. Each
// C1..C4 tuple maps to exactly one pair and no two tuples share a pair.
std::vector<std::pair<int, int>> conflict_pairs(const Instance& instance,
                                                const ConflictSets& sets);

// Lightpaths (any request, either kind) that contain `link` on `wavelength`.
struct LinkWavelengthGroup {
  int link = 0;
  int wavelength = 0;
  std::vector<int> vars;  // ascending

  // Groups with a single member constrain nothing and are not emitted.
  bool emitted() const { return vars.size() >= 2; }
};

struct StrongGroups {
  // pbar[r][w]: local protection indices of request r sharing a link with w.
  std::vector<std::vector<std::vector<int>>> pbar;
  // One entry per non-empty (link, wavelength) combination, sorted by
  // (link, wavelength).
  std::vector<LinkWavelengthGroup> groups;

  std::int64_t emitted_group_count() const;
};

StrongGroups build_strong_groups(const Instance& instance);

// Constraint counts of the base and strong models, and their size per variable.
struct ConstraintCounts {
  std::int64_t requests = 0;
  std::int64_t variables = 0;
  std::int64_t c1 = 0, c2 = 0, c3 = 0, c4 = 0;
  std::int64_t working_lightpaths = 0;
  std::int64_t groups_total = 0;
  std::int64_t groups_emitted = 0;

  // 2|R| + |C1| + |C2| + |C3| + |C4|.
  std::int64_t base_constraints() const { return 2 * requests + c1 + c2 + c3 + c4; }
  // 2|R| + sum_r |W^r| + emitted groups.
  std::int64_t strong_constraints() const {
    return 2 * requests + working_lightpaths + groups_emitted;
  }
  // Same, counting single-member groups as well.
  std::int64_t strong_constraints_all_groups() const {
    return 2 * requests + working_lightpaths + groups_total;
  }
  double base_ratio() const;
  double strong_ratio() const;
  double strong_ratio_all_groups() const;
};

ConstraintCounts count_constraints(const Instance& instance, const ConflictSets& sets,
                                   const StrongGroups& groups);

}  // namespace rwap

#endif  // RWAP_CONFLICTS_H_
