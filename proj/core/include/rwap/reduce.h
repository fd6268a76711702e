#ifndef RWAP_REDUCE_H_
#define RWAP_REDUCE_H_

#include <utility>
#include <vector>

#include "rwap/conflicts.h"
#include "rwap/instance.h"
#include "rwap/solve_report.h"

namespace rwap {

// Simple undirected graph.
struct MssGraph {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;

  // Throws LoadError on out-of-range endpoints, self-loops, or repeated edges.
  void validate() const;
};

struct MssReduction {
  Instance instance;
  // The conflicts the construction is meant to produce: for every edge
  // {a, b}, both working/protection cross pairs, the working pair and the
  // protection pair. C1 stays empty.
  ConflictSets intended;
};

// One request per graph node with a single two-link working and protection
// lightpath on wavelength 0; each intended conflicting pair is then made to
// share exactly one fresh link. Request r owns nodes 4r..4r+3 (source,
// destination, working midpoint, protection midpoint); rerouting nodes are
// appended after them.
MssReduction reduce_mss(const MssGraph& graph);
inline Instance mss_to_rwap(const MssGraph& graph) { return reduce_mss(graph).instance; }

// Maximum number of grantable requests (alpha = 0, beta = 1), solved exactly.
SolveReport max_requests_only(const Instance& instance);

}  // namespace rwap

#endif  // RWAP_REDUCE_H_
