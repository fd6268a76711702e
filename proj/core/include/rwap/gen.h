#ifndef RWAP_GEN_H_
#define RWAP_GEN_H_

#include <cstdint>
#include <vector>

#include "rwap/instance.h"

namespace rwap {

// Up to k shortest simple source -> destination paths (link ids), by hop
// count; ties broken deterministically by link ids. Empty if unreachable.
std::vector<std::vector<int>> k_shortest_paths(const Network& network, int source,
                                               int destination, int k);

struct GeneratedInstance {
  Instance instance;
  // Requests whose candidate pool held fewer than paths_per_kind paths; they
  // use the entire pool for both kinds.
  std::vector<int> short_pool_requests;
};

// Random requests over distinct ordered node pairs. Each request samples
// paths_per_kind working and paths_per_kind protection paths (independently)
// from its 4 * paths_per_kind shortest paths, and every sampled path is
// offered on every wavelength. Pairs without any path are skipped. Throws
// ConfigError when fewer than request_count pairs are connected.
GeneratedInstance generate(const Network& topology, int wavelengths, int request_count,
                           int paths_per_kind, std::uint64_t seed);

// Random connected topology with round(node_count * avg_out_degree) edges
// (capped at a complete graph), each present as a pair of opposite links.
// Throws ConfigError when avg_out_degree * node_count > node_count *
// (node_count - 1) or when too few edges remain to connect the nodes.
Network synth_topology(int node_count, double avg_out_degree, std::uint64_t seed);

// Every node reaches every other node along directed links.
bool strongly_connected(const Network& network);

}  // namespace rwap

#endif  // RWAP_GEN_H_
