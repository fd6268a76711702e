#ifndef RWAP_IO_H_
#define RWAP_IO_H_

#include <filesystem>
#include <string>

#include "rwap/instance.h"
#include "rwap/reduce.h"
#include "rwap/solve_report.h"

namespace rwap {

// Instance JSON:
//   {"nodes": N, "links": [[tail, head], ...], "wavelengths": L,
//    "requests": [{"source": s, "dest": t,
//                  "working": [{"links": [...], "wavelength": l}, ...],
//                  "protection": [...]}, ...]}
// Request ids are positions in "requests". Parse failures throw LoadError.
Instance instance_from_json(const std::string& text);
std::string instance_to_json(const Instance& instance);
Instance load_instance(const std::filesystem::path& path);
void save_instance(const Instance& instance, const std::filesystem::path& path);

// Solution JSON: {"bits": "0101...", ...}; "bits" may also be an array of 0/1.
Solution solution_from_json(const std::string& text);
Solution load_solution(const std::filesystem::path& path);
// {"method", "bits", "granted", "objective", "f_alpha", "f_beta", "alpha",
//  "beta", "feasible", "repaired", "status", optional "lower_bound",
//  "energy", "rho", "work", "notes"}.
std::string report_to_json(const SolveReport& report);

// Graph JSON {"nodes": N, "edges": [[u, v], ...]}.
MssGraph graph_from_json(const std::string& text);
MssGraph load_graph(const std::filesystem::path& path);

// Topology for the generator: {"nodes", "links"} is taken as directed links,
// {"nodes", "edges"} as undirected edges (two opposite links each).
Network topology_from_json(const std::string& text);
Network load_topology(const std::filesystem::path& path);
std::string network_to_json(const Network& network);

std::string read_file(const std::filesystem::path& path);

}  // namespace rwap

#endif  // RWAP_IO_H_
