#ifndef RWAP_TESTS_FIXTURES_H_
#define RWAP_TESTS_FIXTURES_H_

#include <cstdint>
#include <vector>

#include "rwap/instance.h"
#include "rwap/reduce.h"

namespace rwap::testing {

// The two-request example network: 7 nodes, 12 bidirectional edges, two
// wavelengths (0 = red, 1 = green). Request 0 has three working and one
// protection lightpath, request 1 one working and two protection.
Instance two_request_example();

struct RandomInstanceOptions {
  int min_nodes = 3;
  int max_nodes = 6;
  int max_requests = 3;
  int max_lightpaths_per_kind = 3;
  int max_wavelengths = 2;
  int max_variables = 14;
  double link_probability = 0.45;
  bool allow_ungrantable = true;  // requests with an empty working or protection set
};

// Small random instance with at most options.max_variables variables.
Instance random_instance(std::uint64_t seed, const RandomInstanceOptions& options = {});

// Same, but with at least one grantable request.
Instance random_grantable_instance(std::uint64_t seed, const RandomInstanceOptions& options = {});

// Random simple graph on [min_nodes, max_nodes] nodes.
MssGraph random_graph(std::uint64_t seed, int min_nodes, int max_nodes, double edge_probability);

// Uniform random bit vector of length n.
Solution random_bits(std::uint64_t seed, int n, double one_probability = 0.3);

}  // namespace rwap::testing

#endif  // RWAP_TESTS_FIXTURES_H_
