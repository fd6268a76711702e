#include "rwap/gen.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <string>

#include "rwap/error.h"
#include "rwap/parallel.h"

namespace rwap {

namespace {

struct Adjacency {
  std::vector<std::vector<int>> out;  // link ids by tail, ascending

  explicit Adjacency(const Network& net) : out(static_cast<std::size_t>(net.node_count())) {
    for (int e = 0; e < net.link_count(); ++e) out[net.link(e).tail].push_back(e);
  }
};

// BFS shortest path avoiding blocked nodes and links; empty when none.
std::vector<int> bfs_path(const Network& net, const Adjacency& adj, int source, int destination,
                          const std::vector<char>& blocked_node,
                          const std::vector<char>& blocked_link) {
  std::vector<int> via(static_cast<std::size_t>(net.node_count()), -1);
  std::vector<char> seen(static_cast<std::size_t>(net.node_count()), 0);
  std::deque<int> queue{source};
  seen[source] = 1;
  while (!queue.empty() && !seen[destination]) {
    const int u = queue.front();
    queue.pop_front();
    for (int e : adj.out[u]) {
      const int v = net.link(e).head;
      if (seen[v] || blocked_link[e] || blocked_node[v]) continue;
      seen[v] = 1;
      via[v] = e;
      queue.push_back(v);
    }
  }
  std::vector<int> path;
  if (!seen[destination]) return path;
  for (int v = destination; v != source; v = net.link(via[v]).tail) path.push_back(via[v]);
  std::reverse(path.begin(), path.end());
  return path;
}

bool shorter(const std::vector<int>& a, const std::vector<int>& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

}  // namespace

std::vector<std::vector<int>> k_shortest_paths(const Network& net, int source, int destination,
                                               int k) {
  std::vector<std::vector<int>> found;
  if (k <= 0 || source == destination) return found;
  const Adjacency adj(net);
  std::vector<char> blocked_node(static_cast<std::size_t>(net.node_count()), 0);
  std::vector<char> blocked_link(static_cast<std::size_t>(net.link_count()), 0);
  auto first = bfs_path(net, adj, source, destination, blocked_node, blocked_link);
  if (first.empty()) return found;
  found.push_back(std::move(first));

  std::set<std::vector<int>, decltype(&shorter)> candidates(&shorter);
  while (static_cast<int>(found.size()) < k) {
    const std::vector<int> prev = found.back();
    for (std::size_t j = 0; j < prev.size(); ++j) {
      const int spur = j == 0 ? source : net.link(prev[j - 1]).head;
      std::fill(blocked_node.begin(), blocked_node.end(), 0);
      std::fill(blocked_link.begin(), blocked_link.end(), 0);
      for (const auto& p : found) {
        if (p.size() > j && std::equal(prev.begin(), prev.begin() + j, p.begin())) {
          blocked_link[p[j]] = 1;
        }
      }
      blocked_node[source] = 1;
      for (std::size_t i = 0; i < j; ++i) blocked_node[net.link(prev[i]).head] = 1;
      blocked_node[spur] = 0;
      auto tail = bfs_path(net, adj, spur, destination, blocked_node, blocked_link);
      if (tail.empty()) continue;
      std::vector<int> path(prev.begin(), prev.begin() + j);
      path.insert(path.end(), tail.begin(), tail.end());
      if (std::find(found.begin(), found.end(), path) == found.end()) {
        candidates.insert(std::move(path));
      }
    }
    if (candidates.empty()) break;
    found.push_back(*candidates.begin());
    candidates.erase(candidates.begin());
  }
  return found;
}

namespace {

// First `count` entries of a uniform random permutation of 0..n-1.
std::vector<int> sample_indices(Rng& rng, int n, int count) {
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) idx[i] = i;
  count = std::min(count, n);
  for (int i = 0; i < count; ++i) {
    std::swap(idx[i], idx[i + uniform_below(rng, static_cast<std::uint64_t>(n - i))]);
  }
  idx.resize(static_cast<std::size_t>(count));
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace

GeneratedInstance generate(const Network& topology, int wavelengths, int request_count,
                           int paths_per_kind, std::uint64_t seed) {
  if (wavelengths < 1) throw ConfigError("need at least one wavelength");
  if (request_count < 0) throw ConfigError("negative request count");
  if (paths_per_kind < 1) throw ConfigError("need at least one path per kind");
  const int n = topology.node_count();
  const std::int64_t pair_count = static_cast<std::int64_t>(n) * (n - 1);
  if (request_count > pair_count) {
    throw ConfigError(std::to_string(request_count) + " requests exceed the " +
                      std::to_string(pair_count) + " ordered node pairs");
  }

  Rng rng(derive_seed(seed, kGeneratorStream, 0));
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(pair_count));
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (s != t) pairs.emplace_back(s, t);
    }
  }
  for (std::size_t i = pairs.size(); i > 1; --i) {
    std::swap(pairs[i - 1], pairs[uniform_below(rng, i)]);
  }

  GeneratedInstance out;
  std::vector<Request> requests;
  for (std::size_t next = 0; static_cast<int>(requests.size()) < request_count; ++next) {
    if (next == pairs.size()) {
      throw ConfigError("only " + std::to_string(requests.size()) +
                        " node pairs are connected; cannot place " +
                        std::to_string(request_count) + " requests");
    }
    const auto [s, t] = pairs[next];
    const auto pool = k_shortest_paths(topology, s, t, 4 * paths_per_kind);
    if (pool.empty()) continue;
    Request req;
    req.id = static_cast<int>(requests.size());
    req.source = s;
    req.destination = t;
    if (static_cast<int>(pool.size()) < paths_per_kind) out.short_pool_requests.push_back(req.id);
    const int size = static_cast<int>(pool.size());
    for (auto* kind : {&req.working, &req.protection}) {
      for (int idx : sample_indices(rng, size, paths_per_kind)) {
        for (int l = 0; l < wavelengths; ++l) kind->push_back({pool[idx], l});
      }
    }
    requests.push_back(std::move(req));
  }
  out.instance = Instance(topology, wavelengths, std::move(requests));
  return out;
}

Network synth_topology(int node_count, double avg_out_degree, std::uint64_t seed) {
  if (node_count < 1) throw ConfigError("need at least one node");
  if (!(avg_out_degree >= 0)) throw ConfigError("average degree must be non-negative");
  const double n = node_count;
  if (avg_out_degree * n > n * (n - 1)) {
    throw ConfigError("average out-degree " + std::to_string(avg_out_degree) +
                      " is too dense for " + std::to_string(node_count) + " nodes");
  }
  const std::int64_t max_edges = static_cast<std::int64_t>(node_count) * (node_count - 1) / 2;
  const std::int64_t edges =
      std::min<std::int64_t>(std::llround(n * avg_out_degree), max_edges);
  if (edges < node_count - 1) {
    throw ConfigError("average out-degree " + std::to_string(avg_out_degree) +
                      " gives too few edges to connect " + std::to_string(node_count) + " nodes");
  }

  Rng rng(derive_seed(seed, kTopologyStream, 0));
  std::vector<int> perm(static_cast<std::size_t>(node_count));
  for (int i = 0; i < node_count; ++i) perm[i] = i;
  for (int i = node_count - 1; i > 0; --i) {
    std::swap(perm[i], perm[uniform_below(rng, static_cast<std::uint64_t>(i) + 1)]);
  }
  std::set<std::pair<int, int>> chosen;
  for (int i = 1; i < node_count; ++i) {
    const int other = perm[uniform_below(rng, static_cast<std::uint64_t>(i))];
    chosen.insert(std::minmax(perm[i], other));
  }
  std::vector<std::pair<int, int>> rest;
  for (int u = 0; u < node_count; ++u) {
    for (int v = u + 1; v < node_count; ++v) {
      if (!chosen.count({u, v})) rest.emplace_back(u, v);
    }
  }
  const std::size_t extra = static_cast<std::size_t>(edges) - chosen.size();
  for (std::size_t i = 0; i < extra; ++i) {
    std::swap(rest[i], rest[i + uniform_below(rng, rest.size() - i)]);
    chosen.insert(rest[i]);
  }
  std::vector<Link> links;
  for (auto [u, v] : chosen) {
    links.push_back({u, v});
    links.push_back({v, u});
  }
  return Network(node_count, std::move(links));
}

bool strongly_connected(const Network& net) {
  const int n = net.node_count();
  if (n <= 1) return true;
  const Adjacency adj(net);
  std::vector<std::vector<int>> in(static_cast<std::size_t>(n));
  for (int e = 0; e < net.link_count(); ++e) in[net.link(e).head].push_back(e);
  auto reach_all = [&](bool forward) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int e : forward ? adj.out[u] : in[u]) {
        const int v = forward ? net.link(e).head : net.link(e).tail;
        if (!seen[v]) {
          seen[v] = 1;
          ++count;
          stack.push_back(v);
        }
      }
    }
    return count == n;
  };
  return reach_all(true) && reach_all(false);
}

}  // namespace rwap
