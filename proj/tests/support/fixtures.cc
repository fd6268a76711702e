#include "fixtures.h"

#include <algorithm>
#include <map>
#include <random>

namespace rwap::testing {

namespace {

enum Node { s1, a, c, s2, b, t1, t2 };
constexpr int kRed = 0;
constexpr int kGreen = 1;

}  // namespace

Instance two_request_example() {
  const std::vector<std::pair<int, int>> edges = {{s1, a},  {s1, c},  {s1, s2}, {a, c},
                                                  {a, t1},  {s2, b},  {s2, c},  {c, t1},
                                                  {c, t2},  {t1, t2}, {b, t2},  {c, b}};
  std::vector<Link> links;
  std::map<std::pair<int, int>, int> id;
  for (auto [u, v] : edges) {
    id[{u, v}] = static_cast<int>(links.size());
    links.push_back({u, v});
    id[{v, u}] = static_cast<int>(links.size());
    links.push_back({v, u});
  }
  auto path = [&](std::vector<int> nodes, int wavelength) {
    Lightpath lp;
    lp.wavelength = wavelength;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) lp.links.push_back(id.at({nodes[i], nodes[i + 1]}));
    return lp;
  };
  Request r0;
  r0.id = 0;
  r0.source = s1;
  r0.destination = t1;
  r0.working = {path({s1, a, t1}, kRed), path({s1, a, c, t1}, kGreen),
                path({s1, s2, b, t2, t1}, kRed)};
  r0.protection = {path({s1, c, t1}, kGreen)};
  Request r1;
  r1.id = 1;
  r1.source = s2;
  r1.destination = t2;
  r1.working = {path({s2, b, t2}, kRed)};
  r1.protection = {path({s2, c, t2}, kRed), path({s2, s1, c, t2}, kGreen)};
  return Instance(Network(7, std::move(links)), 2, {r0, r1});
}

namespace {

// Random simple path from s to t by randomized depth-first search, as node list.
std::vector<int> random_simple_path(std::mt19937_64& rng, const std::vector<std::vector<int>>& out,
                                    const std::vector<Link>& links, int s, int t) {
  std::vector<int> nodes{s};
  std::vector<int> via;
  std::vector<char> on_path(out.size(), 0);
  on_path[s] = 1;
  // Iterative DFS with shuffled choices per depth.
  std::vector<std::vector<int>> choices;
  auto shuffled = [&](int u) {
    std::vector<int> c = out[u];
    std::shuffle(c.begin(), c.end(), rng);
    return c;
  };
  choices.push_back(shuffled(s));
  while (!choices.empty()) {
    if (nodes.back() == t) return via;
    auto& opts = choices.back();
    if (opts.empty()) {
      choices.pop_back();
      on_path[nodes.back()] = 0;
      nodes.pop_back();
      if (!via.empty()) via.pop_back();
      continue;
    }
    const int e = opts.back();
    opts.pop_back();
    const int v = links[e].head;
    if (on_path[v]) continue;
    on_path[v] = 1;
    nodes.push_back(v);
    via.push_back(e);
    choices.push_back(shuffled(v));
  }
  return {};
}

}  // namespace

Instance random_instance(std::uint64_t seed, const RandomInstanceOptions& o) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 17);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::bernoulli_distribution coin(o.link_probability);

  const int n = uniform(o.min_nodes, o.max_nodes);
  std::vector<Link> links;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && coin(rng)) links.push_back({u, v});
    }
  }
  // Occasional parallel link.
  if (!links.empty() && coin(rng)) links.push_back(links[uniform(0, static_cast<int>(links.size()) - 1)]);
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
  for (int e = 0; e < static_cast<int>(links.size()); ++e) out[links[e].tail].push_back(e);

  const int wavelengths = uniform(1, o.max_wavelengths);
  const int request_target = uniform(1, o.max_requests);
  std::vector<Request> requests;
  int budget = o.max_variables;
  for (int attempt = 0; attempt < 50 && static_cast<int>(requests.size()) < request_target &&
                        budget > 0;
       ++attempt) {
    const int s = uniform(0, n - 1);
    const int t = uniform(0, n - 1);
    if (s == t || random_simple_path(rng, out, links, s, t).empty()) continue;
    Request req;
    req.id = static_cast<int>(requests.size());
    req.source = s;
    req.destination = t;
    const int lo = o.allow_ungrantable ? 0 : 1;
    int nw = std::min(uniform(lo, o.max_lightpaths_per_kind), budget);
    budget -= nw;
    int np = std::min(uniform(lo, o.max_lightpaths_per_kind), budget);
    budget -= np;
    if (!o.allow_ungrantable && (nw == 0 || np == 0)) break;
    for (int k = 0; k < nw; ++k) {
      req.working.push_back({random_simple_path(rng, out, links, s, t), uniform(0, wavelengths - 1)});
    }
    for (int k = 0; k < np; ++k) {
      req.protection.push_back({random_simple_path(rng, out, links, s, t), uniform(0, wavelengths - 1)});
    }
    requests.push_back(std::move(req));
  }
  return Instance(Network(n, std::move(links)), wavelengths, std::move(requests));
}

Instance random_grantable_instance(std::uint64_t seed, const RandomInstanceOptions& options) {
  for (std::uint64_t k = 0;; ++k) {
    Instance inst = random_instance(seed * 1000 + k, options);
    for (const Request& r : inst.requests()) {
      if (r.grantable()) return inst;
    }
  }
}

MssGraph random_graph(std::uint64_t seed, int min_nodes, int max_nodes, double edge_probability) {
  std::mt19937_64 rng(seed * 0x2545F4914F6CDD1DULL + 3);
  MssGraph g;
  g.node_count = std::uniform_int_distribution<int>(min_nodes, max_nodes)(rng);
  std::bernoulli_distribution coin(edge_probability);
  for (int u = 0; u < g.node_count; ++u) {
    for (int v = u + 1; v < g.node_count; ++v) {
      if (coin(rng)) g.edges.emplace_back(u, v);
    }
  }
  return g;
}

Solution random_bits(std::uint64_t seed, int n, double one_probability) {
  std::mt19937_64 rng(seed ^ 0xabcdef12345ULL);
  std::bernoulli_distribution coin(one_probability);
  Solution s(n);
  for (int i = 0; i < n; ++i) s.bits[i] = coin(rng) ? 1 : 0;
  return s;
}

}  // namespace rwap::testing
