#include "rwap/reduce.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "rwap/error.h"
#include "rwap/oracle.h"

namespace rwap {

void MssGraph::validate() const {
  if (node_count < 0) throw LoadError("negative node count");
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= node_count || v >= node_count) {
      throw LoadError("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
    }
    if (u == v) throw LoadError("self-loop at node " + std::to_string(u));
    if (!seen.insert(std::minmax(u, v)).second) {
      throw LoadError("repeated edge " + std::to_string(u) + "-" + std::to_string(v));
    }
  }
}

MssReduction reduce_mss(const MssGraph& graph) {
  graph.validate();
  const int k = graph.node_count;
  // Lightpath 2r is request r's working path, 2r+1 its protection path; this
  // is also the instance's variable order. Paths are node sequences here.
  std::vector<std::vector<int>> paths(static_cast<std::size_t>(2 * k));
  for (int r = 0; r < k; ++r) {
    paths[2 * r] = {4 * r, 4 * r + 2, 4 * r + 1};
    paths[2 * r + 1] = {4 * r, 4 * r + 3, 4 * r + 1};
  }

  MssReduction out;
  std::vector<std::pair<int, int>> pairs;
  for (auto [u, v] : graph.edges) {
    const auto [a, b] = std::minmax(u, v);
    out.intended.c2.push_back({a, b, 0, 0});
    out.intended.c2.push_back({b, a, 0, 0});
    out.intended.c3.push_back({a, b, 0, 0});
    out.intended.c4.push_back({a, b, 0, 0});
    pairs.emplace_back(2 * a, 2 * b + 1);
    pairs.emplace_back(std::min(2 * b, 2 * a + 1), std::max(2 * b, 2 * a + 1));
    pairs.emplace_back(2 * a, 2 * b);
    pairs.emplace_back(2 * a + 1, 2 * b + 1);
  }
  std::sort(out.intended.c2.begin(), out.intended.c2.end());
  std::sort(out.intended.c3.begin(), out.intended.c3.end());
  std::sort(out.intended.c4.begin(), out.intended.c4.end());
  std::sort(pairs.begin(), pairs.end());

  // Host H = ..x -> t becomes ..x -> h -> t; the other O = ..y -> t' becomes
  // ..y -> x -> h -> o -> t'. They now share (x, h). The last link of every
  // path stays private to it, so no third path is touched.
  int next_node = 4 * k;
  for (auto [host, other] : pairs) {
    auto& hp = paths[host];
    auto& op = paths[other];
    const int x = hp[hp.size() - 2];
    const int h = next_node++;
    const int o = next_node++;
    hp.insert(hp.end() - 1, h);
    op.insert(op.end() - 1, {x, h, o});
  }

  std::map<std::pair<int, int>, int> link_ids;
  std::vector<Link> links;
  auto to_lightpath = [&](const std::vector<int>& nodes) {
    Lightpath lp;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
      auto [it, fresh] =
          link_ids.try_emplace({nodes[i], nodes[i + 1]}, static_cast<int>(links.size()));
      if (fresh) links.push_back({nodes[i], nodes[i + 1]});
      lp.links.push_back(it->second);
    }
    return lp;
  };
  std::vector<Request> requests;
  for (int r = 0; r < k; ++r) {
    Request req;
    req.id = r;
    req.source = 4 * r;
    req.destination = 4 * r + 1;
    req.working.push_back(to_lightpath(paths[2 * r]));
    req.protection.push_back(to_lightpath(paths[2 * r + 1]));
    requests.push_back(std::move(req));
  }
  out.instance = Instance(Network(next_node, std::move(links)), 1, std::move(requests));
  return out;
}

SolveReport max_requests_only(const Instance& instance) {
  Weights w;
  w.alpha = 0;
  w.beta = 1;
  w.source = WeightSource::kExplicit;
  SolveReport report = branch_and_bound(instance, build_strong_groups(instance), w);
  report.method = "max-requests";
  return report;
}

}  // namespace rwap
