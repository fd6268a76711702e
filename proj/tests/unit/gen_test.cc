#include "rwap/gen.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "rwap/error.h"

namespace rwap {
namespace {

Network ring(int n) {
  std::vector<Link> links;
  for (int i = 0; i < n; ++i) {
    links.push_back({i, (i + 1) % n});
    links.push_back({(i + 1) % n, i});
  }
  return Network(n, links);
}

// All simple paths from s to t as link lists, sorted by (length, lex).
std::vector<std::vector<int>> all_simple_paths(const Network& net, int s, int t) {
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::vector<char> seen(net.node_count(), 0);
  std::function<void(int)> dfs = [&](int u) {
    if (u == t) {
      out.push_back(path);
      return;
    }
    seen[u] = 1;
    for (int l = 0; l < net.link_count(); ++l) {
      if (net.link(l).tail != u || seen[net.link(l).head]) continue;
      path.push_back(l);
      dfs(net.link(l).head);
      path.pop_back();
    }
    seen[u] = 0;
  };
  dfs(s);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

TEST(KShortestPathsTest, MatchesExhaustiveEnumeration) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Network net = synth_topology(7, 1.6, seed);
    for (int s = 0; s < 3; ++s) {
      for (int t = 4; t < 7; ++t) {
        const auto all = all_simple_paths(net, s, t);
        for (int k : {1, 3, 8}) {
          const auto got = k_shortest_paths(net, s, t, k);
          ASSERT_EQ(got.size(), std::min<std::size_t>(k, all.size()));
          for (std::size_t i = 0; i < got.size(); ++i) {
            EXPECT_EQ(got[i].size(), all[i].size()) << seed << " " << s << " " << t;
          }
          EXPECT_EQ(std::set<std::vector<int>>(got.begin(), got.end()).size(), got.size());
          for (const auto& p : got) {
            EXPECT_NE(std::find(all.begin(), all.end(), p), all.end());
          }
        }
      }
    }
  }
}

TEST(KShortestPathsTest, RingHasTwoPaths) {
  const auto paths = k_shortest_paths(ring(6), 0, 3, 5);
  ASSERT_EQ(paths.size(), 2u);
  EXPECT_EQ(paths[0].size(), 3u);
  EXPECT_EQ(paths[1].size(), 3u);
  EXPECT_TRUE(k_shortest_paths(ring(6), 0, 3, 0).empty());
}

TEST(GenerateTest, VariableCounts) {
  const Network topo = synth_topology(19, 2.05, 1);
  const GeneratedInstance a = generate(topo, 5, 60, 4, 3);
  if (a.short_pool_requests.empty()) EXPECT_EQ(a.instance.variable_count(), 2400);
  EXPECT_EQ(a.instance.request_count(), 60);

  const GeneratedInstance b = generate(topo, 15, 100, 2, 3);
  if (b.short_pool_requests.empty()) EXPECT_EQ(b.instance.variable_count(), 6000);
  for (int r = 0; r < b.instance.request_count(); ++r) {
    const Request& q = b.instance.request(r);
    EXPECT_NE(q.source, q.destination);
    EXPECT_EQ(q.working.size() % 15, 0u);
  }
}

TEST(GenerateTest, TwoNodeSingleLink) {
  const Network net(2, {{0, 1}});
  const GeneratedInstance g = generate(net, 2, 1, 1, 0);
  ASSERT_EQ(g.instance.request_count(), 1);
  const Request& q = g.instance.request(0);
  EXPECT_EQ(q.source, 0);
  EXPECT_EQ(q.destination, 1);
  EXPECT_EQ(q.working.size(), 2u);
  EXPECT_EQ(q.protection.size(), 2u);
  EXPECT_TRUE(g.short_pool_requests.empty());
  // Only one ordered pair is connected.
  EXPECT_THROW(generate(net, 2, 2, 1, 0), ConfigError);
}

TEST(GenerateTest, DeterministicInSeed) {
  const Network topo = synth_topology(12, 2.0, 5);
  EXPECT_EQ(generate(topo, 3, 20, 2, 7).instance, generate(topo, 3, 20, 2, 7).instance);
  EXPECT_NE(generate(topo, 3, 20, 2, 7).instance, generate(topo, 3, 20, 2, 8).instance);
  EXPECT_EQ(synth_topology(12, 2.0, 5), topo);
}

TEST(GenerateTest, BadArguments) {
  const Network topo = synth_topology(6, 1.5, 0);
  EXPECT_THROW(generate(topo, 0, 5, 1, 0), ConfigError);
  EXPECT_THROW(generate(topo, 2, 5, 0, 0), ConfigError);
  EXPECT_THROW(generate(Network(1, {}), 2, 5, 1, 0), ConfigError);
}

TEST(SynthTopologyTest, LinkCountsAndConnectivity) {
  EXPECT_EQ(synth_topology(19, 2.05, 0).link_count(), 78);
  EXPECT_EQ(synth_topology(2, 1.0, 0).link_count(), 2);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Network net = synth_topology(5 + static_cast<int>(seed % 20), 1.0 + (seed % 5) * 0.4, seed);
    EXPECT_TRUE(strongly_connected(net)) << seed;
    std::set<std::pair<int, int>> seen;
    for (int l = 0; l < net.link_count(); ++l) {
      EXPECT_NE(net.link(l).tail, net.link(l).head);
      EXPECT_TRUE(seen.insert({net.link(l).tail, net.link(l).head}).second);
    }
  }
}

TEST(SynthTopologyTest, DensityErrors) {
  EXPECT_THROW(synth_topology(4, 3.5, 0), ConfigError);
  EXPECT_THROW(synth_topology(10, 0.5, 0), ConfigError);
}

TEST(StronglyConnectedTest, Basics) {
  EXPECT_TRUE(strongly_connected(ring(5)));
  EXPECT_FALSE(strongly_connected(Network(2, {{0, 1}})));
  EXPECT_TRUE(strongly_connected(Network(1, {})));
}

}  // namespace
}  // namespace rwap
