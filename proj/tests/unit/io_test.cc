#include "rwap/io.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "json.hpp"

#include "fixtures.h"
#include "rwap/error.h"
#include "rwap/oracle.h"

namespace rwap {
namespace {

namespace fs = std::filesystem;

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("rwap_io_test_" + std::to_string(::getpid()) + "_" + name);
}

TEST(IoTest, InstanceRoundTrip) {
  const Instance a = testing::two_request_example();
  EXPECT_EQ(instance_from_json(instance_to_json(a)), a);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance r = testing::random_instance(seed);
    EXPECT_EQ(instance_from_json(instance_to_json(r)), r);
  }
}

TEST(IoTest, SaveAndLoadFile) {
  const Instance a = testing::two_request_example();
  const fs::path p = temp_file("inst.json");
  save_instance(a, p);
  EXPECT_FALSE(fs::exists(p.string() + ".tmp"));
  EXPECT_EQ(load_instance(p), a);
  fs::remove(p);
  EXPECT_THROW(load_instance(p), LoadError);
}

TEST(IoTest, MalformedInstances) {
  EXPECT_THROW(instance_from_json("{"), LoadError);
  EXPECT_THROW(instance_from_json("{}"), LoadError);
  EXPECT_THROW(instance_from_json(R"({"nodes":2,"links":[[0,1,2]],"wavelengths":1,"requests":[]})"),
               LoadError);
  // Lightpath that does not reach the destination.
  EXPECT_THROW(instance_from_json(R"({"nodes":3,"links":[[0,1],[1,2]],"wavelengths":1,
      "requests":[{"source":0,"dest":2,"working":[{"links":[0],"wavelength":0}],"protection":[]}]})"),
               LoadError);
  // Wavelength out of range.
  EXPECT_THROW(instance_from_json(R"({"nodes":2,"links":[[0,1]],"wavelengths":1,
      "requests":[{"source":0,"dest":1,"working":[{"links":[0],"wavelength":1}],"protection":[]}]})"),
               LoadError);
  EXPECT_THROW(instance_from_json(R"({"nodes":2,"links":[[0,0]],"wavelengths":1,"requests":[]})"),
               LoadError);
}

TEST(IoTest, Solutions) {
  EXPECT_EQ(solution_from_json(R"({"bits":"1010"})").to_string(), "1010");
  EXPECT_EQ(solution_from_json(R"({"bits":[0,1,1]})").to_string(), "011");
  EXPECT_THROW(solution_from_json(R"({"bits":[0,2]})"), LoadError);
  EXPECT_THROW(solution_from_json(R"({"bits":"10x"})"), LoadError);
  EXPECT_THROW(solution_from_json(R"({"bitz":"10"})"), LoadError);
}

TEST(IoTest, ReportJsonFeedsBackAsSolution) {
  const Instance inst = testing::two_request_example();
  const SolveReport r = brute_force_ip(inst, build_conflict_sets(inst), beta_base(inst));
  const std::string text = report_to_json(r);
  const auto j = nlohmann::json::parse(text);
  EXPECT_EQ(j.at("method"), "exact");
  EXPECT_EQ(j.at("granted"), nlohmann::json({0, 1}));
  EXPECT_EQ(j.at("granted_count"), 2);
  EXPECT_EQ(j.at("objective"), -14);
  EXPECT_EQ(j.at("status"), "optimal");
  EXPECT_EQ(solution_from_json(text), r.solution);
}

TEST(IoTest, GraphsAndTopologies) {
  const MssGraph g = graph_from_json(R"({"nodes":3,"edges":[[0,1],[1,2]]})");
  EXPECT_EQ(g.node_count, 3);
  EXPECT_EQ(g.edges.size(), 2u);
  EXPECT_THROW(graph_from_json(R"({"nodes":2,"edges":[[0,0]]})"), LoadError);
  EXPECT_THROW(graph_from_json(R"({"nodes":2})"), LoadError);

  const Network undirected = topology_from_json(R"({"nodes":3,"edges":[[0,1],[1,2]]})");
  EXPECT_EQ(undirected.link_count(), 4);
  const Network directed = topology_from_json(R"({"nodes":3,"links":[[0,1],[1,2]]})");
  EXPECT_EQ(directed.link_count(), 2);
  EXPECT_EQ(topology_from_json(network_to_json(undirected)), undirected);
}

TEST(IoTest, SampleDataFiles) {
  const fs::path data(RWAP_DATA_DIR);
  const Instance ex = load_instance(data / "two_requests.json");
  EXPECT_EQ(ex, testing::two_request_example());
  const Solution opt = load_solution(data / "two_requests_optimum.json");
  EXPECT_EQ(opt.to_string(), "1001110");
  const Instance tight = load_instance(data / "tight_2_1.json");
  EXPECT_EQ(tight.variable_count(), 2);
  EXPECT_EQ(tight.request(0).working[0].length(), 2);
  EXPECT_EQ(load_graph(data / "cycle5_graph.json").edges.size(), 5u);
}

}  // namespace
}  // namespace rwap
