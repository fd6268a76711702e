#include "rwap/io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rwap/error.h"
#include "rwap/ip.h"

namespace rwap {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw LoadError(std::string("invalid JSON: ") + e.what());
  }
}

// Runs `fn`, turning JSON access errors (missing keys, wrong types) into LoadError.
template <typename Fn>
auto guarded(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw LoadError(std::string("malformed ") + what + ": " + e.what());
  }
}

Lightpath lightpath_from(const json& j) {
  return {j.at("links").get<std::vector<int>>(), j.at("wavelength").get<int>()};
}

json lightpath_to(const Lightpath& lp) { return {{"links", lp.links}, {"wavelength", lp.wavelength}}; }

std::vector<Link> links_from(const json& arr) {
  std::vector<Link> links;
  for (const json& l : arr) {
    if (!l.is_array() || l.size() != 2) throw LoadError("a link must be a [tail, head] pair");
    links.push_back({l[0].get<int>(), l[1].get<int>()});
  }
  return links;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw LoadError("cannot open " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Instance instance_from_json(const std::string& text) {
  const json j = parse(text);
  return guarded("instance", [&] {
    Network net(j.at("nodes").get<int>(), links_from(j.at("links")));
    std::vector<Request> requests;
    for (const json& r : j.at("requests")) {
      Request req;
      req.id = static_cast<int>(requests.size());
      req.source = r.at("source").get<int>();
      req.destination = r.at("dest").get<int>();
      for (const json& lp : r.at("working")) req.working.push_back(lightpath_from(lp));
      for (const json& lp : r.at("protection")) req.protection.push_back(lightpath_from(lp));
      requests.push_back(std::move(req));
    }
    return Instance(std::move(net), j.at("wavelengths").get<int>(), std::move(requests));
  });
}

std::string instance_to_json(const Instance& instance) {
  json links = json::array();
  for (const Link& l : instance.network().links()) links.push_back({l.tail, l.head});
  json requests = json::array();
  for (const Request& r : instance.requests()) {
    json w = json::array(), p = json::array();
    for (const auto& lp : r.working) w.push_back(lightpath_to(lp));
    for (const auto& lp : r.protection) p.push_back(lightpath_to(lp));
    requests.push_back(
        {{"source", r.source}, {"dest", r.destination}, {"working", w}, {"protection", p}});
  }
  json j = {{"nodes", instance.network().node_count()},
            {"links", links},
            {"wavelengths", instance.wavelength_count()},
            {"requests", requests}};
  return j.dump() + "\n";
}

Instance load_instance(const std::filesystem::path& path) {
  return instance_from_json(read_file(path));
}

void save_instance(const Instance& instance, const std::filesystem::path& path) {
  write_file_atomically(path, instance_to_json(instance));
}

Solution solution_from_json(const std::string& text) {
  const json j = parse(text);
  return guarded("solution", [&] {
    const json& bits = j.at("bits");
    if (bits.is_string()) return Solution::from_string(bits.get<std::string>());
    Solution s;
    for (const json& b : bits) {
      const int v = b.get<int>();
      if (v != 0 && v != 1) throw LoadError("solution bits must be 0 or 1");
      s.bits.push_back(static_cast<std::uint8_t>(v));
    }
    return s;
  });
}

Solution load_solution(const std::filesystem::path& path) {
  return solution_from_json(read_file(path));
}

std::string report_to_json(const SolveReport& r) {
  json j = {{"method", r.method},
            {"bits", r.solution.to_string()},
            {"granted", r.granted},
            {"granted_count", r.granted.size()},
            {"objective", r.objective},
            {"f_alpha", r.f_alpha},
            {"f_beta", r.f_beta},
            {"alpha", r.alpha},
            {"beta", r.beta},
            {"feasible", r.feasible},
            {"repaired", r.repaired},
            {"status", to_string(r.status)},
            {"work", r.work},
            {"notes", r.notes}};
  if (r.lower_bound) j["lower_bound"] = *r.lower_bound;
  if (r.energy) j["energy"] = *r.energy;
  if (r.rho) j["rho"] = *r.rho;
  return j.dump(2) + "\n";
}

MssGraph graph_from_json(const std::string& text) {
  const json j = parse(text);
  MssGraph g = guarded("graph", [&] {
    MssGraph out;
    out.node_count = j.at("nodes").get<int>();
    for (const json& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw LoadError("an edge must be a [u, v] pair");
      out.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return out;
  });
  g.validate();
  return g;
}

MssGraph load_graph(const std::filesystem::path& path) { return graph_from_json(read_file(path)); }

Network topology_from_json(const std::string& text) {
  const json j = parse(text);
  return guarded("topology", [&] {
    const int nodes = j.at("nodes").get<int>();
    if (j.contains("links")) return Network(nodes, links_from(j.at("links")));
    std::vector<Link> links;
    for (const Link& e : links_from(j.at("edges"))) {
      links.push_back(e);
      links.push_back({e.head, e.tail});
    }
    return Network(nodes, std::move(links));
  });
}

Network load_topology(const std::filesystem::path& path) {
  return topology_from_json(read_file(path));
}

std::string network_to_json(const Network& network) {
  json links = json::array();
  for (const Link& l : network.links()) links.push_back({l.tail, l.head});
  return json{{"nodes", network.node_count()}, {"links", links}}.dump() + "\n";
}

}  // namespace rwap
