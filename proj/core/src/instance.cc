#include "rwap/instance.h"

#include <algorithm>
#include <string>

#include "rwap/error.h"

namespace rwap {
namespace {

std::string where(int r, PathKind kind, int index) {
  return "request " + std::to_string(r) + (kind == PathKind::kWorking ? " working " : " protection ") +
         std::to_string(index);
}

void validate_lightpath(const Network& net, int wavelength_count, const Request& req,
                        PathKind kind, int index, const Lightpath& lp) {
  if (lp.links.empty()) throw LoadError(where(req.id, kind, index) + ": empty lightpath");
  if (lp.wavelength < 0 || lp.wavelength >= wavelength_count) {
    throw LoadError(where(req.id, kind, index) + ": wavelength " +
                    std::to_string(lp.wavelength) + " out of range");
  }
  for (int id : lp.links) {
    if (id < 0 || id >= net.link_count()) {
      throw LoadError(where(req.id, kind, index) + ": unknown link " + std::to_string(id));
    }
  }
  if (net.link(lp.links.front()).tail != req.source) {
    throw LoadError(where(req.id, kind, index) + ": does not start at the request source");
  }
  if (net.link(lp.links.back()).head != req.destination) {
    throw LoadError(where(req.id, kind, index) + ": does not end at the request destination");
  }
  for (std::size_t i = 1; i < lp.links.size(); ++i) {
    if (net.link(lp.links[i - 1]).head != net.link(lp.links[i]).tail) {
      throw LoadError(where(req.id, kind, index) + ": links " +
                      std::to_string(lp.links[i - 1]) + " and " + std::to_string(lp.links[i]) +
                      " are not contiguous");
    }
  }
}

}  // namespace

Network::Network(int node_count, std::vector<Link> links)
    : node_count_(node_count), links_(std::move(links)) {
  if (node_count_ < 0) throw LoadError("negative node count");
  for (std::size_t i = 0; i < links_.size(); ++i) {
    const Link& l = links_[i];
    if (l.tail < 0 || l.tail >= node_count_ || l.head < 0 || l.head >= node_count_) {
      throw LoadError("link " + std::to_string(i) + " has an endpoint out of range");
    }
    if (l.tail == l.head) throw LoadError("link " + std::to_string(i) + " is a self-loop");
  }
}

Instance::Instance(Network network, int wavelength_count, std::vector<Request> requests)
    : network_(std::move(network)),
      wavelength_count_(wavelength_count),
      requests_(std::move(requests)) {
  if (wavelength_count_ < 0) throw LoadError("negative wavelength count");
  for (std::size_t r = 0; r < requests_.size(); ++r) {
    const Request& req = requests_[r];
    if (req.id != static_cast<int>(r)) {
      throw LoadError("request ids must be dense and ordered; found " + std::to_string(req.id) +
                      " at position " + std::to_string(r));
    }
    if (req.source < 0 || req.source >= network_.node_count() || req.destination < 0 ||
        req.destination >= network_.node_count()) {
      throw LoadError("request " + std::to_string(r) + " has an endpoint out of range");
    }
    if (req.source == req.destination) {
      throw LoadError("request " + std::to_string(r) + " has source == destination");
    }
    working_offset_.push_back(static_cast<int>(refs_.size()));
    for (std::size_t w = 0; w < req.working.size(); ++w) {
      validate_lightpath(network_, wavelength_count_, req, PathKind::kWorking, static_cast<int>(w),
                         req.working[w]);
      refs_.push_back({static_cast<int>(r), PathKind::kWorking, static_cast<int>(w)});
    }
    protection_offset_.push_back(static_cast<int>(refs_.size()));
    for (std::size_t p = 0; p < req.protection.size(); ++p) {
      validate_lightpath(network_, wavelength_count_, req, PathKind::kProtection,
                         static_cast<int>(p), req.protection[p]);
      refs_.push_back({static_cast<int>(r), PathKind::kProtection, static_cast<int>(p)});
    }
  }
  lengths_.reserve(refs_.size());
  sorted_links_.reserve(refs_.size());
  for (int v = 0; v < variable_count(); ++v) {
    const Lightpath& lp = lightpath(v);
    lengths_.push_back(lp.length());
    std::vector<int> s = lp.links;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    sorted_links_.push_back(std::move(s));
  }
}

int Instance::var(int request, PathKind kind, int index) const {
  const Request& req = requests_.at(request);
  if (kind == PathKind::kWorking) {
    if (index < 0 || index >= static_cast<int>(req.working.size())) {
      throw std::out_of_range("working index out of range");
    }
    return working_offset_[request] + index;
  }
  if (index < 0 || index >= static_cast<int>(req.protection.size())) {
    throw std::out_of_range("protection index out of range");
  }
  return protection_offset_[request] + index;
}

const Lightpath& Instance::lightpath(int var) const {
  const VarRef& v = refs_.at(var);
  const Request& req = requests_[v.request];
  return v.working() ? req.working[v.index] : req.protection[v.index];
}

std::string Instance::var_name(int var) const {
  const VarRef& v = refs_.at(var);
  if (v.working()) return "x_r" + std::to_string(v.request) + "_w" + std::to_string(v.index);
  return "y_r" + std::to_string(v.request) + "_p" + std::to_string(v.index);
}

std::string Solution::to_string() const {
  std::string s(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) s[i] = '1';
  }
  return s;
}

Solution Solution::from_string(std::string_view text) {
  Solution s(static_cast<int>(text.size()));
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      s.bits[i] = 1;
    } else if (text[i] != '0') {
      throw LoadError("bit string contains '" + std::string(1, text[i]) + "'");
    }
  }
  return s;
}

void check_dimension(const Instance& instance, const Solution& solution) {
  if (solution.size() != instance.variable_count()) {
    throw DimensionError("solution has " + std::to_string(solution.size()) +
                         " bits, instance has " + std::to_string(instance.variable_count()) +
                         " variables");
  }
}

std::int64_t f_alpha(const Instance& instance, const Solution& solution) {
  check_dimension(instance, solution);
  std::int64_t total = 0;
  for (int v = 0; v < solution.size(); ++v) {
    if (solution[v]) total += instance.length(v);
  }
  return total;
}

std::int64_t f_beta(const Instance& instance, const Solution& solution) {
  check_dimension(instance, solution);
  std::int64_t total = 0;
  for (int v = 0; v < solution.size(); ++v) {
    if (solution[v] && instance.is_working(v)) ++total;
  }
  return total;
}

std::int64_t ip_objective(const Instance& instance, const Solution& solution, std::int64_t alpha,
                          std::int64_t beta) {
  return alpha * f_alpha(instance, solution) - beta * f_beta(instance, solution);
}

std::vector<int> granted_requests(const Instance& instance, const Solution& solution) {
  check_dimension(instance, solution);
  std::vector<int> out;
  for (int r = 0; r < instance.request_count(); ++r) {
    const int begin = instance.working_offset(r);
    const int end = instance.protection_offset(r);
    for (int v = begin; v < end; ++v) {
      if (solution[v]) {
        out.push_back(r);
        break;
      }
    }
  }
  return out;
}

}  // namespace rwap
