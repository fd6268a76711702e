#ifndef RWAP_INSTANCE_H_
#define RWAP_INSTANCE_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rwap {

struct Link {
  int tail = 0;
  int head = 0;
  friend bool operator==(const Link&, const Link&) = default;
};

// Directed multigraph. Link ids are the positions in `links()`.
class Network {
 public:
  Network() = default;
  // Throws LoadError on out-of-range endpoints or self-loops.
  Network(int node_count, std::vector<Link> links);

  int node_count() const { return node_count_; }
  int link_count() const { return static_cast<int>(links_.size()); }
  const Link& link(int id) const { return links_.at(id); }
  const std::vector<Link>& links() const { return links_; }

  friend bool operator==(const Network&, const Network&) = default;

 private:
  int node_count_ = 0;
  std::vector<Link> links_;
};

// A path (ordered link ids) paired with a wavelength.
struct Lightpath {
  std::vector<int> links;
  int wavelength = 0;

  std::int64_t length() const { return static_cast<std::int64_t>(links.size()); }
  friend bool operator==(const Lightpath&, const Lightpath&) = default;
};

struct Request {
  int id = 0;
  int source = 0;
  int destination = 0;
  std::vector<Lightpath> working;
  std::vector<Lightpath> protection;

  bool grantable() const { return !working.empty() && !protection.empty(); }
  friend bool operator==(const Request&, const Request&) = default;
};

enum class PathKind : std::uint8_t { kWorking = 0, kProtection = 1 };

// Identifies one decision variable: x (working) or y (protection) of a request.
struct VarRef {
  int request = 0;
  PathKind kind = PathKind::kWorking;
  int index = 0;

  bool working() const { return kind == PathKind::kWorking; }
  friend auto operator<=>(const VarRef&, const VarRef&) = default;
};

// Network, wavelength count, and requests together with the dense variable
// numbering. Variables are ordered by request id, then working before
// protection, then local lightpath index. Immutable after construction.
class Instance {
 public:
  Instance() = default;
  // Validates everything (request ids dense, lightpaths contiguous and
  // source-to-destination, wavelengths in range). Throws LoadError.
  Instance(Network network, int wavelength_count, std::vector<Request> requests);

  const Network& network() const { return network_; }
  int wavelength_count() const { return wavelength_count_; }
  const std::vector<Request>& requests() const { return requests_; }
  const Request& request(int r) const { return requests_.at(r); }
  int request_count() const { return static_cast<int>(requests_.size()); }

  int variable_count() const { return static_cast<int>(refs_.size()); }
  int var(int request, PathKind kind, int index) const;
  int working_var(int request, int w) const { return var(request, PathKind::kWorking, w); }
  int protection_var(int request, int p) const { return var(request, PathKind::kProtection, p); }
  // First variable of a request's working (resp. protection) block.
  int working_offset(int request) const { return working_offset_.at(request); }
  int protection_offset(int request) const { return protection_offset_.at(request); }

  const VarRef& ref(int var) const { return refs_.at(var); }
  const Lightpath& lightpath(int var) const;
  std::int64_t length(int var) const { return lengths_[var]; }
  bool is_working(int var) const { return refs_[var].working(); }
  // Link ids of the variable's lightpath, sorted ascending and deduplicated.
  std::span<const int> sorted_links(int var) const { return sorted_links_[var]; }

  // `x_r<i>_w<j>` / `y_r<i>_p<j>`.
  std::string var_name(int var) const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.network_ == b.network_ && a.wavelength_count_ == b.wavelength_count_ &&
           a.requests_ == b.requests_;
  }

 private:
  Network network_;
  int wavelength_count_ = 0;
  std::vector<Request> requests_;

  std::vector<VarRef> refs_;
  std::vector<std::int64_t> lengths_;
  std::vector<std::vector<int>> sorted_links_;
  std::vector<int> working_offset_;
  std::vector<int> protection_offset_;
};

// One bit per variable, in Instance variable order.
struct Solution {
  std::vector<std::uint8_t> bits;

  Solution() = default;
  explicit Solution(int n) : bits(static_cast<std::size_t>(n), 0) {}

  int size() const { return static_cast<int>(bits.size()); }
  bool operator[](int i) const { return bits[i] != 0; }

  std::string to_string() const;
  // Parses a "0101..." string; throws LoadError on other characters.
  static Solution from_string(std::string_view text);

  friend bool operator==(const Solution&, const Solution&) = default;
};

// Number of links used: sum of lengths of every selected lightpath.
std::int64_t f_alpha(const Instance& instance, const Solution& solution);
// Number of selected working lightpaths (granted requests when feasible).
std::int64_t f_beta(const Instance& instance, const Solution& solution);
// alpha * f_alpha - beta * f_beta.
std::int64_t ip_objective(const Instance& instance, const Solution& solution,
                          std::int64_t alpha, std::int64_t beta);

// Ids of requests that have a working bit set.
std::vector<int> granted_requests(const Instance& instance, const Solution& solution);

// Throws DimensionError if the solution length differs from the instance.
void check_dimension(const Instance& instance, const Solution& solution);

}  // namespace rwap

#endif  // RWAP_INSTANCE_H_
