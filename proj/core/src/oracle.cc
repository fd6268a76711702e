#include "rwap/oracle.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

#include "rwap/error.h"

namespace rwap {

namespace {

void check_cap(int n, int cap) {
  if (cap > 62) cap = 62;
  if (n > cap) {
    throw EnumerationLimitError(std::to_string(n) + " variables exceed the enumeration cap of " +
                                std::to_string(cap));
  }
}

// Bit i of a mask is character i of the bit string.
bool lex_less(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  const int d = std::countr_zero(a ^ b);
  return ((a >> d) & 1) == 0;
}

Solution from_mask(int n, std::uint64_t mask) {
  Solution s(n);
  for (int i = 0; i < n; ++i) s.bits[i] = (mask >> i) & 1;
  return s;
}

}  // namespace

SolveReport brute_force_ip(const Instance& instance, const ConflictSets& sets,
                           const Weights& weights, int max_variables) {
  const int n = instance.variable_count();
  check_cap(n, max_variables);
  std::vector<std::uint64_t> conflicts(static_cast<std::size_t>(n), 0);
  for (auto [i, j] : conflict_pairs(instance, sets)) {
    conflicts[i] |= std::uint64_t{1} << j;
    conflicts[j] |= std::uint64_t{1} << i;
  }
  struct Block {
    std::uint64_t working, protection;
  };
  std::vector<Block> blocks;
  for (const Request& req : instance.requests()) {
    auto range = [](int begin, std::size_t len) {
      return len == 0 ? 0 : ((std::uint64_t{1} << len) - 1) << begin;
    };
    blocks.push_back({range(instance.working_offset(req.id), req.working.size()),
                      range(instance.protection_offset(req.id), req.protection.size())});
  }
  std::vector<std::int64_t> coeff(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    coeff[v] = weights.alpha * instance.length(v) - (instance.is_working(v) ? weights.beta : 0);
  }

  std::uint64_t best = 0;
  std::int64_t best_obj = 0, best_links = 0;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < end; ++mask) {
    bool ok = true;
    for (const Block& b : blocks) {
      const int w = std::popcount(mask & b.working);
      if (w > 1 || w != std::popcount(mask & b.protection)) {
        ok = false;
        break;
      }
    }
    for (std::uint64_t rest = mask; ok && rest; rest &= rest - 1) {
      if (mask & conflicts[std::countr_zero(rest)]) ok = false;
    }
    if (!ok) continue;
    std::int64_t obj = 0, links = 0;
    for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      obj += coeff[v];
      links += instance.length(v);
    }
    if (obj < best_obj || (obj == best_obj && (links < best_links ||
                                               (links == best_links && lex_less(mask, best))))) {
      best = mask;
      best_obj = obj;
      best_links = links;
    }
  }
  SolveReport report = make_report("exact", instance, sets, from_mask(n, best), weights);
  report.status = SolveStatus::kOptimal;
  report.lower_bound = report.objective;
  report.work = static_cast<std::int64_t>(end);
  return report;
}

QuboMinimum brute_force_qubo(const QuboModel& qubo, int max_variables) {
  const int n = qubo.n();
  check_cap(n, max_variables);
  QuboMinimum best;
  best.bits.assign(static_cast<std::size_t>(n), 0);
  best.energy = qubo.constant();
  if (n == 0) return best;

  std::vector<std::int64_t> field = qubo.linear();
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n), 0);
  std::uint64_t mask = 0, best_mask = 0;
  std::int64_t energy = qubo.constant();
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < end; ++k) {
    const int i = std::countr_zero(k);  // Gray code: flip bit i
    const bool on = bits[i] == 0;
    energy += on ? field[i] : -field[i];
    bits[i] = on;
    mask ^= std::uint64_t{1} << i;
    for (const auto& nb : qubo.neighbors(i)) field[nb.var] += on ? nb.coeff : -nb.coeff;
    if (energy < best.energy || (energy == best.energy && lex_less(mask, best_mask))) {
      best.energy = energy;
      best_mask = mask;
    }
  }
  for (int i = 0; i < n; ++i) best.bits[i] = (best_mask >> i) & 1;
  return best;
}

namespace {

struct Option {
  int working;     // variable index
  int protection;  // variable index
  std::int64_t cost;
};

class BranchAndBound {
 public:
  BranchAndBound(const Instance& instance, const StrongGroups& groups, const Weights& weights,
                 std::int64_t node_limit)
      : instance_(instance), node_limit_(node_limit) {
    const int n = instance.variable_count();
    var_groups_.resize(static_cast<std::size_t>(n));
    for (int g = 0; g < static_cast<int>(groups.groups.size()); ++g) {
      if (!groups.groups[g].emitted()) continue;
      for (int v : groups.groups[g].vars) var_groups_[v].push_back(g);
    }
    occupancy_.assign(groups.groups.size(), 0);

    const int nreq = instance.request_count();
    options_.resize(static_cast<std::size_t>(nreq));
    std::vector<std::int64_t> gain(static_cast<std::size_t>(nreq), 0);
    for (const Request& req : instance.requests()) {
      auto& opts = options_[req.id];
      for (int w = 0; w < static_cast<int>(req.working.size()); ++w) {
        const auto& pbar = groups.pbar[req.id][w];
        for (int p = 0; p < static_cast<int>(req.protection.size()); ++p) {
          if (std::binary_search(pbar.begin(), pbar.end(), p)) continue;
          const int xv = instance.working_var(req.id, w);
          const int yv = instance.protection_var(req.id, p);
          opts.push_back({xv, yv,
                          weights.alpha * (instance.length(xv) + instance.length(yv)) -
                              weights.beta});
        }
      }
      std::stable_sort(opts.begin(), opts.end(),
                       [](const Option& a, const Option& b) { return a.cost < b.cost; });
      if (!opts.empty()) gain[req.id] = -opts.front().cost;
    }
    order_.resize(static_cast<std::size_t>(nreq));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return gain[a] > gain[b]; });
    current_ = Solution(n);
    incumbent_ = Solution(n);
  }

  void run() {
    consider_incumbent();
    search(0);
  }

  bool aborted() const { return aborted_; }
  std::int64_t nodes() const { return nodes_; }
  const Solution& incumbent() const { return incumbent_; }
  std::int64_t incumbent_objective() const { return best_obj_; }
  std::int64_t lower_bound() const { return std::min(best_obj_, open_bound_); }

 private:
  bool available(int v) const {
    for (int g : var_groups_[v]) {
      if (occupancy_[g]) return false;
    }
    return true;
  }
  bool available(const Option& o) const { return available(o.working) && available(o.protection); }

  void set(int v, int delta) {
    current_.bits[v] = delta > 0;
    for (int g : var_groups_[v]) occupancy_[g] += delta;
    links_ += delta * instance_.length(v);
  }

  // Sum over requests at depth >= d of the cheapest still-available option
  // (or 0 when skipping is cheaper).
  std::int64_t rest_bound(std::size_t d) const {
    std::int64_t total = 0;
    for (; d < order_.size(); ++d) {
      for (const Option& o : options_[order_[d]]) {
        if (o.cost >= 0) break;
        if (available(o)) {
          total += o.cost;
          break;
        }
      }
    }
    return total;
  }

  void consider_incumbent() {
    if (obj_ < best_obj_ || (obj_ == best_obj_ && (links_ < best_links_ ||
                                                   (links_ == best_links_ &&
                                                    current_.bits < incumbent_.bits)))) {
      best_obj_ = obj_;
      best_links_ = links_;
      incumbent_ = current_;
    }
  }

  // Explores requests order_[d..]; the partial assignment is already feasible.
  void search(std::size_t d) {
    if (d == order_.size()) return;
    const std::int64_t bound = obj_ + rest_bound(d);
    if (bound >= best_obj_) return;
    const auto& opts = options_[order_[d]];
    std::size_t k = 0;
    for (; k <= opts.size(); ++k) {
      if (node_limit_ > 0 && nodes_ >= node_limit_) {
        aborted_ = true;
        break;
      }
      ++nodes_;
      if (k == opts.size()) {  // skip this request
        search(d + 1);
      } else {
        const Option& o = opts[k];
        if (!available(o)) continue;
        set(o.working, 1);
        set(o.protection, 1);
        obj_ += o.cost;
        consider_incumbent();
        search(d + 1);
        obj_ -= o.cost;
        set(o.working, -1);
        set(o.protection, -1);
      }
      if (aborted_) {
        ++k;
        break;
      }
    }
    if (aborted_) {
      // Children k.. were never explored; the frame's bound covers them.
      if (k <= opts.size()) open_bound_ = std::min(open_bound_, bound);
    }
  }

  const Instance& instance_;
  std::int64_t node_limit_;
  std::vector<std::vector<int>> var_groups_;
  std::vector<int> occupancy_;
  std::vector<std::vector<Option>> options_;
  std::vector<int> order_;

  Solution current_;
  std::int64_t obj_ = 0;
  std::int64_t links_ = 0;
  Solution incumbent_;
  std::int64_t best_obj_ = 0;
  std::int64_t best_links_ = 0;
  std::int64_t nodes_ = 0;
  bool aborted_ = false;
  std::int64_t open_bound_ = std::numeric_limits<std::int64_t>::max();
};

}  // namespace

SolveReport branch_and_bound(const Instance& instance, const StrongGroups& groups,
                             const Weights& weights, std::int64_t node_limit) {
  BranchAndBound bb(instance, groups, weights, node_limit);
  bb.run();
  SolveReport report =
      make_report("bnb", instance, build_conflict_sets(instance), bb.incumbent(), weights);
  report.work = bb.nodes();
  report.lower_bound = bb.lower_bound();
  report.status = bb.aborted() ? SolveStatus::kBudgetExhausted : SolveStatus::kOptimal;
  return report;
}

}  // namespace rwap
