#include "rwap/heuristic.h"

#include <algorithm>
#include <chrono>
#include <map>
#include <tuple>

#include "rwap/error.h"
#include "rwap/parallel.h"

namespace rwap {

void RsConfig::validate() const {
  if (permutation_budget < 1) throw ConfigError("permutation budget must be at least 1");
}

namespace {

// Lightpaths of one kind sharing a link sequence; var_by_wavelength[l] is -1
// where the path is not offered on wavelength l.
struct PathGroup {
  std::vector<int> links;
  std::vector<int> var_by_wavelength;
};

struct PathPair {
  int working;
  int protection;
  std::int64_t length;
};

struct RequestPaths {
  std::vector<PathGroup> working;
  std::vector<PathGroup> protection;
  std::vector<PathPair> pairs;  // link-disjoint, ascending (length, working, protection)
};

std::vector<PathGroup> group_paths(const Instance& instance, int request, PathKind kind) {
  const Request& req = instance.request(request);
  const auto& lps = kind == PathKind::kWorking ? req.working : req.protection;
  std::vector<PathGroup> groups;
  std::map<std::vector<int>, int> index;
  for (int j = 0; j < static_cast<int>(lps.size()); ++j) {
    auto [it, fresh] = index.try_emplace(lps[j].links, static_cast<int>(groups.size()));
    if (fresh) {
      groups.push_back({lps[j].links, std::vector<int>(instance.wavelength_count(), -1)});
    }
    int& slot = groups[it->second].var_by_wavelength[lps[j].wavelength];
    if (slot < 0) slot = instance.var(request, kind, j);
  }
  return groups;
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  for (int x : a) {
    if (std::find(b.begin(), b.end(), x) != b.end()) return false;
  }
  return true;
}

struct Outcome {
  std::int64_t granted = -1;
  std::int64_t links = 0;
  std::int64_t permutation = 0;
  std::int64_t mixed = 0;
  std::vector<std::uint8_t> bits;

  bool better_than(const Outcome& o) const {
    return std::tuple(-granted, links, permutation) < std::tuple(-o.granted, o.links, o.permutation);
  }
};

class Greedy {
 public:
  Greedy(const Instance& instance, const std::vector<RequestPaths>& paths, bool mixed)
      : instance_(instance), paths_(paths), mixed_(mixed),
        lambdas_(instance.wavelength_count()),
        occupied_(static_cast<std::size_t>(instance.network().link_count()) * lambdas_),
        free_w_(lambdas_), free_p_(lambdas_) {}

  Outcome run(const std::vector<int>& order) {
    std::fill(occupied_.begin(), occupied_.end(), 0);
    Outcome out;
    out.granted = 0;
    out.bits.assign(static_cast<std::size_t>(instance_.variable_count()), 0);
    for (int r : order) {
      const RequestPaths& rp = paths_[r];
      for (const PathPair& pair : rp.pairs) {
        const PathGroup& w = rp.working[pair.working];
        const PathGroup& p = rp.protection[pair.protection];
        mark_free(w, free_w_);
        mark_free(p, free_p_);
        int lw = -1, lp = -1;
        for (int l = 0; l < lambdas_ && lw < 0; ++l) {
          if (free_w_[l] && free_p_[l]) lw = lp = l;
        }
        if (lw < 0 && mixed_) {
          for (int a = 0; a < lambdas_ && lw < 0; ++a) {
            if (!free_w_[a]) continue;
            for (int b = 0; b < lambdas_; ++b) {
              if (b != a && free_p_[b]) {
                lw = a;
                lp = b;
                break;
              }
            }
          }
        }
        if (lw < 0) continue;
        occupy(w.links, lw);
        occupy(p.links, lp);
        out.bits[w.var_by_wavelength[lw]] = 1;
        out.bits[p.var_by_wavelength[lp]] = 1;
        out.links += pair.length;
        ++out.granted;
        if (lw != lp) ++out.mixed;
        break;
      }
    }
    return out;
  }

 private:
  void mark_free(const PathGroup& g, std::vector<char>& free) const {
    for (int l = 0; l < lambdas_; ++l) {
      bool ok = g.var_by_wavelength[l] >= 0;
      for (std::size_t k = 0; ok && k < g.links.size(); ++k) {
        ok = !occupied_[static_cast<std::size_t>(g.links[k]) * lambdas_ + l];
      }
      free[l] = ok;
    }
  }
  void occupy(const std::vector<int>& links, int l) {
    for (int e : links) occupied_[static_cast<std::size_t>(e) * lambdas_ + l] = 1;
  }

  const Instance& instance_;
  const std::vector<RequestPaths>& paths_;
  bool mixed_;
  int lambdas_;
  std::vector<char> occupied_;
  std::vector<char> free_w_;
  std::vector<char> free_p_;
};

}  // namespace

SolveReport rs_heur(const Instance& instance, const ConflictSets& sets, const RsConfig& config,
                    const Weights& weights) {
  config.validate();
  const int nreq = instance.request_count();
  std::vector<RequestPaths> paths(static_cast<std::size_t>(nreq));
  for (int r = 0; r < nreq; ++r) {
    RequestPaths& rp = paths[r];
    rp.working = group_paths(instance, r, PathKind::kWorking);
    rp.protection = group_paths(instance, r, PathKind::kProtection);
    for (int a = 0; a < static_cast<int>(rp.working.size()); ++a) {
      for (int b = 0; b < static_cast<int>(rp.protection.size()); ++b) {
        if (!disjoint(rp.working[a].links, rp.protection[b].links)) continue;
        rp.pairs.push_back({a, b,
                            static_cast<std::int64_t>(rp.working[a].links.size() +
                                                      rp.protection[b].links.size())});
      }
    }
    std::sort(rp.pairs.begin(), rp.pairs.end(), [](const PathPair& x, const PathPair& y) {
      return std::tie(x.length, x.working, x.protection) <
             std::tie(y.length, y.working, y.protection);
    });
  }

  const auto start = std::chrono::steady_clock::now();
  auto out_of_time = [&] {
    if (config.time_limit_seconds <= 0) return false;
    std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start;
    return spent.count() >= config.time_limit_seconds;
  };

  const int threads = static_cast<int>(
      std::min<std::int64_t>(resolve_threads(config.threads), config.permutation_budget));
  std::vector<Outcome> best(static_cast<std::size_t>(threads));
  std::vector<std::int64_t> done(static_cast<std::size_t>(threads), 0);
  parallel_for(threads, threads, [&](int t) {
    Greedy greedy(instance, paths, config.mixed_wavelengths);
    std::vector<int> order(static_cast<std::size_t>(nreq));
    for (std::int64_t k = t; k < config.permutation_budget; k += threads) {
      if (k != t && out_of_time()) break;
      for (int i = 0; i < nreq; ++i) order[i] = i;
      Rng rng(derive_seed(config.seed, kPermutationStream, static_cast<std::uint64_t>(k)));
      for (int i = nreq - 1; i > 0; --i) {
        std::swap(order[i], order[uniform_below(rng, static_cast<std::uint64_t>(i) + 1)]);
      }
      Outcome o = greedy.run(order);
      o.permutation = k;
      ++done[t];
      if (best[t].granted < 0 || o.better_than(best[t])) best[t] = std::move(o);
    }
  });

  Outcome winner = std::move(best[0]);
  std::int64_t total_done = done[0];
  for (int t = 1; t < threads; ++t) {
    total_done += done[t];
    if (best[t].granted >= 0 && best[t].better_than(winner)) winner = std::move(best[t]);
  }

  Solution s(instance.variable_count());
  s.bits = std::move(winner.bits);
  SolveReport report = make_report("rs", instance, sets, std::move(s), weights);
  report.status = SolveStatus::kHeuristic;
  report.work = total_done;
  report.notes.push_back("best permutation " + std::to_string(winner.permutation));
  if (winner.mixed > 0) {
    report.notes.push_back("mixed-wavelength grants: " + std::to_string(winner.mixed));
  }
  return report;
}

}  // namespace rwap
