#include "rwap/conflicts.h"

#include <algorithm>
#include <map>
#include <span>

namespace rwap {
namespace {

bool intersects(std::span<const int> a, std::span<const int> b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

// Buckets variables by (link, wavelength); key = link * |Lambda| + wavelength.
std::map<std::int64_t, std::vector<int>> link_wavelength_index(const Instance& instance) {
  std::map<std::int64_t, std::vector<int>> index;
  const std::int64_t lambdas = instance.wavelength_count();
  for (int v = 0; v < instance.variable_count(); ++v) {
    const int wl = instance.lightpath(v).wavelength;
    for (int e : instance.sorted_links(v)) index[e * lambdas + wl].push_back(v);
  }
  return index;
}

}  // namespace

ConflictSets build_conflict_sets(const Instance& instance) {
  ConflictSets sets;

  for (const Request& req : instance.requests()) {
    for (int w = 0; w < static_cast<int>(req.working.size()); ++w) {
      const auto wl = instance.sorted_links(instance.working_var(req.id, w));
      for (int p = 0; p < static_cast<int>(req.protection.size()); ++p) {
        if (intersects(wl, instance.sorted_links(instance.protection_var(req.id, p)))) {
          sets.c1.push_back({req.id, w, p});
        }
      }
    }
  }

  // Same-wavelength pairs sharing a link are exactly the pairs that co-occur
  // in some (link, wavelength) bucket.
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [key, vars] : link_wavelength_index(instance)) {
    for (std::size_t a = 0; a < vars.size(); ++a) {
      for (std::size_t b = a + 1; b < vars.size(); ++b) pairs.emplace_back(vars[a], vars[b]);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  for (const auto& [i, j] : pairs) {
    const VarRef& a = instance.ref(i);
    const VarRef& b = instance.ref(j);
    if (a.working() && b.working()) {
      sets.c3.push_back({a.request, b.request, a.index, b.index});
    } else if (!a.working() && !b.working()) {
      sets.c4.push_back({a.request, b.request, a.index, b.index});
    } else if (a.request != b.request) {
      const VarRef& w = a.working() ? a : b;
      const VarRef& p = a.working() ? b : a;
      sets.c2.push_back({w.request, p.request, w.index, p.index});
    }
    // Same-request working/protection overlap is already in C1.
  }

  std::sort(sets.c1.begin(), sets.c1.end());
  std::sort(sets.c2.begin(), sets.c2.end());
  std::sort(sets.c3.begin(), sets.c3.end());
  std::sort(sets.c4.begin(), sets.c4.end());
  return sets;
}

std::vector<std::pair<int, int>> conflict_pairs(const Instance& instance,
                                                const ConflictSets& sets) {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(sets.total()));
  auto add = [&out](int i, int j) { out.emplace_back(std::min(i, j), std::max(i, j)); };
  for (const auto& t : sets.c1) add(instance.working_var(t.r, t.w), instance.protection_var(t.r, t.p));
  for (const auto& t : sets.c2) add(instance.working_var(t.r1, t.w), instance.protection_var(t.r2, t.p));
  for (const auto& t : sets.c3) add(instance.working_var(t.r1, t.w1), instance.working_var(t.r2, t.w2));
  for (const auto& t : sets.c4) {
    add(instance.protection_var(t.r1, t.p1), instance.protection_var(t.r2, t.p2));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::int64_t StrongGroups::emitted_group_count() const {
  return std::count_if(groups.begin(), groups.end(),
                       [](const LinkWavelengthGroup& g) { return g.emitted(); });
}

StrongGroups build_strong_groups(const Instance& instance) {
  StrongGroups out;
  out.pbar.resize(instance.request_count());
  for (const Request& req : instance.requests()) {
    auto& per_w = out.pbar[req.id];
    per_w.resize(req.working.size());
    for (int w = 0; w < static_cast<int>(req.working.size()); ++w) {
      const auto wl = instance.sorted_links(instance.working_var(req.id, w));
      for (int p = 0; p < static_cast<int>(req.protection.size()); ++p) {
        if (intersects(wl, instance.sorted_links(instance.protection_var(req.id, p)))) {
          per_w[w].push_back(p);
        }
      }
    }
  }
  const std::int64_t lambdas = instance.wavelength_count();
  for (auto& [key, vars] : link_wavelength_index(instance)) {
    out.groups.push_back({static_cast<int>(key / lambdas), static_cast<int>(key % lambdas),
                          std::move(vars)});
  }
  return out;
}

double ConstraintCounts::base_ratio() const {
  return variables == 0 ? 0.0 : static_cast<double>(base_constraints()) / variables;
}
double ConstraintCounts::strong_ratio() const {
  return variables == 0 ? 0.0 : static_cast<double>(strong_constraints()) / variables;
}
double ConstraintCounts::strong_ratio_all_groups() const {
  return variables == 0 ? 0.0 : static_cast<double>(strong_constraints_all_groups()) / variables;
}

ConstraintCounts count_constraints(const Instance& instance, const ConflictSets& sets,
                                   const StrongGroups& groups) {
  ConstraintCounts c;
  c.requests = instance.request_count();
  c.variables = instance.variable_count();
  c.c1 = static_cast<std::int64_t>(sets.c1.size());
  c.c2 = static_cast<std::int64_t>(sets.c2.size());
  c.c3 = static_cast<std::int64_t>(sets.c3.size());
  c.c4 = static_cast<std::int64_t>(sets.c4.size());
  for (const Request& r : instance.requests()) {
    c.working_lightpaths += static_cast<std::int64_t>(r.working.size());
  }
  c.groups_total = static_cast<std::int64_t>(groups.groups.size());
  c.groups_emitted = groups.emitted_group_count();
  return c;
}

}  // namespace rwap
