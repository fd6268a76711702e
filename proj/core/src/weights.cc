#include "rwap/weights.h"

#include <algorithm>
#include <numeric>

#include "rwap/error.h"

namespace rwap {

std::string to_string(WeightSource s) {
  switch (s) {
    case WeightSource::kExplicit: return "explicit";
    case WeightSource::kBaseFormula: return "base-formula";
    case WeightSource::kTightEnumeration: return "tight-enumeration";
  }
  return "?";
}

std::optional<std::int64_t> compute_m(const Instance& instance) {
  std::optional<std::int64_t> m;
  for (const Request& req : instance.requests()) {
    if (!req.grantable()) continue;
    std::int64_t w = 0;
    std::int64_t p = 0;
    for (const auto& lp : req.working) w = std::max(w, lp.length());
    for (const auto& lp : req.protection) p = std::max(p, lp.length());
    m = std::max(m.value_or(0), w + p);
  }
  return m;
}

Weights beta_base(const Instance& instance, std::int64_t alpha) {
  if (alpha <= 0) throw ConfigError("alpha must be positive");
  const auto m = compute_m(instance);
  if (!m) throw UndefinedMError("M is undefined: no request has both working and protection lightpaths");
  const std::int64_t r = instance.request_count();
  Weights w;
  w.alpha = alpha;
  w.beta = alpha * (r * (*m - 2) + 2) + 1;
  w.m_value = m;
  w.beta_base = r * (*m - 2) + 3;
  w.source = WeightSource::kBaseFormula;
  return w;
}

Weights explicit_weights(const Instance& instance, std::int64_t alpha, std::int64_t beta) {
  Weights w;
  w.alpha = alpha;
  w.beta = beta;
  w.m_value = compute_m(instance);
  if (w.m_value) w.beta_base = instance.request_count() * (*w.m_value - 2) + 3;
  return w;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  num_ = g ? num / g : num;
  den_ = g ? den / g : den;
}

std::int64_t Rational::next_integer_above() const {
  // floor(num/den) + 1 for positive den.
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q + 1;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __extension__ using wide = __int128;
  const wide lhs = static_cast<wide>(a.num_) * b.den_;
  const wide rhs = static_cast<wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

namespace {

struct LevelSearch {
  const Instance& instance;
  // conflicts[v] sorted list of variables v may not be combined with.
  std::vector<std::vector<int>> conflicts;
  std::vector<std::uint8_t> chosen;
  FeasibleLevels out;

  bool compatible(int v) const {
    for (int u : conflicts[v]) {
      if (chosen[u]) return false;
    }
    return true;
  }

  void record(std::int64_t granted, std::int64_t links) {
    auto& slot = out.levels[granted];
    if (!slot) {
      slot = FeasibleLevels::Level{links, links, 0};
    }
    slot->min_links = std::min(slot->min_links, links);
    slot->max_links = std::max(slot->max_links, links);
    ++slot->solutions;
    ++out.feasible_solutions;
  }

  void visit(int r, std::int64_t granted, std::int64_t links) {
    if (r == instance.request_count()) {
      record(granted, links);
      return;
    }
    visit(r + 1, granted, links);
    const Request& req = instance.request(r);
    for (int w = 0; w < static_cast<int>(req.working.size()); ++w) {
      const int wv = instance.working_var(r, w);
      if (!compatible(wv)) continue;
      chosen[wv] = 1;
      for (int p = 0; p < static_cast<int>(req.protection.size()); ++p) {
        const int pv = instance.protection_var(r, p);
        if (!compatible(pv)) continue;
        chosen[pv] = 1;
        visit(r + 1, granted + 1, links + instance.length(wv) + instance.length(pv));
        chosen[pv] = 0;
      }
      chosen[wv] = 0;
    }
  }
};

}  // namespace

FeasibleLevels enumerate_feasible_levels(const Instance& instance, const ConflictSets& sets,
                                         int max_variables) {
  if (instance.variable_count() > max_variables) {
    throw EnumerationLimitError("instance has " + std::to_string(instance.variable_count()) +
                                " variables; enumeration cap is " + std::to_string(max_variables));
  }
  LevelSearch search{instance, std::vector<std::vector<int>>(instance.variable_count()),
                     std::vector<std::uint8_t>(instance.variable_count(), 0), {}};
  for (const auto& [i, j] : conflict_pairs(instance, sets)) {
    search.conflicts[i].push_back(j);
    search.conflicts[j].push_back(i);
  }
  search.out.levels.resize(instance.request_count() + 1);
  search.visit(0, 0, 0);
  return search.out;
}

OmegaReport compute_omega(const FeasibleLevels& levels) {
  OmegaReport report;
  const auto& lv = levels.levels;
  for (std::size_t k = 0; k + 1 < lv.size(); ++k) {
    if (!lv[k] || !lv[k + 1]) continue;
    const Rational value(lv[k + 1]->max_links - lv[k]->min_links, 1);
    if (!report.omega_eq || value > *report.omega_eq) report.omega_eq = value;
  }
  for (std::size_t hi = 0; hi < lv.size(); ++hi) {
    if (!lv[hi]) continue;
    for (std::size_t lo = 0; lo < hi; ++lo) {
      if (!lv[lo]) continue;
      const Rational value(lv[hi]->max_links - lv[lo]->min_links,
                           static_cast<std::int64_t>(hi - lo));
      if (!report.omega_gt || value > *report.omega_gt) report.omega_gt = value;
    }
  }
  if (report.omega_eq) report.beta_tight = report.omega_eq->next_integer_above();
  return report;
}

bool check_prioritization(const FeasibleLevels& levels, std::int64_t alpha, std::int64_t beta) {
  const auto& lv = levels.levels;
  for (std::size_t hi = 0; hi < lv.size(); ++hi) {
    if (!lv[hi]) continue;
    const std::int64_t worst_hi = alpha * lv[hi]->max_links - beta * static_cast<std::int64_t>(hi);
    for (std::size_t lo = 0; lo < hi; ++lo) {
      if (!lv[lo]) continue;
      const std::int64_t best_lo = alpha * lv[lo]->min_links - beta * static_cast<std::int64_t>(lo);
      if (!(worst_hi < best_lo)) return false;
    }
  }
  return true;
}

Instance tight_example(int l_a, int l_b) {
  if (l_a < 1 || l_b < 1) throw ConfigError("path lengths must be at least 1");
  // Node 0 = s, node 1 = t, then l_a - 1 inner nodes of path a, l_b - 1 of path b.
  const int nodes = 2 + (l_a - 1) + (l_b - 1);
  std::vector<Link> links;
  auto build_path = [&links](int first_inner, int length) {
    std::vector<int> ids;
    int prev = 0;
    for (int i = 0; i < length; ++i) {
      const int next = (i + 1 == length) ? 1 : first_inner + i;
      ids.push_back(static_cast<int>(links.size()));
      links.push_back({prev, next});
      prev = next;
    }
    return ids;
  };
  Lightpath a{build_path(2, l_a), 0};
  Lightpath b{build_path(2 + (l_a - 1), l_b), 0};
  Request req{0, 0, 1, {std::move(a)}, {std::move(b)}};
  return Instance(Network(nodes, std::move(links)), 1, {std::move(req)});
}

}  // namespace rwap
