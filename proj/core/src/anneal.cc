#include "rwap/anneal.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "rwap/error.h"
#include "rwap/parallel.h"
#include "rwap/verify.h"

namespace rwap {

void AnnealConfig::validate() const {
  if (iterations < 0) throw ConfigError("iterations must be non-negative");
  if (replicas < 1) throw ConfigError("replicas must be at least 1");
  if (!(t_min > 0) || !(t_max >= t_min)) throw ConfigError("require 0 < t_min <= t_max");
  if (!(offset_increment >= 0)) throw ConfigError("offset increment must be non-negative");
  if (exchange_interval < 1) throw ConfigError("exchange interval must be at least 1");
  if (check_interval < 0) throw ConfigError("check interval must be non-negative");
}

AnnealConfig default_anneal_config(std::int64_t rho, std::uint64_t seed, std::int64_t iterations) {
  AnnealConfig c;
  c.iterations = iterations;
  c.replicas = 8;
  c.t_max = std::max<double>(1.0, static_cast<double>(rho));
  c.t_min = 1.0;
  c.offset_increment = std::max<double>(1.0, static_cast<double>(rho) / 100.0);
  c.exchange_interval = 100;
  c.seed = seed;
  c.mode = AnnealMode::kTempering;
  return c;
}

namespace {

// Flips whose acceptance probability is below exp(-kCutoff) are not drawn.
constexpr double kCutoff = 40.0;

struct ChainState {
  std::vector<std::uint8_t> bits;
  std::vector<std::int64_t> field;  // linear_i + sum_j q_ij s_j
  std::vector<std::int64_t> delta;  // energy change of flipping i
  std::int64_t energy = 0;
  double offset = 0;
};

struct Event {
  std::int64_t iteration;
  std::int64_t energy;
};

struct Replica {
  ChainState state;
  Rng rng;
  double temperature = 1;
  std::vector<std::uint8_t> best_bits;
  std::int64_t best_energy = 0;
  std::int64_t best_iteration = -1;
  std::int64_t accepted = 0;
  std::int64_t stalls = 0;
  std::vector<Event> events;  // improvements of this replica's best within a round
  std::vector<int> candidates;
};

void init_state(const QuboModel& q, ChainState& s) {
  const int n = q.n();
  s.bits.assign(static_cast<std::size_t>(n), 0);
  s.field = q.linear();
  s.delta = q.linear();
  s.energy = q.constant();
  s.offset = 0;
}

void apply_flip(const QuboModel& q, ChainState& s, int i) {
  const bool on = s.bits[i] == 0;
  s.energy += s.delta[i];
  s.bits[i] = on ? 1 : 0;
  s.delta[i] = -s.delta[i];
  for (const auto& nb : q.neighbors(i)) {
    const std::int64_t change = on ? nb.coeff : -nb.coeff;
    s.field[nb.var] += change;
    s.delta[nb.var] = s.bits[nb.var] ? -s.field[nb.var] : s.field[nb.var];
  }
}

// One parallel-trial iteration. Visiting the plausible flips in uniformly
// random order and taking the first whose Bernoulli test passes selects
// uniformly among the flips that would pass, without drawing the rest.
bool step(const QuboModel& q, Replica& rep, double offset_increment) {
  ChainState& s = rep.state;
  const int n = q.n();
  const double t = rep.temperature;
  const double limit = kCutoff * t + s.offset;
  auto& cand = rep.candidates;
  cand.clear();
  for (int i = 0; i < n; ++i) {
    if (static_cast<double>(s.delta[i]) < limit) cand.push_back(i);
  }
  const std::size_t m = cand.size();
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t pick = k + uniform_below(rep.rng, m - k);
    std::swap(cand[k], cand[pick]);
    const int i = cand[k];
    const double excess = static_cast<double>(s.delta[i]) - s.offset;
    if (excess <= 0 || uniform01(rep.rng) < std::exp(-excess / t)) {
      apply_flip(q, s, i);
      s.offset = 0;
      ++rep.accepted;
      return true;
    }
  }
  s.offset += offset_increment;
  ++rep.stalls;
  return false;
}

void check_energy(const QuboModel& q, const ChainState& s) {
  const std::int64_t full = q.energy(s.bits);
  if (full != s.energy) {
    throw std::logic_error("incremental energy " + std::to_string(s.energy) +
                           " differs from full evaluation " + std::to_string(full));
  }
}

double geometric(double hi, double lo, double frac) {
  return hi * std::pow(lo / hi, frac);
}

}  // namespace

AnnealResult anneal(const QuboModel& q, const AnnealConfig& config) {
  config.validate();
  AnnealResult result;
  if (q.n() == 0) {
    result.best_energy = q.constant();
    return result;
  }

  const int nrep = config.replicas;
  std::vector<Replica> reps(static_cast<std::size_t>(nrep));
  for (int r = 0; r < nrep; ++r) {
    Replica& rep = reps[r];
    init_state(q, rep.state);
    rep.rng.seed(derive_seed(config.seed, kReplicaStream, static_cast<std::uint64_t>(r)));
    rep.temperature =
        nrep == 1 ? config.t_min
                  : geometric(config.t_max, config.t_min, static_cast<double>(r) / (nrep - 1));
    rep.best_bits = rep.state.bits;
    rep.best_energy = rep.state.energy;
  }

  std::int64_t global_best = q.constant();
  result.trace.push_back({0, global_best});

  const bool tempering = config.mode == AnnealMode::kTempering;
  const std::int64_t total = config.iterations;
  const std::int64_t round_len = config.exchange_interval;
  const int threads = config.observer ? 1 : resolve_threads(config.threads);

  for (std::int64_t begin = 0, round = 0; begin < total; begin += round_len, ++round) {
    const std::int64_t end = std::min(total, begin + round_len);
    parallel_for(nrep, threads, [&](int r) {
      Replica& rep = reps[r];
      rep.events.clear();
      for (std::int64_t it = begin; it < end; ++it) {
        if (!tempering) {
          rep.temperature = geometric(config.t_max, config.t_min,
                                      total > 1 ? static_cast<double>(it) / (total - 1) : 1.0);
        }
        const bool accepted = step(q, rep, config.offset_increment);
        if (accepted && rep.state.energy < rep.best_energy) {
          rep.best_energy = rep.state.energy;
          rep.best_bits = rep.state.bits;
          rep.best_iteration = it;
          rep.events.push_back({it, rep.best_energy});
        }
        if (config.check_interval > 0 && (it + 1) % config.check_interval == 0) {
          check_energy(q, rep.state);
        }
        if (config.observer) {
          config.observer({r, it, accepted, rep.state.offset, rep.state.energy});
        }
      }
    });

    // Merge per-replica improvements into the global trace in iteration order.
    std::vector<Event> merged;
    for (const Replica& rep : reps) merged.insert(merged.end(), rep.events.begin(), rep.events.end());
    std::stable_sort(merged.begin(), merged.end(), [](const Event& a, const Event& b) {
      return a.iteration < b.iteration;
    });
    for (const Event& e : merged) {
      if (e.energy < global_best) {
        global_best = e.energy;
        if (result.trace.back().iteration == e.iteration + 1) {
          result.trace.back().best_energy = global_best;
        } else {
          result.trace.push_back({e.iteration + 1, global_best});
        }
      }
    }

    if (tempering && nrep > 1 && end < total) {
      Rng ex(derive_seed(config.seed, kExchangeStream, static_cast<std::uint64_t>(round)));
      for (int i = static_cast<int>(round % 2); i + 1 < nrep; i += 2) {
        Replica& a = reps[i];
        Replica& b = reps[i + 1];
        ++result.exchanges_attempted;
        const double x = (1.0 / a.temperature - 1.0 / b.temperature) *
                         static_cast<double>(a.state.energy - b.state.energy);
        if (x >= 0 || uniform01(ex) < std::exp(x)) {
          std::swap(a.state, b.state);
          a.state.offset = 0;
          b.state.offset = 0;
          ++result.exchanges_accepted;
        }
      }
    }
  }

  const Replica* best = &reps[0];
  for (const Replica& rep : reps) {
    result.accepted_flips += rep.accepted;
    result.offset_activations += rep.stalls;
    if (rep.best_energy < best->best_energy ||
        (rep.best_energy == best->best_energy && rep.best_iteration < best->best_iteration)) {
      best = &rep;
    }
  }
  result.best_bits = best->best_bits;
  result.best_energy = best->best_energy;
  return result;
}

int repair_solution(const Instance& instance, const ConflictSets& sets, const Weights& weights,
                    Solution& solution) {
  check_dimension(instance, solution);
  const int n = instance.variable_count();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto [i, j] : conflict_pairs(instance, sets)) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  auto damage = [&](int v) {
    return (instance.is_working(v) ? weights.beta : 0) - weights.alpha * instance.length(v);
  };

  int cleared = 0;
  std::vector<std::uint8_t> involved(static_cast<std::size_t>(n));
  while (true) {
    std::fill(involved.begin(), involved.end(), 0);
    bool any = false;
    for (const Request& req : instance.requests()) {
      const int wb = instance.working_offset(req.id);
      const int pb = instance.protection_offset(req.id);
      const int we = wb + static_cast<int>(req.working.size());
      const int pe = pb + static_cast<int>(req.protection.size());
      int w = 0, p = 0;
      for (int v = wb; v < we; ++v) w += solution.bits[v];
      for (int v = pb; v < pe; ++v) p += solution.bits[v];
      if (w != p) {
        for (int v = wb; v < we; ++v) involved[v] |= solution.bits[v];
        for (int v = pb; v < pe; ++v) involved[v] |= solution.bits[v];
        any = true;
      }
      if (w > 1) {
        for (int v = wb; v < we; ++v) involved[v] |= solution.bits[v];
        any = true;
      }
    }
    for (int v = 0; v < n; ++v) {
      if (!solution.bits[v]) continue;
      for (int u : adj[v]) {
        if (solution.bits[u]) {
          involved[v] = involved[u] = 1;
          any = true;
        }
      }
    }
    if (!any) break;
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (involved[v] && (pick < 0 || damage(v) < damage(pick))) pick = v;
    }
    solution.bits[pick] = 0;
    ++cleared;
  }
  return cleared;
}

SolveReport solve_rwap_da(const Instance& instance, const ConflictSets& sets,
                          const Weights& weights, std::int64_t rho, const AnnealConfig& config,
                          std::vector<TracePoint>* trace) {
  QuboModel q = build_qubo(instance, sets, weights, rho);
  AnnealResult ar = anneal(q, config);
  if (trace) *trace = ar.trace;
  Solution s(instance.variable_count());
  if (!ar.best_bits.empty()) s.bits = ar.best_bits;
  int cleared = 0;
  if (!verify_feasible(instance, sets, s).feasible()) {
    cleared = repair_solution(instance, sets, weights, s);
  }
  SolveReport report = make_report("da", instance, sets, std::move(s), weights);
  report.repaired = cleared > 0;
  report.energy = ar.best_energy;
  report.rho = rho;
  report.work = config.iterations;
  report.status = SolveStatus::kHeuristic;
  if (report.repaired) report.notes.push_back("repair cleared " + std::to_string(cleared) + " bits");
  return report;
}

SolveReport solve_rwap_da(const Instance& instance, const Weights& weights, std::int64_t rho,
                          const AnnealConfig& config) {
  return solve_rwap_da(instance, build_conflict_sets(instance), weights, rho, config);
}

}  // namespace rwap
