#include "rwap/bench.h"

#include <chrono>
#include <exception>
#include <iomanip>
#include <map>
#include <ostream>

#include "rwap/anneal.h"
#include "rwap/conflicts.h"
#include "rwap/heuristic.h"
#include "rwap/oracle.h"
#include "rwap/parallel.h"
#include "rwap/weights.h"

namespace rwap {

namespace {

struct Job {
  std::size_t instance;
  std::string method;
  std::uint64_t seed;
  std::optional<std::int64_t> rho_offset;
};

Weights bench_weights(const Instance& instance) {
  if (compute_m(instance)) return beta_base(instance, 1);
  return explicit_weights(instance, 1, 1);
}

BenchRow run_job(const NamedInstance& named, const Job& job, const BenchConfig& config) {
  BenchRow row;
  row.instance = named.name;
  row.method = job.method;
  row.seed = job.seed;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Instance& inst = named.instance;
    const Weights w = bench_weights(inst);
    const ConflictSets sets = build_conflict_sets(inst);
    SolveReport report;
    if (job.method == "da") {
      row.rho_offset = job.rho_offset;
      row.rho = w.beta + *job.rho_offset;
      AnnealConfig ac = default_anneal_config(*row.rho, job.seed, config.da_iterations);
      ac.replicas = config.da_replicas;
      ac.threads = 1;
      report = solve_rwap_da(inst, sets, w, *row.rho, ac);
    } else if (job.method == "rs") {
      RsConfig rc;
      rc.permutation_budget = config.rs_budget;
      rc.seed = job.seed;
      rc.threads = 1;
      report = rs_heur(inst, sets, rc, w);
    } else if (job.method == "exact") {
      report = brute_force_ip(inst, sets, w);
    } else if (job.method == "bnb") {
      report = branch_and_bound(inst, build_strong_groups(inst), w, config.node_limit);
    } else {
      throw std::invalid_argument("unknown method '" + job.method + "'");
    }
    row.granted = static_cast<std::int64_t>(report.granted.size());
    row.links = report.f_alpha;
    row.links_per_granted =
        row.granted ? static_cast<double>(row.links) / static_cast<double>(row.granted) : 0.0;
    row.objective = report.objective;
    row.feasible = report.feasible;
    row.repaired = report.repaired;
    row.work = report.work;
  } catch (const std::exception& e) {
    row.error = e.what();
    if (row.error.empty()) row.error = "error";
  }
  row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
  return row;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::vector<BenchRow> run_bench(const std::vector<NamedInstance>& instances,
                                const BenchConfig& config) {
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    for (const auto& method : config.methods) {
      for (std::uint64_t seed : config.seeds) {
        if (method == "da") {
          for (std::int64_t off : config.rho_offsets) jobs.push_back({i, method, seed, off});
        } else {
          jobs.push_back({i, method, seed, std::nullopt});
        }
      }
    }
  }
  std::vector<BenchRow> rows(jobs.size());
  parallel_for(static_cast<int>(jobs.size()), resolve_threads(config.threads), [&](int k) {
    rows[k] = run_job(instances[jobs[k].instance], jobs[k], config);
  });
  return rows;
}

std::vector<BenchAggregate> aggregate(const std::vector<BenchRow>& rows) {
  std::vector<BenchAggregate> out;
  std::map<std::pair<std::string, std::optional<std::int64_t>>, std::size_t> index;
  std::vector<std::int64_t> with_grants;
  for (const BenchRow& r : rows) {
    auto [it, fresh] = index.try_emplace({r.method, r.rho_offset}, out.size());
    if (fresh) {
      out.push_back({r.method, r.rho_offset});
      with_grants.push_back(0);
    }
    BenchAggregate& a = out[it->second];
    ++a.rows;
    if (r.failed()) {
      ++a.failures;
      continue;
    }
    a.mean_granted += static_cast<double>(r.granted);
    a.feasible_rate += r.feasible ? 1.0 : 0.0;
    a.mean_wall_ms += r.wall_ms;
    if (r.granted > 0) {
      a.mean_links_per_granted += r.links_per_granted;
      ++with_grants[it->second];
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    BenchAggregate& a = out[i];
    const double ok = static_cast<double>(a.rows - a.failures);
    if (ok > 0) {
      a.mean_granted /= ok;
      a.feasible_rate /= ok;
      a.mean_wall_ms /= ok;
    }
    if (with_grants[i] > 0) a.mean_links_per_granted /= static_cast<double>(with_grants[i]);
  }
  return out;
}

void write_rows_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "# " << kBenchCsvVersion << "\n";
  out << "instance,method,seed,rho,rho_offset,granted,links,links_per_granted,objective,feasible,repaired,"
         "work,wall_ms,error\n";
  for (const BenchRow& r : rows) {
    out << csv_field(r.instance) << ',' << r.method << ',' << r.seed << ','
        << (r.rho ? std::to_string(*r.rho) : "") << ','
        << (r.rho_offset ? std::to_string(*r.rho_offset) : "") << ',' << r.granted << ',' << r.links << ','
        << std::fixed << std::setprecision(3) << r.links_per_granted << ',' << r.objective << ','
        << (r.feasible ? 1 : 0) << ',' << (r.repaired ? 1 : 0) << ',' << r.work << ','
        << r.wall_ms << ',' << csv_field(r.error) << '\n';
  }
}

void write_aggregate_csv(std::ostream& out, const std::vector<BenchAggregate>& aggregates) {
  out << "# " << kAggregateCsvVersion << "\n";
  out << "method,rho_offset,rows,failures,mean_granted,mean_links_per_granted,feasible_rate,"
         "mean_wall_ms\n";
  for (const BenchAggregate& a : aggregates) {
    out << a.method << ',' << (a.rho_offset ? std::to_string(*a.rho_offset) : "") << ',' << a.rows << ','
        << a.failures << ',' << std::fixed << std::setprecision(3) << a.mean_granted << ','
        << a.mean_links_per_granted << ',' << a.feasible_rate << ',' << a.mean_wall_ms << '\n';
  }
}

}  // namespace rwap
