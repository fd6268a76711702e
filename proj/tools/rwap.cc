// rwap: command-line front end for instance generation, model export,
// solving, verification and benchmarking.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rwap/anneal.h"
#include "rwap/bench.h"
#include "rwap/conflicts.h"
#include "rwap/error.h"
#include "rwap/gen.h"
#include "rwap/heuristic.h"
#include "rwap/io.h"
#include "rwap/ip.h"
#include "rwap/oracle.h"
#include "rwap/parallel.h"
#include "rwap/qubo.h"
#include "rwap/reduce.h"
#include "rwap/verify.h"
#include "rwap/weights.h"

namespace {

using nlohmann::json;
using namespace rwap;

constexpr int kExitFailure = 1;  // infeasible solution, failed bench rows
constexpr int kExitUsage = 2;    // bad input or configuration

void emit(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    write_file_atomically(output, text);
  }
}

// Key/value table printed as a JSON object or a two-row CSV.
std::string render(const json& obj, const std::string& format) {
  if (format == "json") return obj.dump(2) + "\n";
  std::string header, values;
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!header.empty()) {
      header += ',';
      values += ',';
    }
    header += it.key();
    values += it->is_string() ? it->get<std::string>() : it->dump();
  }
  return header + "\n" + values + "\n";
}

// alpha/beta from flags; beta defaults to the closed-form value.
Weights resolve_weights(const Instance& inst, std::int64_t alpha, std::optional<std::int64_t> beta) {
  if (beta) return explicit_weights(inst, alpha, *beta);
  if (compute_m(inst)) return beta_base(inst, alpha);
  std::cerr << "note: no grantable request; using beta = 1\n";
  return explicit_weights(inst, alpha, 1);
}

std::int64_t resolve_rho(const Instance& inst, const Weights& w, const std::string& rho) {
  if (rho.empty()) return default_rho(w);
  if (rho == "base") return rho_base(inst, w).rho;
  return std::stoll(rho);
}

Network parse_topology(const std::string& source, std::uint64_t seed) {
  const std::string prefix = "synth:";
  if (source.rfind(prefix, 0) == 0) {
    const std::string rest = source.substr(prefix.size());
    const auto comma = rest.find(',');
    if (comma == std::string::npos) throw ConfigError("expected synth:<nodes>,<avg out-degree>");
    return synth_topology(std::stoi(rest.substr(0, comma)), std::stod(rest.substr(comma + 1)),
                          seed);
  }
  return load_topology(source);
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Routing and wavelength assignment with dedicated protection: models and solvers"};
  app.require_subcommand(1);
  std::string format = "json";

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  std::string topology, gen_out;
  int wavelengths = 5, requests = 60, paths = 4;
  std::uint64_t gen_seed = 0;
  gen->add_option("--topology", topology, "Topology JSON file or synth:<nodes>,<avg out-degree>")
      ->required();
  gen->add_option("--wavelengths", wavelengths)->check(CLI::PositiveNumber);
  gen->add_option("--requests", requests)->check(CLI::NonNegativeNumber);
  gen->add_option("--paths", paths, "Working and protection paths per request")
      ->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_seed);
  gen->add_option("-o,--output", gen_out, "Instance JSON (default stdout)");

  // conflicts
  auto* conf = app.add_subcommand("conflicts", "Conflict set sizes and model constraint counts");
  std::string conf_in;
  conf->add_option("instance", conf_in)->required();
  conf->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  // weights
  auto* wts = app.add_subcommand("weights", "Prioritizing objective weights");
  std::string wts_in;
  std::int64_t wts_alpha = 1;
  bool wts_tight = false;
  int wts_cap = kDefaultEnumerationCap;
  wts->add_option("instance", wts_in)->required();
  wts->add_option("--alpha", wts_alpha)->check(CLI::PositiveNumber);
  wts->add_flag("--tight", wts_tight, "Also compute the minimal beta by enumeration");
  wts->add_option("--max-vars", wts_cap, "Enumeration cap for --tight");
  wts->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  // export-lp
  auto* lp = app.add_subcommand("export-lp", "Write the integer program in LP format");
  std::string lp_in, lp_out, lp_model = "base";
  std::int64_t lp_alpha = 1;
  std::optional<std::int64_t> lp_beta;
  lp->add_option("instance", lp_in)->required();
  lp->add_option("--model", lp_model)->check(CLI::IsMember({"base", "strong"}));
  lp->add_option("--alpha", lp_alpha)->check(CLI::PositiveNumber);
  lp->add_option("--beta", lp_beta)->check(CLI::PositiveNumber);
  lp->add_option("-o,--output", lp_out)->required();

  // export-qubo
  auto* qb = app.add_subcommand("export-qubo", "Write the QUBO as 'n constant' + 'i j coeff' lines");
  std::string qb_in, qb_out, qb_rho;
  std::int64_t qb_alpha = 1;
  std::optional<std::int64_t> qb_beta;
  qb->add_option("instance", qb_in)->required();
  qb->add_option("--alpha", qb_alpha)->check(CLI::PositiveNumber);
  qb->add_option("--beta", qb_beta)->check(CLI::PositiveNumber);
  qb->add_option("--rho", qb_rho, "Penalty weight, or 'base' for the exactness bound (default beta+100)");
  qb->add_option("-o,--output", qb_out)->required();

  // solve
  auto* solve = app.add_subcommand("solve", "Solve an instance");
  std::string solve_in, method = "da", solve_out, trace_out, solve_rho;
  std::int64_t solve_alpha = 1, iterations = 20000, budget = kDefaultPermutationBudget,
               node_limit = 0;
  std::optional<std::int64_t> solve_beta;
  int replicas = 8, threads = 0;
  std::uint64_t solve_seed = 0;
  solve->add_option("instance", solve_in)->required();
  solve->add_option("--method", method)->check(CLI::IsMember({"da", "rs", "exact", "bnb"}));
  solve->add_option("--alpha", solve_alpha)->check(CLI::NonNegativeNumber);
  solve->add_option("--beta", solve_beta)->check(CLI::PositiveNumber);
  solve->add_option("--iterations", iterations)->check(CLI::NonNegativeNumber);
  solve->add_option("--replicas", replicas)->check(CLI::PositiveNumber);
  solve->add_option("--rho", solve_rho, "Penalty weight, or 'base' (default beta+100)");
  solve->add_option("--budget", budget, "RS permutations")->check(CLI::PositiveNumber);
  solve->add_option("--node-limit", node_limit, "B&B node budget (0 = unlimited)");
  solve->add_option("--seed", solve_seed);
  solve->add_option("--threads", threads, "Worker threads (default RWAP_THREADS or all cores)");
  solve->add_option("--trace", trace_out, "CSV of iteration,best_energy (da only)");
  solve->add_option("-o,--output", solve_out, "Report JSON (default stdout)");
  solve->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  // verify
  auto* ver = app.add_subcommand("verify", "Check a solution against every constraint");
  std::string ver_in, ver_sol;
  ver->add_option("instance", ver_in)->required();
  ver->add_option("solution", ver_sol, "Solution JSON with a 'bits' field")->required();
  ver->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  // reduce-mss
  auto* red = app.add_subcommand("reduce-mss", "Build an instance from a stable-set graph");
  std::string red_in, red_out;
  red->add_option("graph", red_in)->required();
  red->add_option("-o,--output", red_out);

  // bench
  auto* bench = app.add_subcommand("bench", "Run methods over instances and seeds");
  std::vector<std::string> bench_in;
  std::string bench_methods = "da,rs", bench_seeds = "0", bench_sweep = "100", bench_out,
              bench_agg;
  BenchConfig bc;
  bench->add_option("instances", bench_in);
  bench->add_option("--methods", bench_methods, "Comma list of da,rs,exact,bnb");
  bench->add_option("--seeds", bench_seeds, "Comma list of seeds");
  bench->add_option("--iterations", bc.da_iterations)->check(CLI::NonNegativeNumber);
  bench->add_option("--replicas", bc.da_replicas)->check(CLI::PositiveNumber);
  bench->add_option("--budget", bc.rs_budget)->check(CLI::PositiveNumber);
  bench->add_option("--node-limit", bc.node_limit);
  bench->add_option("--rho-offsets", bench_sweep, "Comma list; da penalty is beta + offset");
  bench->add_option("--threads", bc.threads);
  bench->add_option("-o,--output", bench_out, "Row table (default stdout)");
  bench->add_option("--aggregate", bench_agg, "Per-method aggregate table");
  std::string bench_format = "csv";
  bench->add_option("--format", bench_format)->check(CLI::IsMember({"json", "csv"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      Network net = parse_topology(topology, gen_seed);
      GeneratedInstance g = generate(net, wavelengths, requests, paths, gen_seed);
      for (int r : g.short_pool_requests) {
        std::cerr << "warning: request " << r << " has fewer than " << paths
                  << " candidate paths; using all of them\n";
      }
      emit(instance_to_json(g.instance), gen_out);
      return 0;
    }

    if (*conf) {
      const Instance inst = load_instance(conf_in);
      const ConflictSets sets = build_conflict_sets(inst);
      const ConstraintCounts c = count_constraints(inst, sets, build_strong_groups(inst));
      json out = {{"requests", c.requests},
                  {"variables", c.variables},
                  {"c1", c.c1},
                  {"c2", c.c2},
                  {"c3", c.c3},
                  {"c4", c.c4},
                  {"base_constraints", c.base_constraints()},
                  {"strong_constraints", c.strong_constraints()},
                  {"base_ratio", c.base_ratio()},
                  {"strong_ratio", c.strong_ratio()}};
      std::cout << render(out, format);
      return 0;
    }

    if (*wts) {
      const Instance inst = load_instance(wts_in);
      json out = {{"alpha", wts_alpha}};
      if (auto m = compute_m(inst)) {
        out["m"] = *m;
        out["beta_base"] = beta_base(inst, wts_alpha).beta;
      } else {
        out["m"] = nullptr;
        out["beta_base"] = nullptr;
      }
      if (wts_tight) {
        const FeasibleLevels levels =
            enumerate_feasible_levels(inst, build_conflict_sets(inst), wts_cap);
        const OmegaReport om = compute_omega(levels);
        out["omega_eq"] = om.omega_eq ? json(om.omega_eq->to_string()) : json(nullptr);
        out["omega_gt"] = om.omega_gt ? json(om.omega_gt->to_string()) : json(nullptr);
        out["beta_tight"] = om.beta_tight ? json(*om.beta_tight) : json(nullptr);
      }
      std::cout << render(out, format);
      return 0;
    }

    if (*lp) {
      const Instance inst = load_instance(lp_in);
      const Weights w = resolve_weights(inst, lp_alpha, lp_beta);
      const ModelKind kind = lp_model == "base" ? ModelKind::kBase : ModelKind::kStrong;
      const ConflictSets sets = kind == ModelKind::kBase ? build_conflict_sets(inst) : ConflictSets{};
      const StrongGroups groups = kind == ModelKind::kStrong ? build_strong_groups(inst) : StrongGroups{};
      export_lp(build_ip(inst, sets, groups, w, kind), lp_out);
      return 0;
    }

    if (*qb) {
      const Instance inst = load_instance(qb_in);
      const Weights w = resolve_weights(inst, qb_alpha, qb_beta);
      const std::int64_t rho = resolve_rho(inst, w, qb_rho);
      std::ostringstream text;
      write_qubo(text, build_qubo(inst, build_conflict_sets(inst), w, rho));
      write_file_atomically(qb_out, text.str());
      return 0;
    }

    if (*solve) {
      const Instance inst = load_instance(solve_in);
      const ConflictSets sets = build_conflict_sets(inst);
      const Weights w = resolve_weights(inst, solve_alpha, solve_beta);
      SolveReport report;
      if (method == "da") {
        const std::int64_t rho = resolve_rho(inst, w, solve_rho);
        AnnealConfig ac = default_anneal_config(rho, solve_seed, iterations);
        ac.replicas = replicas;
        ac.threads = threads;
        std::vector<TracePoint> trace;
        report = solve_rwap_da(inst, sets, w, rho, ac, trace_out.empty() ? nullptr : &trace);
        if (!trace_out.empty()) {
          std::ostringstream csv;
          csv << "iteration,best_energy\n";
          for (const TracePoint& p : trace) csv << p.iteration << ',' << p.best_energy << '\n';
          write_file_atomically(trace_out, csv.str());
        }
      } else if (method == "rs") {
        RsConfig rc;
        rc.permutation_budget = budget;
        rc.seed = solve_seed;
        rc.threads = threads;
        report = rs_heur(inst, sets, rc, w);
      } else if (method == "exact") {
        report = brute_force_ip(inst, sets, w);
      } else {
        report = branch_and_bound(inst, build_strong_groups(inst), w, node_limit);
      }
      if (format == "json") {
        emit(report_to_json(report), solve_out);
      } else {
        json row = {{"method", report.method},
                    {"granted", report.granted.size()},
                    {"links", report.f_alpha},
                    {"objective", report.objective},
                    {"feasible", report.feasible},
                    {"repaired", report.repaired},
                    {"status", to_string(report.status)},
                    {"work", report.work},
                    {"bits", report.solution.to_string()}};
        emit(render(row, "csv"), solve_out);
      }
      return report.feasible ? 0 : kExitFailure;
    }

    if (*ver) {
      const Instance inst = load_instance(ver_in);
      const Solution sol = load_solution(ver_sol);
      const Verdict v = verify_feasible(inst, build_conflict_sets(inst), sol);
      if (format == "json") {
        json out = {{"feasible", v.feasible()}, {"violations", json::array()}};
        for (const Violation& x : v.violations) {
          out["violations"].push_back({{"class", to_string(x.kind)}, {"tuple", x.tuple}});
        }
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "class,tuple\n";
        for (const Violation& x : v.violations) {
          std::string t;
          for (std::size_t i = 0; i < x.tuple.size(); ++i) t += (i ? " " : "") + std::to_string(x.tuple[i]);
          std::cout << to_string(x.kind) << ',' << t << '\n';
        }
      }
      return v.feasible() ? 0 : kExitFailure;
    }

    if (*red) {
      emit(instance_to_json(mss_to_rwap(load_graph(red_in))), red_out);
      return 0;
    }

    if (*bench) {
      std::vector<NamedInstance> instances;
      for (const auto& path : bench_in) instances.push_back({path, load_instance(path)});
      bc.methods = split(bench_methods);
      bc.seeds.clear();
      for (const auto& s : split(bench_seeds)) bc.seeds.push_back(std::stoull(s));
      bc.rho_offsets.clear();
      for (const auto& s : split(bench_sweep)) bc.rho_offsets.push_back(std::stoll(s));
      const std::vector<BenchRow> rows = run_bench(instances, bc);
      const std::vector<BenchAggregate> agg = aggregate(rows);
      std::ostringstream rows_text, agg_text;
      if (bench_format == "csv") {
        write_rows_csv(rows_text, rows);
        write_aggregate_csv(agg_text, agg);
      } else {
        json jr = json::array(), ja = json::array();
        for (const BenchRow& r : rows) {
          jr.push_back({{"instance", r.instance}, {"method", r.method}, {"seed", r.seed},
                        {"rho", r.rho ? json(*r.rho) : json(nullptr)},
                        {"rho_offset", r.rho_offset ? json(*r.rho_offset) : json(nullptr)},
                        {"granted", r.granted}, {"links", r.links},
                        {"links_per_granted", r.links_per_granted}, {"objective", r.objective},
                        {"feasible", r.feasible}, {"repaired", r.repaired}, {"work", r.work},
                        {"wall_ms", r.wall_ms}, {"error", r.error}});
        }
        for (const BenchAggregate& a : agg) {
          ja.push_back({{"method", a.method},
                        {"rho_offset", a.rho_offset ? json(*a.rho_offset) : json(nullptr)},
                        {"rows", a.rows}, {"failures", a.failures},
                        {"mean_granted", a.mean_granted},
                        {"mean_links_per_granted", a.mean_links_per_granted},
                        {"feasible_rate", a.feasible_rate}, {"mean_wall_ms", a.mean_wall_ms}});
        }
        rows_text << json{{"version", kBenchCsvVersion}, {"rows", jr}}.dump(2) << "\n";
        agg_text << json{{"version", kAggregateCsvVersion}, {"aggregates", ja}}.dump(2) << "\n";
      }
      emit(rows_text.str(), bench_out);
      if (!bench_agg.empty()) emit(agg_text.str(), bench_agg);
      for (const BenchRow& r : rows) {
        if (r.failed()) {
          std::cerr << "row failed: " << r.instance << " " << r.method << " seed " << r.seed
                    << ": " << r.error << "\n";
        }
      }
      const bool all_ok = std::none_of(rows.begin(), rows.end(),
                                       [](const BenchRow& r) { return r.failed(); });
      return all_ok ? 0 : kExitFailure;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
