#include "rwap/ip.h"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <system_error>

namespace rwap {

std::string to_string(ModelKind kind) { return kind == ModelKind::kBase ? "base" : "strong"; }

bool LinearModel::satisfied_by(const Solution& s) const {
  for (const Constraint& c : constraints) {
    std::int64_t lhs = 0;
    for (const Term& t : c.terms) lhs += t.coeff * s.bits.at(t.var);
    if (c.relation == Relation::kEqual ? lhs != c.rhs : lhs > c.rhs) return false;
  }
  return true;
}

std::int64_t LinearModel::evaluate(const Solution& s) const {
  std::int64_t total = 0;
  for (int v = 0; v < variable_count(); ++v) total += objective[v] * s.bits.at(v);
  return total;
}

namespace {

Constraint pair_row(std::string name, int a, int b) {
  if (a > b) std::swap(a, b);
  return {std::move(name), {{a, 1}, {b, 1}}, Relation::kLessEqual, 1};
}

}  // namespace

LinearModel build_ip(const Instance& instance, const ConflictSets& sets,
                     const StrongGroups& groups, const Weights& weights, ModelKind kind) {
  LinearModel m;
  m.kind = kind;
  const int n = instance.variable_count();
  m.var_names.reserve(n);
  m.objective.reserve(n);
  for (int v = 0; v < n; ++v) {
    m.var_names.push_back(instance.var_name(v));
    m.objective.push_back(weights.alpha * instance.length(v) -
                          (instance.is_working(v) ? weights.beta : 0));
  }

  for (const Request& req : instance.requests()) {
    const std::string r = std::to_string(req.id);
    Constraint balance{"bal_r" + r, {}, Relation::kEqual, 0};
    Constraint one{"one_r" + r, {}, Relation::kLessEqual, 1};
    for (int w = 0; w < static_cast<int>(req.working.size()); ++w) {
      balance.terms.push_back({instance.working_var(req.id, w), 1});
      one.terms.push_back({instance.working_var(req.id, w), 1});
    }
    for (int p = 0; p < static_cast<int>(req.protection.size()); ++p) {
      balance.terms.push_back({instance.protection_var(req.id, p), -1});
    }
    m.constraints.push_back(std::move(balance));
    m.constraints.push_back(std::move(one));
  }

  if (kind == ModelKind::kBase) {
    std::size_t k = 0;
    for (const auto& t : sets.c1) {
      m.constraints.push_back(pair_row("c1_" + std::to_string(k++), instance.working_var(t.r, t.w),
                                       instance.protection_var(t.r, t.p)));
    }
    k = 0;
    for (const auto& t : sets.c2) {
      m.constraints.push_back(pair_row("c2_" + std::to_string(k++),
                                       instance.working_var(t.r1, t.w),
                                       instance.protection_var(t.r2, t.p)));
    }
    k = 0;
    for (const auto& t : sets.c3) {
      m.constraints.push_back(pair_row("c3_" + std::to_string(k++),
                                       instance.working_var(t.r1, t.w1),
                                       instance.working_var(t.r2, t.w2)));
    }
    k = 0;
    for (const auto& t : sets.c4) {
      m.constraints.push_back(pair_row("c4_" + std::to_string(k++),
                                       instance.protection_var(t.r1, t.p1),
                                       instance.protection_var(t.r2, t.p2)));
    }
    return m;
  }

  for (const Request& req : instance.requests()) {
    for (int w = 0; w < static_cast<int>(req.working.size()); ++w) {
      Constraint row{"pbar_r" + std::to_string(req.id) + "_w" + std::to_string(w),
                     {{instance.working_var(req.id, w), 1}},
                     Relation::kLessEqual,
                     1};
      for (int p : groups.pbar[req.id][w]) row.terms.push_back({instance.protection_var(req.id, p), 1});
      m.constraints.push_back(std::move(row));
    }
  }
  for (const auto& g : groups.groups) {
    if (!g.emitted()) continue;
    Constraint row{"grp_e" + std::to_string(g.link) + "_l" + std::to_string(g.wavelength),
                   {},
                   Relation::kLessEqual,
                   1};
    for (int v : g.vars) row.terms.push_back({v, 1});
    m.constraints.push_back(std::move(row));
  }
  return m;
}

namespace {

constexpr int kTermsPerLine = 8;

void write_terms(std::ostream& out, const LinearModel& model, const std::vector<Term>& terms) {
  int on_line = 0;
  bool first = true;
  for (const Term& t : terms) {
    if (t.coeff == 0) continue;
    if (on_line == kTermsPerLine) {
      out << "\n   ";
      on_line = 0;
    }
    const std::int64_t mag = t.coeff < 0 ? -t.coeff : t.coeff;
    if (first) {
      out << ' ' << (t.coeff < 0 ? "-" : "");
    } else {
      out << (t.coeff < 0 ? " - " : " + ");
    }
    if (mag != 1) out << mag << ' ';
    out << model.var_names[t.var];
    first = false;
    ++on_line;
  }
  if (first) out << " 0";
}

}  // namespace

void write_lp(std::ostream& out, const LinearModel& model) {
  out << "\\ RWA-P " << to_string(model.kind) << " model: " << model.variable_count()
      << " binaries, " << model.constraints.size() << " constraints\n";
  out << "Minimize\n obj:";
  std::vector<Term> obj;
  for (int v = 0; v < model.variable_count(); ++v) obj.push_back({v, model.objective[v]});
  write_terms(out, model, obj);
  out << "\nSubject To\n";
  for (const Constraint& c : model.constraints) {
    out << ' ' << c.name << ':';
    write_terms(out, model, c.terms);
    out << (c.relation == Relation::kEqual ? " = " : " <= ") << c.rhs << '\n';
  }
  out << "Binary\n";
  for (const auto& name : model.var_names) out << ' ' << name << '\n';
  out << "End\n";
}

void write_file_atomically(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::system_error(errno, std::generic_category(), "cannot open " + tmp.string());
    f << contents;
    f.flush();
    if (!f) throw std::system_error(errno, std::generic_category(), "cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void export_lp(const LinearModel& model, const std::filesystem::path& path) {
  std::ostringstream out;
  write_lp(out, model);
  write_file_atomically(path, out.str());
}

}  // namespace rwap
