#include "rwap/qubo.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "rwap/error.h"

namespace rwap {

QuboModel::QuboModel(int n, std::vector<std::int64_t> linear, std::vector<QuadTerm> quadratic,
                     std::int64_t constant)
    : n_(n), linear_(std::move(linear)), constant_(constant) {
  if (n_ < 0) throw std::invalid_argument("negative variable count");
  linear_.resize(static_cast<std::size_t>(n_), 0);
  for (QuadTerm& t : quadratic) {
    if (t.i < 0 || t.j < 0 || t.i >= n_ || t.j >= n_) {
      throw std::out_of_range("quadratic term index out of range");
    }
    if (t.i > t.j) std::swap(t.i, t.j);
  }
  std::sort(quadratic.begin(), quadratic.end(), [](const QuadTerm& a, const QuadTerm& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  for (const QuadTerm& t : quadratic) {
    if (t.i == t.j) {
      linear_[t.i] += t.coeff;  // s_i^2 = s_i
    } else if (!quadratic_.empty() && quadratic_.back().i == t.i && quadratic_.back().j == t.j) {
      quadratic_.back().coeff += t.coeff;
    } else {
      quadratic_.push_back(t);
    }
  }
  std::erase_if(quadratic_, [](const QuadTerm& t) { return t.coeff == 0; });

  std::vector<std::size_t> degree(static_cast<std::size_t>(n_), 0);
  for (const QuadTerm& t : quadratic_) {
    ++degree[t.i];
    ++degree[t.j];
  }
  adj_begin_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (int i = 0; i < n_; ++i) adj_begin_[i + 1] = adj_begin_[i] + degree[i];
  adjacency_.resize(adj_begin_.back());
  std::vector<std::size_t> fill(adj_begin_.begin(), adj_begin_.end() - 1);
  for (const QuadTerm& t : quadratic_) {
    adjacency_[fill[t.i]++] = {t.j, t.coeff};
    adjacency_[fill[t.j]++] = {t.i, t.coeff};
  }
}

std::int64_t QuboModel::coupling(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = std::lower_bound(quadratic_.begin(), quadratic_.end(), std::pair{i, j},
                             [](const QuadTerm& t, const std::pair<int, int>& key) {
                               return t.i != key.first ? t.i < key.first : t.j < key.second;
                             });
  if (it != quadratic_.end() && it->i == i && it->j == j) return it->coeff;
  return 0;
}

std::int64_t QuboModel::energy(std::span<const std::uint8_t> bits) const {
  if (static_cast<int>(bits.size()) != n_) {
    throw DimensionError("bit vector length " + std::to_string(bits.size()) +
                         " does not match QUBO size " + std::to_string(n_));
  }
  std::int64_t e = constant_;
  for (int i = 0; i < n_; ++i) {
    if (bits[i]) e += linear_[i];
  }
  for (const QuadTerm& t : quadratic_) {
    if (bits[t.i] && bits[t.j]) e += t.coeff;
  }
  return e;
}

RhoBound rho_base(const Instance& instance, const Weights& weights) {
  std::int64_t shortest_sum = 0;
  for (const Request& req : instance.requests()) {
    if (!req.grantable()) continue;
    std::int64_t w = req.working.front().length();
    std::int64_t p = req.protection.front().length();
    for (const auto& lp : req.working) w = std::min(w, lp.length());
    for (const auto& lp : req.protection) p = std::min(p, lp.length());
    shortest_sum += w + p;
  }
  RhoBound out;
  out.bound = weights.beta * (instance.request_count() + 1) - weights.alpha * (1 + shortest_sum);
  out.rho = out.bound + 1;
  if (out.rho < 1) {
    out.rho = 1;
    out.clamped = true;
  }
  return out;
}

std::int64_t default_rho(const Weights& weights) { return weights.beta + 100; }

QuboModel build_qubo(const Instance& instance, const ConflictSets& sets, const Weights& weights,
                     std::int64_t rho) {
  QuboModel q = build_qubo(instance, sets, weights, PenaltyWeights::uniform(rho));
  return q;
}

QuboModel build_qubo(const Instance& instance, const ConflictSets& sets, const Weights& weights,
                     const PenaltyWeights& pen) {
  const int n = instance.variable_count();
  std::vector<std::int64_t> linear(static_cast<std::size_t>(n), 0);
  std::vector<QuadTerm> quad;

  for (int v = 0; v < n; ++v) {
    linear[v] = weights.alpha * instance.length(v) - (instance.is_working(v) ? weights.beta : 0);
  }

  for (const Request& req : instance.requests()) {
    const int w0 = instance.working_offset(req.id);
    const int p0 = instance.protection_offset(req.id);
    const int nw = static_cast<int>(req.working.size());
    const int np = static_cast<int>(req.protection.size());
    // (sum x - sum y)^2 with b^2 = b.
    for (int a = 0; a < nw + np; ++a) linear[w0 + a] += pen.balance;
    for (int a = 0; a < nw; ++a) {
      for (int b = a + 1; b < nw; ++b) quad.push_back({w0 + a, w0 + b, 2 * pen.balance});
      for (int b = 0; b < np; ++b) quad.push_back({w0 + a, p0 + b, -2 * pen.balance});
    }
    for (int a = 0; a < np; ++a) {
      for (int b = a + 1; b < np; ++b) quad.push_back({p0 + a, p0 + b, 2 * pen.balance});
    }
    // (sum x)(sum x - 1) = 2 sum_{a<b} x_a x_b.
    for (int a = 0; a < nw; ++a) {
      for (int b = a + 1; b < nw; ++b) quad.push_back({w0 + a, w0 + b, 2 * pen.at_most_one});
    }
  }

  for (const auto& t : sets.c1) {
    quad.push_back({instance.working_var(t.r, t.w), instance.protection_var(t.r, t.p), pen.c1});
  }
  for (const auto& t : sets.c2) {
    quad.push_back({instance.working_var(t.r1, t.w), instance.protection_var(t.r2, t.p), pen.c2});
  }
  for (const auto& t : sets.c3) {
    quad.push_back({instance.working_var(t.r1, t.w1), instance.working_var(t.r2, t.w2), pen.c3});
  }
  for (const auto& t : sets.c4) {
    quad.push_back(
        {instance.protection_var(t.r1, t.p1), instance.protection_var(t.r2, t.p2), pen.c4});
  }

  QuboModel q(n, std::move(linear), std::move(quad), 0);
  q.rho = pen.balance;
  q.alpha = weights.alpha;
  q.beta = weights.beta;
  return q;
}

PenaltyBreakdown penalty(const Instance& instance, const ConflictSets& sets,
                         const Solution& solution) {
  check_dimension(instance, solution);
  PenaltyBreakdown out;
  for (const Request& req : instance.requests()) {
    std::int64_t xs = 0;
    std::int64_t ys = 0;
    for (int w = 0; w < static_cast<int>(req.working.size()); ++w) {
      xs += solution[instance.working_var(req.id, w)];
    }
    for (int p = 0; p < static_cast<int>(req.protection.size()); ++p) {
      ys += solution[instance.protection_var(req.id, p)];
    }
    out.balance += (xs - ys) * (xs - ys);
    out.at_most_one += xs * (xs - 1);
  }
  for (const auto& t : sets.c1) {
    out.c1 += solution[instance.working_var(t.r, t.w)] && solution[instance.protection_var(t.r, t.p)];
  }
  for (const auto& t : sets.c2) {
    out.c2 +=
        solution[instance.working_var(t.r1, t.w)] && solution[instance.protection_var(t.r2, t.p)];
  }
  for (const auto& t : sets.c3) {
    out.c3 +=
        solution[instance.working_var(t.r1, t.w1)] && solution[instance.working_var(t.r2, t.w2)];
  }
  for (const auto& t : sets.c4) {
    out.c4 += solution[instance.protection_var(t.r1, t.p1)] &&
              solution[instance.protection_var(t.r2, t.p2)];
  }
  out.total_g = out.balance + out.at_most_one + out.c1 + out.c2 + out.c3 + out.c4;
  return out;
}

std::int64_t flip_delta(const QuboModel& qubo, std::span<const std::uint8_t> bits, int var) {
  if (var < 0 || var >= qubo.n()) throw std::out_of_range("flip index out of range");
  if (static_cast<int>(bits.size()) != qubo.n()) {
    throw DimensionError("bit vector length does not match QUBO size");
  }
  std::int64_t field = qubo.linear()[var];
  for (const auto& nb : qubo.neighbors(var)) {
    if (bits[nb.var]) field += nb.coeff;
  }
  return bits[var] ? -field : field;
}

void write_qubo(std::ostream& out, const QuboModel& qubo) {
  out << qubo.n() << ' ' << qubo.constant() << '\n';
  const auto& quad = qubo.quadratic();
  std::size_t k = 0;
  for (int i = 0; i < qubo.n(); ++i) {
    if (qubo.linear()[i] != 0) out << i << ' ' << i << ' ' << qubo.linear()[i] << '\n';
    for (; k < quad.size() && quad[k].i == i; ++k) {
      out << quad[k].i << ' ' << quad[k].j << ' ' << quad[k].coeff << '\n';
    }
  }
}

QuboModel read_qubo(std::istream& in) {
  int n = 0;
  std::int64_t constant = 0;
  if (!(in >> n >> constant) || n < 0) throw LoadError("malformed QUBO header");
  std::vector<std::int64_t> linear(static_cast<std::size_t>(n), 0);
  std::vector<QuadTerm> quad;
  int i = 0;
  int j = 0;
  std::int64_t c = 0;
  while (in >> i >> j >> c) {
    if (i < 0 || j < 0 || i >= n || j >= n) throw LoadError("QUBO term index out of range");
    if (i == j) {
      linear[i] += c;
    } else {
      quad.push_back({i, j, c});
    }
  }
  if (!in.eof()) throw LoadError("malformed QUBO term line");
  return QuboModel(n, std::move(linear), std::move(quad), constant);
}

}  // namespace rwap
