#ifndef RWAP_QUBO_H_
#define RWAP_QUBO_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "rwap/conflicts.h"
#include "rwap/instance.h"
#include "rwap/weights.h"

namespace rwap {

struct QuadTerm {
  int i = 0;
  int j = 0;  // i < j
  std::int64_t coeff = 0;
  friend bool operator==(const QuadTerm&, const QuadTerm&) = default;
};

// E(s) = constant + sum_i linear[i] s_i + sum_{i<j} q_ij s_i s_j over s in {0,1}^n.
// Quadratic terms are kept sorted by (i, j) with no duplicates or zeros, and
// mirrored into a per-variable adjacency for O(degree) flip deltas.
class QuboModel {
 public:
  QuboModel() = default;
  // Merges duplicate (i, j) entries, drops zero coefficients. Pairs with
  // i > j are reordered; i == j is folded into the linear part.
  QuboModel(int n, std::vector<std::int64_t> linear, std::vector<QuadTerm> quadratic,
            std::int64_t constant);

  int n() const { return n_; }
  std::int64_t constant() const { return constant_; }
  const std::vector<std::int64_t>& linear() const { return linear_; }
  const std::vector<QuadTerm>& quadratic() const { return quadratic_; }
  // Coefficient of s_i s_j (0 if absent); order of i and j does not matter.
  std::int64_t coupling(int i, int j) const;

  struct Neighbor {
    int var;
    std::int64_t coeff;
  };
  std::span<const Neighbor> neighbors(int i) const {
    return {adjacency_.data() + adj_begin_[i], adjacency_.data() + adj_begin_[i + 1]};
  }

  std::int64_t energy(std::span<const std::uint8_t> bits) const;
  std::int64_t energy(const Solution& s) const { return energy(s.bits); }

  // Penalty weight and IP weights this model was built with (informational).
  std::int64_t rho = 0;
  std::int64_t alpha = 0;
  std::int64_t beta = 0;

 private:
  int n_ = 0;
  std::vector<std::int64_t> linear_;
  std::vector<QuadTerm> quadratic_;
  std::int64_t constant_ = 0;
  std::vector<std::size_t> adj_begin_{0};
  std::vector<Neighbor> adjacency_;
};

// Penalty weight per constraint family; the uniform choice sets all to rho.
struct PenaltyWeights {
  std::int64_t balance = 0;
  std::int64_t at_most_one = 0;
  std::int64_t c1 = 0, c2 = 0, c3 = 0, c4 = 0;

  static PenaltyWeights uniform(std::int64_t rho) { return {rho, rho, rho, rho, rho, rho}; }
};

struct RhoBound {
  std::int64_t bound = 0;  // beta(|R|+1) - alpha(1 + sum_r (Bw_min + Bp_min))
  std::int64_t rho = 1;    // smallest integer > bound, at least 1
  bool clamped = false;    // bound + 1 was below 1
};

// Requests with an empty working or protection set contribute 0 to the sum.
RhoBound rho_base(const Instance& instance, const Weights& weights);

// rho = beta + 100, the annealing default.
std::int64_t default_rho(const Weights& weights);

QuboModel build_qubo(const Instance& instance, const ConflictSets& sets, const Weights& weights,
                     std::int64_t rho);
QuboModel build_qubo(const Instance& instance, const ConflictSets& sets, const Weights& weights,
                     const PenaltyWeights& penalties);

struct PenaltyBreakdown {
  std::int64_t balance = 0;      // sum_r (sum_w x - sum_p y)^2
  std::int64_t at_most_one = 0;  // sum_r (sum_w x)(sum_w x - 1)
  std::int64_t c1 = 0, c2 = 0, c3 = 0, c4 = 0;
  std::int64_t total_g = 0;
};

// Evaluates the penalty terms directly from the constraint definitions.
PenaltyBreakdown penalty(const Instance& instance, const ConflictSets& sets,
                         const Solution& solution);

// E(flip(s, var)) - E(s). Throws std::out_of_range for a bad index.
std::int64_t flip_delta(const QuboModel& qubo, std::span<const std::uint8_t> bits, int var);
inline std::int64_t flip_delta(const QuboModel& qubo, const Solution& s, int var) {
  return flip_delta(qubo, s.bits, var);
}

// Plain-text sparse format: "n constant", then "i j coeff" lines sorted by
// (i, j), with i == j for linear terms.
void write_qubo(std::ostream& out, const QuboModel& qubo);
QuboModel read_qubo(std::istream& in);

}  // namespace rwap

#endif  // RWAP_QUBO_H_
