#ifndef RWAP_WEIGHTS_H_
#define RWAP_WEIGHTS_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rwap/conflicts.h"
#include "rwap/instance.h"

namespace rwap {

enum class WeightSource { kExplicit, kBaseFormula, kTightEnumeration };

std::string to_string(WeightSource s);

struct Weights {
  std::int64_t alpha = 1;
  std::int64_t beta = 1;
  std::optional<std::int64_t> m_value;    // unset when no request is grantable
  std::optional<std::int64_t> beta_base;  // |R|(M-2)+3, the alpha=1 base value
  WeightSource source = WeightSource::kExplicit;
};

// max over grantable requests of (longest working + longest protection).
// Requests with an empty working or protection set are skipped.
std::optional<std::int64_t> compute_m(const Instance& instance);

// beta = alpha * (|R| (M - 2) + 2) + 1. |R| counts every request.
// Throws UndefinedMError when no request is grantable.
Weights beta_base(const Instance& instance, std::int64_t alpha = 1);

// Explicit (alpha, beta) with M and beta_base filled in when defined.
Weights explicit_weights(const Instance& instance, std::int64_t alpha, std::int64_t beta);

// Exact fraction with positive denominator, always reduced.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  // Smallest integer strictly greater than this value.
  std::int64_t next_integer_above() const;
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Min and max link usage of feasible solutions, bucketed by grant count.
// levels[k] is unset when no feasible solution grants exactly k requests.
struct FeasibleLevels {
  struct Level {
    std::int64_t min_links = 0;
    std::int64_t max_links = 0;
    std::int64_t solutions = 0;
  };
  std::vector<std::optional<Level>> levels;
  std::int64_t feasible_solutions = 0;
};

constexpr int kDefaultEnumerationCap = 24;

// Enumerates every feasible solution request by request (each request takes
// nothing or one C1-free (working, protection) pair that conflicts with no
// earlier choice). Throws EnumerationLimitError above `max_variables`.
FeasibleLevels enumerate_feasible_levels(const Instance& instance, const ConflictSets& sets,
                                         int max_variables = kDefaultEnumerationCap);

struct OmegaReport {
  std::optional<Rational> omega_eq;  // adjacent grant levels only
  std::optional<Rational> omega_gt;  // every pair of grant levels
  std::optional<std::int64_t> beta_tight;
};

OmegaReport compute_omega(const FeasibleLevels& levels);

// True iff every feasible solution granting more requests has a strictly
// smaller alpha*f_alpha - beta*f_beta than every one granting fewer.
bool check_prioritization(const FeasibleLevels& levels, std::int64_t alpha, std::int64_t beta);

// One request over two link-disjoint paths of lengths l_a (working) and l_b
// (protection) on a single wavelength. Throws ConfigError unless both >= 1.
Instance tight_example(int l_a, int l_b);

}  // namespace rwap

#endif  // RWAP_WEIGHTS_H_
