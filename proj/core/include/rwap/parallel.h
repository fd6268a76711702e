#ifndef RWAP_PARALLEL_H_
#define RWAP_PARALLEL_H_

#include <cstdint>
#include <functional>
#include <random>

namespace rwap {

// Worker count: `requested` if positive, else RWAP_THREADS if set and
// positive, else std::thread::hardware_concurrency() (at least 1).
int resolve_threads(int requested = 0);

// Calls fn(i) for i in [0, count) on up to `threads` workers and waits.
// Rethrows the first exception (lowest index) after all workers stop.
void parallel_for(int count, int threads, const std::function<void(int)>& fn);

// SplitMix64 finalizer; used to derive independent stream seeds.
std::uint64_t mix64(std::uint64_t x);

// Seed for stream `stream` of tag `tag` under a user seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag, std::uint64_t stream);

// Tags for derive_seed, one per consumer.
inline constexpr std::uint64_t kReplicaStream = 1;
inline constexpr std::uint64_t kExchangeStream = 2;
inline constexpr std::uint64_t kPermutationStream = 3;
inline constexpr std::uint64_t kGeneratorStream = 4;
inline constexpr std::uint64_t kTopologyStream = 5;

using Rng = std::mt19937_64;

// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Uniform integer in [0, bound), bound >= 1. Unbiased (rejection) and
// independent of the standard library's distribution implementations.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

}  // namespace rwap

#endif  // RWAP_PARALLEL_H_
