#ifndef MOQGA_RNG_HPP
#define MOQGA_RNG_HPP

#include <cstdint>
#include <random>

namespace moqga {

// splitmix64 finalizer; used both for seed mixing and for stateless
// per-key draws (e.g. execution times keyed by (task, uav, resource)).
inline std::uint64_t hash64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t key) {
  return hash64(seed ^ hash64(key));
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t k1,
                              std::uint64_t k2) {
  return hash64(mix_seed(seed, k1) ^ hash64(k2 + 0x51ed270b0a9cd1ceULL));
}

// Deterministic uniform deviates on top of mt19937_64. The [0,1) mapping is
// done by hand so output bits do not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // uniform in [0, 1)
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

  // uniform integer in [0, n)
  std::uint64_t below(std::uint64_t n) {
    // rejection-free modulo bias is negligible for the small n used here,
    // but stay exact anyway
    std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t r = engine_();
      if (r >= threshold) return r % n;
    }
  }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

// Stateless uniform draw keyed by (seed, keys): same key, same value.
inline double keyed_uniform(std::uint64_t seed, std::uint64_t k1,
                            std::uint64_t k2, std::uint64_t k3, double lo,
                            double hi) {
  std::uint64_t h = hash64(mix_seed(seed, k1, k2) ^ hash64(k3 + 0x2545f4914f6cdd1dULL));
  double u = static_cast<double>(h >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

}  // namespace moqga

#endif  // MOQGA_RNG_HPP
