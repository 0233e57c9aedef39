#ifndef MOQGA_QIGA_HPP
#define MOQGA_QIGA_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "moqga/rng.hpp"

namespace moqga {

using BitString = std::vector<std::uint8_t>;

// A string of m real amplitude pairs (alpha, beta), alpha^2 + beta^2 = 1.
// Per the measurement rule below, |alpha|^2 is the probability of bit 1.
struct QubitChromosome {
  struct Amplitude {
    double alpha;
    double beta;
  };
  std::vector<Amplitude> amplitudes;
  std::optional<BitString> measured;
};

// Rotation-angle lookup indexed by (measured bit, best bit, fitness >= best).
// Each entry names a target bit whose probability grows by `magnitude`
// radians of rotation; target < 0 leaves the qubit alone.
struct RotationPolicy {
  struct Entry {
    double magnitude = 0.0;
    int target = -1;
  };
  Entry table[2][2][2];

  const Entry& lookup(int x, int b, bool fitness_ge) const {
    return table[x][b][fitness_ge ? 1 : 0];
  }

  bool valid() const {
    for (int x = 0; x < 2; ++x)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          if (std::abs(table[x][b][c].magnitude) > std::numbers::pi / 2)
            return false;
    return true;
  }

  // Standard lookup table: when the measured bit disagrees with the best
  // bit, rotate toward the best bit if the best solution is fitter,
  // otherwise toward the own bit. Agreement leaves the qubit unchanged.
  static RotationPolicy standard(double magnitude = 0.01 * std::numbers::pi) {
    RotationPolicy p;
    p.table[0][1][0] = {magnitude, 1};
    p.table[0][1][1] = {magnitude, 0};
    p.table[1][0][0] = {magnitude, 0};
    p.table[1][0][1] = {magnitude, 1};
    return p;
  }
};

struct QigaConfig {
  int population_size = 200;
  int max_iterations = 500;
  RotationPolicy rotation_policy = RotationPolicy::standard();
  std::uint64_t rng_seed = 0;
  // when false, skips the defensive per-generation renormalization so the
  // numeric drift of the rotations themselves can be observed
  bool renormalize = true;
};

struct OptimizerResult {
  BitString best_bits;
  double best_fitness = 0.0;
  std::vector<double> history;  // best-so-far fitness per iteration
  long evaluations = 0;
};

// measure(alpha): r uniform in [0,1); 0 if r > |alpha|^2, else 1.
inline int measure(double alpha, Rng& rng) {
  return rng.uniform() > alpha * alpha ? 0 : 1;
}

inline BitString measure_chromosome(QubitChromosome& chrom, Rng& rng) {
  BitString bits(chrom.amplitudes.size());
  for (std::size_t i = 0; i < bits.size(); ++i)
    bits[i] = static_cast<std::uint8_t>(measure(chrom.amplitudes[i].alpha, rng));
  chrom.measured = bits;
  return bits;
}

namespace detail {

// Signed angle growing the probability of `target`. d|alpha|^2/dtheta at the
// current state is -2*alpha*beta, so the direction flips with sign(alpha*beta);
// the zero boundary resolves to +1.
inline double signed_angle(double magnitude, int target, double alpha,
                           double beta) {
  double s = alpha * beta < 0.0 ? -1.0 : 1.0;
  return target == 1 ? -magnitude * s : magnitude * s;
}

inline void apply_rotation(QubitChromosome::Amplitude& q, double theta) {
  double c = std::cos(theta), s = std::sin(theta);
  double a = q.alpha * c - q.beta * s;
  double b = q.alpha * s + q.beta * c;
  q.alpha = a;
  q.beta = b;
}

}  // namespace detail

inline QubitChromosome rotate(const QubitChromosome& chrom,
                              const BitString& best_bits, double own_fitness,
                              double best_fitness,
                              const RotationPolicy& policy,
                              bool renormalize = true) {
  if (!chrom.measured)
    throw std::logic_error("rotate: chromosome has no measurement");
  if (chrom.measured->size() != best_bits.size() ||
      best_bits.size() != chrom.amplitudes.size())
    throw std::invalid_argument("rotate: length mismatch");
  QubitChromosome out = chrom;
  const bool fitness_ge = own_fitness >= best_fitness;
  for (std::size_t i = 0; i < out.amplitudes.size(); ++i) {
    const auto& entry =
        policy.lookup((*chrom.measured)[i], best_bits[i], fitness_ge);
    if (entry.target < 0 || entry.magnitude == 0.0) continue;
    auto& q = out.amplitudes[i];
    detail::apply_rotation(
        q, detail::signed_angle(entry.magnitude, entry.target, q.alpha, q.beta));
    if (renormalize) {
      double n = std::sqrt(q.alpha * q.alpha + q.beta * q.beta);
      q.alpha /= n;
      q.beta /= n;
    }
  }
  return out;
}

inline std::vector<QubitChromosome> init_population(std::size_t m,
                                                    const QigaConfig& config) {
  const double amp = std::numbers::sqrt2 / 2.0;
  QubitChromosome proto;
  proto.amplitudes.assign(m, {amp, amp});
  return std::vector<QubitChromosome>(
      static_cast<std::size_t>(config.population_size), proto);
}

// Full optimizer loop: measure, evaluate, rotate toward the stored best,
// track the best-ever solution. Fixed iteration count, no early exit.
template <typename Oracle>
OptimizerResult qiga_run(Oracle&& oracle, std::size_t m,
                         const QigaConfig& config) {
  if (m == 0) throw std::invalid_argument("qiga_run: m must be >= 1");
  Rng rng(config.rng_seed);
  auto population = init_population(m, config);
  OptimizerResult result;
  result.history.reserve(static_cast<std::size_t>(config.max_iterations) + 1);

  std::vector<double> fitness(population.size());
  auto measure_and_evaluate = [&] {
    for (std::size_t i = 0; i < population.size(); ++i) {
      measure_chromosome(population[i], rng);
      fitness[i] = oracle(*population[i].measured);
      ++result.evaluations;
    }
  };
  auto track_best = [&] {
    for (std::size_t i = 0; i < population.size(); ++i) {
      if (result.best_bits.empty() || fitness[i] > result.best_fitness) {
        result.best_fitness = fitness[i];
        result.best_bits = *population[i].measured;
      }
    }
    result.history.push_back(result.best_fitness);
  };

  measure_and_evaluate();
  track_best();
  for (int t = 1; t <= config.max_iterations; ++t) {
    measure_and_evaluate();
    for (std::size_t i = 0; i < population.size(); ++i)
      population[i] =
          rotate(population[i], result.best_bits, fitness[i],
                 result.best_fitness, config.rotation_policy, config.renormalize);
    track_best();
  }
  return result;
}

}  // namespace moqga

#endif  // MOQGA_QIGA_HPP
