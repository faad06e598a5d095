#pragma once

#include <cstdint>
#include <random>

#include "itrig/lattice.hpp"

namespace itrig {

// Seeded source with a platform-independent uniform integer draw.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi].
  long long uniform(long long lo, long long hi);
  bool coin(int numerator, int denominator) { return uniform(1, denominator) <= numerator; }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// Product of at most `steps` elementary shears, swaps and negations.
IntMatrix random_unimodular(Sampler& rng, Eigen::Index n, int steps = 10);

// k random independent edges in R^n with entries in [-bound, bound] and a random vertex.
Cone random_cone(Sampler& rng, Eigen::Index n, Eigen::Index k, long long bound);

// Simple cone with grid [I a; 0 s], s in [2, max_sine], cosines coprime to s,
// moved by a random unimodular map and translation.
Cone random_simple_cone(Sampler& rng, Eigen::Index n, Eigen::Index k, long long max_sine);

}  // namespace itrig
