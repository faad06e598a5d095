#include "itrig/random.hpp"

#include "itrig/arith.hpp"

namespace itrig {

long long Sampler::uniform(long long lo, long long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<long long>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return static_cast<long long>(static_cast<std::uint64_t>(lo) + x % span);
}

IntMatrix random_unimodular(Sampler& rng, Eigen::Index n, int steps) {
  IntMatrix u = IntMatrix::Identity(n, n);
  if (n == 1) return rng.coin(1, 2) ? u : IntMatrix(-u);
  const int count = static_cast<int>(rng.uniform(1, steps));
  for (int s = 0; s < count; ++s) {
    const auto i = static_cast<Eigen::Index>(rng.uniform(0, n - 1));
    auto j = static_cast<Eigen::Index>(rng.uniform(0, n - 2));
    if (j >= i) ++j;
    switch (rng.uniform(0, 4)) {
      case 0: u.row(i).swap(u.row(j)); break;
      case 1: u.row(i) = -u.row(i); break;
      default: u.row(i) += Integer(rng.uniform(-3, 3)) * u.row(j); break;
    }
  }
  return u;
}

namespace {

IntVector random_vertex(Sampler& rng, Eigen::Index n) {
  IntVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = rng.uniform(-20, 20);
  return v;
}

}  // namespace

Cone random_cone(Sampler& rng, Eigen::Index n, Eigen::Index k, long long bound) {
  IntMatrix m(n, k);
  do {
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index c = 0; c < k; ++c) m(r, c) = rng.uniform(-bound, bound);
  } while (rank(m) != k);
  return Cone(random_vertex(rng, n), m);
}

Cone random_simple_cone(Sampler& rng, Eigen::Index n, Eigen::Index k, long long max_sine) {
  const long long s = rng.uniform(2, max_sine);
  IntMatrix g = IntMatrix::Zero(n, k);
  for (Eigen::Index i = 0; i + 1 < k; ++i) {
    g(i, i) = 1;
    long long a;
    do a = rng.uniform(0, s - 1);
    while (gcd(a, s) != 1);
    g(i, k - 1) = a;
  }
  g(k - 1, k - 1) = s;
  return Cone(random_vertex(rng, n), random_unimodular(rng, n) * g);
}

}  // namespace itrig
