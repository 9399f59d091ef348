#pragma once

#include <cmath>
#include <cstdint>

namespace loewner {

// splitmix64; the de-facto standard 64-bit mixer.
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform on [0,1)
  double uniform01() { return double(next() >> 11) * 0x1.0p-53; }
  // uniform on (0,1]
  double uniform01_open0() { return double((next() >> 11) + 1) * 0x1.0p-53; }
};

// Counter-based seed derivation: sample i of a batch keyed by master_seed
// gets its own independent stream, regardless of scheduling.
inline uint64_t mix64(uint64_t master_seed, uint64_t counter) {
  SplitMix64 m(master_seed ^ (counter * 0xd1b54a32d192ed03ULL + 0x8cb92ba72f3d8dd7ULL));
  uint64_t a = m.next();
  uint64_t b = m.next();
  return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

// Deterministic distributions layered on SplitMix64. std:: distributions are
// implementation-defined, which would break bit-exact reproducibility claims.
struct RandomStream {
  SplitMix64 gen;

  explicit RandomStream(uint64_t seed) : gen(seed) {}

  double uniform() { return gen.uniform01(); }

  // Box-Muller, no caching (two uniforms per normal keeps the stream layout
  // independent of call history).
  double normal() {
    double u1 = gen.uniform01_open0();
    double u2 = gen.uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  double exponential() { return -std::log(gen.uniform01_open0()); }

  // Knuth multiplication method; fine for the small lambda = rate*dt used here.
  int poisson(double lambda) {
    if (lambda <= 0) return 0;
    double limit = std::exp(-lambda);
    int k = 0;
    double prod = gen.uniform01_open0();
    while (prod > limit) {
      ++k;
      prod *= gen.uniform01_open0();
    }
    return k;
  }

  // Chambers-Mallows-Stuck sampler for the standard symmetric alpha-stable
  // law with characteristic function exp(-|xi|^alpha). At alpha=2 the formula
  // reduces algebraically to 2*sin(V)*sqrt(W) ~ N(0,2).
  double stable_symmetric(double alpha) {
    double v = M_PI * (gen.uniform01() - 0.5);
    double w = exponential();
    double cv = std::cos(v);
    double x = std::sin(alpha * v) / std::pow(cv, 1.0 / alpha);
    double ratio = std::cos((1.0 - alpha) * v) / w;
    return x * std::pow(ratio, (1.0 - alpha) / alpha);
  }
};

}  // namespace loewner
