#pragma once

#include <cstdint>
#include <random>

namespace ace::rng {

/**
 * Seeded random stream with self-contained draw algorithms. std::mt19937_64
 * is bit-specified by the standard; the distributions here are implemented
 * locally because the standard library's are implementation-defined and
 * would break run-to-run reproducibility across toolchains.
 */
class Stream {
 public:
  explicit Stream(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n), unbiased via rejection.
  uint64_t below(uint64_t n);

  // Standard normal via Box-Muller.
  double normal();

 private:
  std::mt19937_64 gen_;
};

// Binomial(n, p) draw. Exact (Bernoulli counting / geometric waiting times)
// for small n*p, normal approximation with continuity correction for large
// n*p where the exact loop would dominate simulation runtime.
int64_t binomial(Stream& stream, int64_t n, double p);

}  // namespace ace::rng
