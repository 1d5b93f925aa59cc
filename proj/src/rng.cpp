#include "ace/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ace::rng {

uint64_t Stream::below(uint64_t n) {
  if (n == 0) throw std::invalid_argument("rng: below(0)");
  uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t draw;
  do {
    draw = gen_();
  } while (draw >= limit);
  return draw % n;
}

double Stream::normal() {
  double u1 = next_unit();
  double u2 = next_unit();
  // Guard the log; next_unit can return exactly 0.
  u1 = std::max(u1, 0x1.0p-53);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

int64_t binomial(Stream& stream, int64_t n, double p) {
  if (n < 0) throw std::invalid_argument("rng: binomial with n < 0");
  if (n == 0 || p <= 0.0) return 0;
  if (p >= 1.0) return n;
  if (p > 0.5) return n - binomial(stream, n, 1.0 - p);

  double mean = static_cast<double>(n) * p;
  if (n <= 64) {
    int64_t hits = 0;
    for (int64_t i = 0; i < n; ++i)
      if (stream.next_unit() < p) ++hits;
    return hits;
  }
  if (mean <= 1000.0) {
    // Waiting-time method: geometric gaps between successes, ~n*p iterations.
    const double log_q = std::log1p(-p);
    int64_t hits = 0;
    int64_t trials = 0;
    while (true) {
      double u = std::max(stream.next_unit(), 0x1.0p-53);
      trials += static_cast<int64_t>(std::floor(std::log(u) / log_q)) + 1;
      if (trials > n) break;
      ++hits;
    }
    return hits;
  }
  double sd = std::sqrt(mean * (1.0 - p));
  double draw = std::round(mean + sd * stream.normal());
  return std::clamp<int64_t>(static_cast<int64_t>(draw), 0, n);
}

}  // namespace ace::rng
