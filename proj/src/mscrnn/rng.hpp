#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace mscrnn {

/// Deterministic random source. The engine is std::mt19937_64 (its output
/// sequence is fixed by the standard) and all distributions are implemented
/// here explicitly, so identical seeds give identical streams on every
/// platform and compiler.
class Rng {
public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  /// Derive an independent named sub-stream from a master seed, so that e.g.
  /// data generation, parameter init and batch sampling can be varied
  /// independently while still flowing from one seed.
  static Rng stream(uint64_t master_seed, std::string_view name) {
    return Rng(mix(master_seed ^ fnv1a64(name)));
  }

  uint64_t next_u64() { return eng_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Unbiased integer in [0, n), n > 0.
  uint64_t below(uint64_t n) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % n;
  }

  /// Standard normal via Box-Muller; generates pairs and caches one.
  double normal() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
  }

  static uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return h;
  }

private:
  // splitmix64 finalizer; avoids near-identical engine states for related seeds.
  static uint64_t mix(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  std::mt19937_64 eng_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace mscrnn
