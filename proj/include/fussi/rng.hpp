#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace fussi {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seeded generator with platform-independent draw helpers. All library
// randomness goes through this type so runs are bit-reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), gen_(splitmix64(seed)) {}

  // Independent child stream, stable under reordering of other draws.
  Rng derive(std::uint64_t stream) const {
    return Rng(splitmix64(seed_ ^ (0xd1342543de82ef95ULL * (stream + 1))));
  }

  std::uint64_t next() { return gen_(); }

  // Uniform in [0, 1).
  double uniform() { return double(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n), n > 0.
  std::int64_t uniform_int(std::int64_t n) {
    return std::int64_t(uniform() * double(n)) % n;
  }

  // Box-Muller without caching, so the draw count per call is fixed.
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

}  // namespace fussi
