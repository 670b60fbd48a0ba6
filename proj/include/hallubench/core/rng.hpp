#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace hallubench {

// xoshiro256++ with splitmix64 seeding. All randomness in the project goes
// through this generator so that runs are bit-reproducible for a given seed,
// independent of the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) {
    uint64_t x = seed;
    for (auto& si : s_) si = splitmix64(x);
  }

  // Derives an independent stream from (seed, ids...). Used to give every
  // image / chain / attempt its own generator so work can be reordered or
  // parallelized without changing results.
  static Rng derive(uint64_t seed, std::initializer_list<uint64_t> ids) {
    uint64_t x = seed;
    for (uint64_t id : ids) {
      x = splitmix64(x) ^ (id * 0x9e3779b97f4a7c15ULL);
    }
    return Rng(x);
  }

  uint64_t next_u64() {
    const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0, 1).
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Integer uniform on [lo, hi] inclusive.
  int uniform_int(int lo, int hi) {
    return lo + int(next_u64() % uint64_t(hi - lo + 1));
  }

  // Standard normal via Box-Muller. The paired value is discarded to keep
  // the stream position independent of call parity.
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

 private:
  static uint64_t splitmix64(uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  uint64_t s_[4];
};

}  // namespace hallubench
