#ifndef CVG_RNG_HPP
#define CVG_RNG_HPP

#include <cstdint>

namespace cvg {

// splitmix64: tiny, seedable, identical across platforms.  Used everywhere
// randomness feeds results that must reproduce byte-for-byte.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi] inclusive.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + std::int64_t(next() % std::uint64_t(hi - lo + 1));
  }

  // Uniform over [-r, -1] u [1, r].
  std::int64_t nonzero(std::int64_t r) {
    const std::int64_t v = uniform(1, 2 * r);
    return v <= r ? v : r - v;  // 1..r, then -1..-r
  }

  bool coin() { return next() & 1u; }
};

// Mixes values into a derived seed (order-sensitive).
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  Rng r(a ^ (0x9e3779b97f4a7c15ULL + (b << 6) + (b >> 2)));
  r.next();
  return r.next() ^ b;
}

}  // namespace cvg

#endif
