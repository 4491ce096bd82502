#ifndef VCPCERT_RNG_HPP
#define VCPCERT_RNG_HPP

#include <cstdint>
#include <string_view>

namespace vcpcert {

// SplitMix64. The generator is pinned: the same seed yields a byte-identical
// stream on every platform, and all sampling in the library is driven through
// this type so frames and reports reproduce exactly.
//
// Substreams: substream(seed, id) mixes the id into the seed before use, so
// independent consumers (suites, parallel generators) can derive disjoint
// deterministic streams from one user seed.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Value in [0, bound). Plain modulo: the sampling here does not need to be
  // uniform, only deterministic.
  uint64_t below(uint64_t bound) { return next_u64() % bound; }

  static uint64_t mix(uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
  }

  static Rng substream(uint64_t seed, uint64_t id) {
    return Rng(mix(seed ^ mix(id + 0x632BE59BD9B4E019ull)));
  }

 private:
  uint64_t state_;
};

// FNV-1a, used to derive per-suite substream ids from suite names.
constexpr uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 0xCBF29CE484222325ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ull;
  }
  return h;
}

}  // namespace vcpcert

#endif
