#pragma once

#include "ecf/types.hpp"

#include <cstdint>

namespace ecf {

// splitmix64; used both as a generator and to derive independent streams
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e9b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// xoshiro256** seeded from splitmix64. Deterministic across platforms, cheap
// to construct per sample so that results do not depend on the worker count.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : s_) word = splitmix64(sm);
  }
  // stream derivation for (seed, sample index) pairs
  Rng(std::uint64_t seed, std::uint64_t stream) : Rng(mix(seed, stream)) {}

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // uniform double in (0,1): 53 random bits, offset by half an ulp
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  std::uint64_t below(std::uint64_t n) {  // unbiased via rejection
    const std::uint64_t limit = n * (UINT64_MAX / n);
    std::uint64_t x;
    do { x = next_u64(); } while (x >= limit);
    return x % n;
  }

  // random dyadic numerator with `bits` bits: uniform in [0, 2^bits)
  Integer bits_integer(unsigned bits) {
    Integer out = 0;
    unsigned got = 0;
    while (got < bits) {
      unsigned take = std::min(64u, bits - got);
      std::uint64_t w = next_u64() >> (64 - take);
      out <<= take;
      out += w;
      got += take;
    }
    return out;
  }

  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a;
    std::uint64_t h = splitmix64(s);
    s ^= b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return splitmix64(s);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t s_[4];
};

}  // namespace ecf
