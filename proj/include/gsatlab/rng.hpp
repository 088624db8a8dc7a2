// splitmix64 generator plus deterministic stream derivation for campaign seeds.
#pragma once

#include <cstdint>
#include <string_view>

namespace gsat {

// Finalizer of the splitmix64 step; a bijection on 64-bit words.
constexpr uint64_t mix64(uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

constexpr uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<uint8_t>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

class SplitMix64 {
 public:
  SplitMix64() = default;
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  // Uniform draw from [0, bound); bound must be nonzero.
  uint64_t bounded(uint64_t bound) {
    return static_cast<uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  bool coin() { return (next() >> 63) != 0; }

  double next_double() {  // [0, 1)
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  uint64_t state_ = 0;
};

// Pure function of its arguments; distinct (tag, a, b) tuples yield
// independent streams under the same master seed.
constexpr uint64_t derive_stream_seed(uint64_t master, std::string_view tag,
                                      uint64_t a, uint64_t b) {
  uint64_t s = mix64(master ^ fnv1a64(tag));
  s = mix64(s ^ a);
  s = mix64(s ^ b);
  return s;
}

}  // namespace gsat
