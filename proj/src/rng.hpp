// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Copyright 2026 The syntex authors.

#ifndef SYNTEX_RNG_HPP
#define SYNTEX_RNG_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace syntex {

// SplitMix64. Every random decision in the toolkit flows through this
// generator seeded from values derived with fnv1a/derive_seed, so outputs
// are independent of thread schedule and platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, n). Rejection sampling keeps it exactly uniform.
  uint64_t next_below(uint64_t n) {
    if (n == 0) return 0;
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % n;
  }

  // Seeded Fisher-Yates shuffle of an index vector.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  uint64_t state_;
};

inline uint64_t fnv1a(std::string_view bytes, uint64_t h = 0xCBF29CE484222325ULL) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

inline uint64_t fnv1a_u64(uint64_t value, uint64_t h = 0xCBF29CE484222325ULL) {
  for (int i = 0; i < 8; ++i) {
    h ^= value & 0xFF;
    h *= 0x100000001B3ULL;
    value >>= 8;
  }
  return h;
}

// Positional seed for one (name, index) cell under a master seed.
inline uint64_t derive_seed(uint64_t master, std::string_view name, uint64_t index) {
  return master ^ fnv1a_u64(index, fnv1a(name));
}

inline uint64_t derive_seed(uint64_t master, std::string_view name, uint64_t i, uint64_t j) {
  return master ^ fnv1a_u64(j, fnv1a_u64(i, fnv1a(name)));
}

}  // namespace syntex

#endif  // SYNTEX_RNG_HPP
