//
// Copyright 2026 The Orthonoise Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef ORTHONOISE_RNG_H_
#define ORTHONOISE_RNG_H_

#include <cstdint>
#include <initializer_list>

namespace orthonoise {

// SplitMix64. Each Next() does
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
// so sequences are identical on every platform.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(uint64_t seed) : state_(seed) {}

  constexpr uint64_t Next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Unbiased draw from [0, n) by rejection; n must be positive.
  constexpr uint64_t Uniform(uint64_t n) {
    const uint64_t threshold = (0 - n) % n;
    uint64_t r = Next();
    while (r < threshold) r = Next();
    return r % n;
  }

  constexpr uint64_t state() const { return state_; }

 private:
  uint64_t state_;
};

// Derives a child seed from `seed` and a path of integers (line index, noise
// type code, variant index, ...). Each step is h = SplitMix64(h ^ v).Next().
constexpr uint64_t DeriveSeed(uint64_t seed,
                              std::initializer_list<uint64_t> path) {
  uint64_t h = SplitMix64(seed).Next();
  for (uint64_t v : path) h = SplitMix64(h ^ v).Next();
  return h;
}

}  // namespace orthonoise

#endif  // ORTHONOISE_RNG_H_
