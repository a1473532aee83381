// Copyright 2026 The TreeNoise Authors
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

// Counter-based random streams. A stream is a pure function of its seed and
// key tuple, so draws for a given (record, attribute) never depend on the
// order in which records are visited or on how many workers visit them.
//
// The standard <random> distributions are implementation-defined, so the
// uniform-to-normal transform is done here to keep outputs identical across
// standard libraries.

#ifndef TREENOISE_RNG_H_
#define TREENOISE_RNG_H_

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>

namespace treenoise {

inline constexpr std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stage identifiers used as the first key component by the perturbation code.
enum class RngStage : std::uint64_t {
  kLrpaNoise = 1,
  kLwpaNoise = 2,
  kConstantShift = 3,
  kCapt = 4,
  kSplit = 5,
};

class KeyedStream {
 public:
  KeyedStream(std::uint64_t seed, std::initializer_list<std::uint64_t> key)
      : state_(SplitMix64(seed)) {
    for (std::uint64_t k : key) {
      state_ = SplitMix64(state_ ^ SplitMix64(k + 0x632be59bd9b4e019ULL));
    }
  }

  std::uint64_t NextU64() { return SplitMix64(state_ + 0xd1b54a32d192ed03ULL * ++counter_); }

  // Uniform in the open interval (0, 1).
  double NextUniform() {
    return (static_cast<double>(NextU64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Uniform integer in [0, n). n must be positive.
  std::uint64_t NextBelow(std::uint64_t n) {
    // Rejection sampling removes modulo bias.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x = NextU64();
    while (x >= limit) x = NextU64();
    return x % n;
  }

  // Standard normal via Box-Muller; one value per call.
  double NextGaussian() {
    const double u1 = NextUniform();
    const double u2 = NextUniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::uint64_t state_;
  std::uint64_t counter_ = 0;
};

}  // namespace treenoise

#endif  // TREENOISE_RNG_H_
