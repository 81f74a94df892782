// Copyright 2026 The Valet Authors.
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

#ifndef VALET_RNG_H_
#define VALET_RNG_H_

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>

namespace valet {

// SplitMix64 finalizer. Used to derive independent seeds per purpose.
std::uint64_t MixSeed(std::uint64_t x);

// Derives a child seed from a parent seed and a purpose label, e.g.
// DeriveSeed(seed, "agent", 2).
std::uint64_t DeriveSeed(std::uint64_t parent, std::string_view purpose,
                         std::uint64_t index = 0);

// 64-bit FNV-1a over bytes.
std::uint64_t Fnv1a(std::string_view text);

// Seeded random stream. Wraps std::mt19937_64, whose output sequence is fixed
// by the standard; bounded draws use rejection sampling on the raw output so
// the stream is identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform integer in [0, n). n must be positive.
  std::uint64_t Below(std::uint64_t n);

  // Uniform double in [0, 1).
  double Uniform() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

  template <typename T>
  void Shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(Below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace valet

#endif  // VALET_RNG_H_
