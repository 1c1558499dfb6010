// util/rng.h

// Copyright 2026  The ctxasr Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef CTXASR_UTIL_RNG_H_
#define CTXASR_UTIL_RNG_H_

#include <cstdint>
#include <string_view>
#include <vector>

namespace ctxasr {

// Deterministic 64-bit generator (splitmix64).  Everything stochastic in this
// codebase draws from it so that results are reproducible bit-for-bit across
// runs and platforms; the standard <random> distributions are deliberately
// avoided because their output is implementation-defined.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t Next();

  // Uniform in [0, 1) with 53 random bits.
  double Uniform();

  // Uniform in [lo, hi).
  double Uniform(double lo, double hi);

  // Uniform integer in [0, n); n must be positive.
  int UniformInt(int n);

  // Standard normal via Box-Muller.
  double Normal();

  // Fisher-Yates shuffle.
  template <typename T>
  void Shuffle(std::vector<T>* items) {
    for (int i = static_cast<int>(items->size()) - 1; i > 0; --i) {
      int j = UniformInt(i + 1);
      std::swap((*items)[i], (*items)[j]);
    }
  }

 private:
  uint64_t state_;
};

// FNV-1a over the bytes of a string; stable across platforms.
uint64_t Fnv1a64(std::string_view text);

// Mixes two seeds into one stream key.
uint64_t MixSeed(uint64_t a, uint64_t b);

// Generator keyed on (seed, name); the stream depends on nothing else.
Rng KeyedRng(uint64_t seed, std::string_view name);

}  // namespace ctxasr

#endif  // CTXASR_UTIL_RNG_H_
