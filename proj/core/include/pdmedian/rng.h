//
// Copyright 2026 The pdmedian Authors
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

#ifndef PDMEDIAN_RNG_H_
#define PDMEDIAN_RNG_H_

#include <cstdint>
#include <initializer_list>
#include <random>

namespace pdmedian {

// All randomness in the library flows through this engine so that every
// result is reproducible from an integer seed.
using Rng = std::mt19937_64;

// SplitMix64 finalizer. Bijective on 64-bit words.
uint64_t MixSeed(uint64_t x);

// Derives an independent child seed from `master` and a path of counters,
// e.g. DeriveSeed(master, {distribution, dim, rep}). Distinct paths give
// distinct, well-mixed seeds.
uint64_t DeriveSeed(uint64_t master, std::initializer_list<uint64_t> path);

}  // namespace pdmedian

#endif  // PDMEDIAN_RNG_H_
