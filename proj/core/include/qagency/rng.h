// Copyright 2026 The qagency Authors
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

#pragma once

#include <cstdint>
#include <random>

namespace qagency {

/// Seedable generator with a fully specified output stream.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Doubles are produced as (next() >> 11) * 2^-53 instead of going
/// through std::uniform_real_distribution, whose algorithm is left to the
/// library vendor. Two implementations fed the same seed therefore draw the
/// same numbers.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Independent stream for (seed, stream) via one splitmix64 step.
    static Rng stream(std::uint64_t seed, std::uint64_t stream_index) {
        return Rng(splitmix64(seed + 0x9E3779B97F4A7C15ULL * (stream_index + 1)));
    }

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace qagency
