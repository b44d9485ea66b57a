// Copyright 2026 The qphase Authors
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

#ifndef QPHASE_RANDOM_H
#define QPHASE_RANDOM_H

#include <cstdint>
#include <random>

namespace qphase {

/// The generator behind every seeded result: 64-bit Mersenne Twister, seeded
/// through std::seed_seq from (seed, stream). Both algorithms are fixed by the
/// C++ standard, so outputs are identical across platforms.
inline std::mt19937_64 seeded_engine(uint64_t seed, uint64_t stream = 0) {
    std::seed_seq seq{
        static_cast<uint32_t>(seed),
        static_cast<uint32_t>(seed >> 32),
        static_cast<uint32_t>(stream),
        static_cast<uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

/// Uniform double in [0, 1) from the top 53 bits. Avoids
/// std::uniform_real_distribution, whose output is implementation-defined.
inline double uniform01(std::mt19937_64 &engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

}  // namespace qphase

#endif
