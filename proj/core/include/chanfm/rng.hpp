// chanfm - channel foundation model toolkit
// Copyright (C) 2026 chanfm contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef CHANFM_RNG_HPP
#define CHANFM_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace chanfm {

// All randomness flows through mt19937_64 plus the explicit draw helpers
// below. The std::*_distribution classes are implementation-defined and
// would break the bit-reproducibility contract, so they are not used.

inline std::uint64_t splitmix64(std::uint64_t &state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Derives a stream seed from (master seed, textual key, index). Used to key
/// per-sample and per-dataset RNG streams so generation is order-independent.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view key, std::uint64_t index) {
    std::uint64_t s = master ^ fnv1a64(key);
    std::uint64_t a = splitmix64(s);
    s = a ^ (index * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
    return splitmix64(s);
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform_in(std::mt19937_64 &rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

/// Unbiased uniform integer in [0, n). Rejection sampling on a power-of-two
/// mask keeps the draw sequence deterministic across platforms.
inline std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t n) {
    if (n == 0)
        return 0;
    std::uint64_t mask = n - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    for (;;) {
        std::uint64_t v = rng() & mask;
        if (v < n)
            return v;
    }
}

/// Standard normal via Box-Muller. Two engine draws per call.
inline double gaussian(std::mt19937_64 &rng) {
    double u1 = uniform01(rng);
    double u2 = uniform01(rng);
    // Guard u1 = 0; log(0) is -inf.
    if (u1 <= 0.0)
        u1 = 0x1.0p-53;
    const double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

} // namespace chanfm

#endif // CHANFM_RNG_HPP
