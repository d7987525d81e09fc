/*
   Copyright 2026 The hyrec Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HYREC_RANDOM_HPP
#define HYREC_RANDOM_HPP

#include <cstdint>
#include <random>

namespace hyrec {

using Rng = std::mt19937_64;

/// Seed used whenever the caller does not supply one.
inline constexpr std::uint64_t kDefaultSeed = 20260101;

/// SplitMix64 finalizer. Used to derive independent per-item seeds from one run seed.
constexpr std::uint64_t mix_seed(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) noexcept {
    return mix_seed(seed ^ mix_seed(salt));
}

}  // namespace hyrec

#endif  // HYREC_RANDOM_HPP
