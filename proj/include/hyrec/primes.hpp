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

#ifndef HYREC_PRIMES_HPP
#define HYREC_PRIMES_HPP

#include <cstdint>
#include <vector>

#include "hyrec/error.hpp"

namespace hyrec {

/// All primes <= bound, ascending (odd-only sieve of Eratosthenes).
inline std::vector<std::uint32_t> sieve_primes(std::uint64_t bound) {
    if (bound > (std::uint64_t{1} << 31)) throw Error(ErrorCode::CapExceeded, "prime bound must be below 2^31");
    std::vector<std::uint32_t> out;
    if (bound < 2) return out;
    out.push_back(2);
    // index i stands for 2i + 1
    const std::uint64_t half = (bound - 1) / 2;
    std::vector<bool> composite(half + 1, false);
    for (std::uint64_t i = 1; i <= half; ++i) {
        if (composite[i]) continue;
        const std::uint64_t p = 2 * i + 1;
        out.push_back(static_cast<std::uint32_t>(p));
        for (std::uint64_t j = (p * p - 1) / 2; j <= half; j += p) composite[j] = true;
    }
    return out;
}

}  // namespace hyrec

#endif  // HYREC_PRIMES_HPP
