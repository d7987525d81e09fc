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

#ifndef HYREC_FF_PRIME_FIELD_HPP
#define HYREC_FF_PRIME_FIELD_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hyrec/error.hpp"
#include "hyrec/random.hpp"

namespace hyrec {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e != 0) {
        if (e & 1U) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1U;
    }
    return r;
}

}  // namespace detail

/// Deterministic primality test for the full 64-bit range: trial division by
/// small primes, then Miller-Rabin with the seven-witness set of Jim Sinclair.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    constexpr std::array<std::uint64_t, 12> small{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto q : small) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    constexpr std::array<std::uint64_t, 7> witnesses{2, 325, 9375, 28178, 450775, 9780504, 1795265022};
    for (auto w : witnesses) {
        std::uint64_t a = w % n;
        if (a == 0) continue;
        std::uint64_t x = detail::powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = detail::mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// The prime field F_p for an odd prime p < 2^31.
///
/// Elements are plain residues in [0, p); all arithmetic goes through the
/// context, which is immutable after construction and can be shared freely.
class PrimeField {
public:
    struct Element {
        std::uint32_t value = 0;
        friend auto operator<=>(const Element&, const Element&) = default;
    };

    static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31U);

    explicit PrimeField(std::uint64_t p) : p_(static_cast<std::uint32_t>(p)) {
        if (p == 2) throw Error(ErrorCode::BadCharacteristic, "characteristic 2 is not supported");
        if (p >= kMaxModulus) throw Error(ErrorCode::NotPrime, "modulus must be below 2^31");
        if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    }

    std::uint32_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return 1; }
    BigInt order() const { return BigInt(p_); }
    std::uint64_t fingerprint() const noexcept { return mix_seed(p_); }

    Element zero() const noexcept { return {0}; }
    Element one() const noexcept { return {1}; }

    Element from_int(std::int64_t v) const noexcept {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return {static_cast<std::uint32_t>(r)};
    }

    Element from_bigint(const BigInt& v) const {
        BigInt r = v % p_;
        if (r < 0) r += p_;
        return {r.convert_to<std::uint32_t>()};
    }

    bool is_zero(Element a) const noexcept { return a.value == 0; }

    Element add(Element a, Element b) const noexcept {
        std::uint32_t s = a.value + b.value;
        return {s >= p_ ? s - p_ : s};
    }
    Element sub(Element a, Element b) const noexcept {
        return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
    }
    Element neg(Element a) const noexcept { return {a.value == 0 ? 0 : p_ - a.value}; }
    Element mul(Element a, Element b) const noexcept {
        return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % p_)};
    }

    /// a^e by square-and-multiply; a^0 = 1 for every a, including 0.
    Element pow(Element a, std::uint64_t e) const noexcept {
        return {static_cast<std::uint32_t>(detail::powmod_u64(a.value, e, p_))};
    }

    /// Inverse by the extended Euclidean algorithm.
    Element inv(Element a) const {
        if (a.value == 0) throw Error(ErrorCode::NonInvertible, "zero has no inverse");
        std::int64_t r0 = p_, r1 = a.value, s0 = 0, s1 = 1;
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            std::int64_t t = r0 - q * r1;
            r0 = r1;
            r1 = t;
            t = s0 - q * s1;
            s0 = s1;
            s1 = t;
        }
        return from_int(s0);
    }

    Element frobenius(Element a) const noexcept { return a; }
    Element pth_root(Element a) const noexcept { return a; }

    Element random(Rng& rng) const {
        std::uniform_int_distribution<std::uint32_t> dist(0, p_ - 1);
        return {dist(rng)};
    }

    /// Enumerates the field: index in [0, p) maps to the residue with that value.
    Element element_at(std::uint64_t index) const noexcept {
        return {static_cast<std::uint32_t>(index % p_)};
    }

    std::vector<std::uint32_t> coefficients(Element a) const { return {a.value}; }
    std::string to_string(Element a) const { return std::to_string(a.value); }

    friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept { return a.p_ == b.p_; }

private:
    std::uint32_t p_;
};

}  // namespace hyrec

#endif  // HYREC_FF_PRIME_FIELD_HPP
