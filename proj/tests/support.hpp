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

#ifndef HYREC_TESTS_SUPPORT_HPP
#define HYREC_TESTS_SUPPORT_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "hyrec/hyrec.hpp"
#include "oracles.hpp"

namespace testing_support {

using hyrec::PrimeField;
using FpPoly = hyrec::Polynomial<PrimeField>;

inline std::shared_ptr<const PrimeField> fp(std::uint64_t p) { return std::make_shared<const PrimeField>(p); }

/// Polynomial over F_p from ascending integer coefficients.
inline FpPoly poly(const std::shared_ptr<const PrimeField>& f, const std::vector<std::int64_t>& c) {
    std::vector<PrimeField::Element> v;
    for (auto x : c) v.push_back(f->from_int(x));
    return FpPoly(f, std::move(v));
}

inline oracle::Poly plain(const FpPoly& f) {
    oracle::Poly out;
    for (auto c : f.coeffs()) out.push_back(c.value);
    return out;
}

inline oracle::Poly plain(const hyrec::IntegerPolynomial& f) {
    oracle::Poly out;
    for (const auto& c : f.coeffs()) out.push_back(c.convert_to<std::int64_t>());
    return out;
}

/// Random monic polynomial of degree n with coefficients in [-r, r].
inline hyrec::IntegerPolynomial random_monic(unsigned n, int r, hyrec::Rng& rng) {
    std::uniform_int_distribution<int> dist(-r, r);
    std::vector<hyrec::BigInt> c;
    for (unsigned i = 0; i < n; ++i) c.emplace_back(dist(rng));
    c.emplace_back(1);
    return hyrec::IntegerPolynomial(std::move(c));
}

}  // namespace testing_support

#endif  // HYREC_TESTS_SUPPORT_HPP
