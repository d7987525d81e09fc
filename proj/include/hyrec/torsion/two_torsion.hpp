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

/*
   Two-torsion of odd-degree hyperelliptic Jacobians.

   A root e of f gives the Weierstrass point (e, 0) and the class
   (x - e, 0) = P_e - P_inf, which has order 2. Over a field where f splits,
   the 2g + 1 such classes sum to zero and any 2g of them form an F_2-basis of
   J[2]. Over the prime field, the rational 2-torsion consists of the classes
   (u, 0) with u a monic divisor of f of degree <= g; complementary factor
   subsets of f have degrees summing to 2g + 1, so exactly one of each pair
   qualifies and there are 2^(n-1) classes for n irreducible factors.
*/

#ifndef HYREC_TORSION_TWO_TORSION_HPP
#define HYREC_TORSION_TWO_TORSION_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "hyrec/error.hpp"
#include "hyrec/ff/ext_field.hpp"
#include "hyrec/ff/prime_field.hpp"
#include "hyrec/jacobian/jacobian.hpp"
#include "hyrec/poly/factor.hpp"
#include "hyrec/random.hpp"
#include "hyrec/torsion/binary_matrix.hpp"

namespace hyrec {

/// (x - e, 0) for a root e of f. Order exactly 2.
template <class F>
MumfordDivisor<F> embed_root(const typename F::Element& e, const HyperellipticCurve<F>& c) {
    if (!c.field().is_zero(c.f()(e)))
        throw Error(ErrorCode::NotARoot, c.field().to_string(e) + " is not a root of f");
    return make_divisor(Polynomial<F>::linear(c.field_ptr(), e), Polynomial<F>(c.field_ptr()), c);
}

template <class F>
struct TwoTorsionSubgroup {
    std::vector<MumfordDivisor<F>> elements;  ///< canonical order, identity first
    unsigned rank = 0;                        ///< F_2-dimension
    unsigned factor_count = 0;                ///< distinct irreducible factors of f
};

/// F_2-rank of a finite set of 2-torsion classes, computed with the group law:
/// grows a span one generator at a time and counts the generators used.
template <class F>
unsigned f2_rank(const std::vector<MumfordDivisor<F>>& elements, const HyperellipticCurve<F>& c) {
    std::vector<MumfordDivisor<F>> span{identity(c)};
    unsigned rank = 0;
    auto contains = [&span](const MumfordDivisor<F>& d) { return std::find(span.begin(), span.end(), d) != span.end(); };
    for (const auto& e : elements) {
        if (contains(e)) continue;
        const std::size_t n = span.size();
        for (std::size_t i = 0; i < n; ++i) span.push_back(add(span[i], e, c));
        ++rank;
    }
    return rank;
}

/// All rational 2-torsion classes, built from the irreducible factors of f and
/// each checked by Cantor doubling.
template <class F>
TwoTorsionSubgroup<F> two_torsion_points(const HyperellipticCurve<F>& c, Rng& rng) {
    if (!is_squarefree(c.f())) throw Error(ErrorCode::NotSquarefree, "f has a repeated factor");
    const auto fac = factorize(c.f(), rng);
    const auto n = static_cast<unsigned>(fac.factors.size());
    if (n > 20) throw Error(ErrorCode::CapExceeded, "too many factors to enumerate subsets");
    const int g = static_cast<int>(c.genus());

    TwoTorsionSubgroup<F> out;
    out.factor_count = n;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        int deg = 0;
        for (unsigned i = 0; i < n; ++i)
            if ((mask >> i) & 1U) deg += fac.factors[i].first.degree();
        if (deg > g) continue;
        auto u = Polynomial<F>::one(c.field_ptr());
        for (unsigned i = 0; i < n; ++i)
            if ((mask >> i) & 1U) u *= fac.factors[i].first;
        auto d = make_divisor(std::move(u), Polynomial<F>(c.field_ptr()), c);
        if (!add(d, d, c).is_identity())
            throw Error(ErrorCode::VerificationFailed, "2-torsion candidate " + d.to_string() + " does not double to 0");
        out.elements.push_back(std::move(d));
    }
    std::sort(out.elements.begin(), out.elements.end(),
              [](const auto& a, const auto& b) { return canonical_less(a, b); });
    out.rank = f2_rank(out.elements, c);
    if (out.elements.size() != (std::size_t{1} << out.rank) || out.rank + 1 != n)
        throw Error(ErrorCode::VerificationFailed, "2-torsion count does not match 2^(n-1)");
    return out;
}

template <class F>
TwoTorsionSubgroup<F> two_torsion_points(const HyperellipticCurve<F>& c, std::uint64_t seed = kDefaultSeed) {
    Rng rng(seed);
    return two_torsion_points(c, rng);
}

template <class F>
unsigned two_torsion_rank(const HyperellipticCurve<F>& c, std::uint64_t seed = kDefaultSeed) {
    return two_torsion_points(c, seed).rank;
}

/// Roots of f in its splitting field with their embedded 2-torsion classes.
struct TorsionBasis {
    std::shared_ptr<const ExtField> field;
    HyperellipticCurve<ExtField> curve;
    std::vector<ExtField::Element> roots;               ///< all 2g + 1, canonical order
    std::vector<MumfordDivisor<ExtField>> embedded;     ///< embed_root of each root

    unsigned genus() const noexcept { return curve.genus(); }
    /// v_1 .. v_2g
    std::vector<MumfordDivisor<ExtField>> basis() const {
        return {embedded.begin(), embedded.begin() + 2 * genus()};
    }
};

/// Degree of the splitting field of a squarefree f over F_p: lcm of its factor degrees.
inline unsigned splitting_degree(const Factorization<PrimeField>& fac) {
    unsigned k = 1;
    for (const auto& [g, m] : fac.factors) k = std::lcm(k, static_cast<unsigned>(g.degree()));
    return k;
}

/// All 2^(2g) F_2-combinations of the basis; entry `mask` is the sum of v_i over set bits i.
inline std::vector<MumfordDivisor<ExtField>> span_table(const TorsionBasis& tb) {
    const unsigned n = 2 * tb.genus();
    if (n > 24) throw Error(ErrorCode::CapExceeded, "basis too large to tabulate");
    std::vector<MumfordDivisor<ExtField>> table;
    table.reserve(std::size_t{1} << n);
    table.push_back(identity(tb.curve));
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        const unsigned low = static_cast<unsigned>(std::countr_zero(mask));
        table.push_back(add(table[mask & (mask - 1)], tb.embedded[low], tb.curve));
    }
    return table;
}

inline constexpr unsigned kExhaustiveIndependenceGenus = 6;

/// Builds the splitting field, embeds all roots and verifies the basis structure:
/// each v_i has order 2, every nonempty combination of v_1..v_2g is nonzero
/// (exhaustive up to genus 6) and the sum of all 2g + 1 classes is zero.
inline TorsionBasis torsion_basis(const Polynomial<PrimeField>& f, std::uint64_t seed = kDefaultSeed,
                                  unsigned degree_cap = ExtField::kDefaultDegreeCap) {
    const HyperellipticCurve<PrimeField> base_curve(f);
    Rng rng(seed);
    const auto fac = factorize(f, rng);
    const unsigned k = splitting_degree(fac);
    auto ext = ExtField::random(f.field_ptr(), k, derive_seed(seed, k), degree_cap);
    auto rts = roots_in(f, ext, rng);
    const unsigned g = base_curve.genus();
    if (rts.size() != 2 * g + 1)
        throw Error(ErrorCode::VerificationFailed, "f does not split in the constructed field");

    TorsionBasis tb{ext, HyperellipticCurve<ExtField>(lift(f, ext)), std::move(rts), {}};
    for (const auto& e : tb.roots) {
        auto d = embed_root(e, tb.curve);
        if (d.is_identity() || !add(d, d, tb.curve).is_identity())
            throw Error(ErrorCode::VerificationFailed, "embedded root is not of order 2");
        tb.embedded.push_back(std::move(d));
    }
    auto total = identity(tb.curve);
    for (const auto& d : tb.embedded) total = add(total, d, tb.curve);
    if (!total.is_identity()) throw Error(ErrorCode::VerificationFailed, "embedded roots do not sum to 0");

    if (g <= kExhaustiveIndependenceGenus) {
        const auto table = span_table(tb);
        for (std::size_t mask = 1; mask < table.size(); ++mask)
            if (table[mask].is_identity())
                throw Error(ErrorCode::VerificationFailed, "basis is F_2-dependent");
    }
    return tb;
}

/// Applies the p-power Frobenius to the coefficients of a divisor.
inline MumfordDivisor<ExtField> frobenius(const MumfordDivisor<ExtField>& d, const HyperellipticCurve<ExtField>& c) {
    const auto& fd = c.field();
    auto fr = [&fd](const ExtField::Element& a) { return fd.frobenius(a); };
    return {d.u.map_coeffs(fr), d.v.map_coeffs(fr), c.tag()};
}

/// Matrix of a root permutation acting on v_1..v_2g, using v_{2g+1} = v_1 + ... + v_2g.
/// Column i is the image of v_i.
inline BinaryMatrix matrix_from_permutation(const std::vector<unsigned>& perm, unsigned genus) {
    const unsigned n = 2 * genus;
    if (perm.size() != n + 1) throw Error(ErrorCode::Undefined, "permutation must act on 2g + 1 roots");
    const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<std::uint64_t> cols(n);
    for (unsigned i = 0; i < n; ++i) cols[i] = perm[i] < n ? (std::uint64_t{1} << perm[i]) : all;
    return BinaryMatrix(n, std::move(cols));
}

inline std::uint64_t permutation_order(const std::vector<unsigned>& perm) {
    std::uint64_t order = 1;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::uint64_t len = 0;
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        order = std::lcm(order, len);
    }
    return order;
}

struct FrobeniusAction {
    TorsionBasis basis;
    std::vector<unsigned> permutation;  ///< root i maps to root permutation[i]
    BinaryMatrix matrix;
    std::uint64_t permutation_order = 1;
};

/// Frobenius x -> x^p as an element of GL_2g(F_2) in the embedded-root basis.
inline FrobeniusAction frobenius_matrix(const Polynomial<PrimeField>& f, std::uint64_t seed = kDefaultSeed,
                                        unsigned degree_cap = ExtField::kDefaultDegreeCap) {
    auto tb = torsion_basis(f, seed, degree_cap);
    std::vector<unsigned> perm;
    for (const auto& r : tb.roots) {
        const auto image = tb.field->frobenius(r);
        auto it = std::lower_bound(tb.roots.begin(), tb.roots.end(), image);
        if (it == tb.roots.end() || !(*it == image))
            throw Error(ErrorCode::VerificationFailed, "Frobenius image is not a root");
        perm.push_back(static_cast<unsigned>(it - tb.roots.begin()));
    }
    auto m = matrix_from_permutation(perm, tb.genus());
    if (!m.invertible()) throw Error(ErrorCode::VerificationFailed, "Frobenius matrix is singular");
    const auto order = permutation_order(perm);
    return {std::move(tb), std::move(perm), std::move(m), order};
}

}  // namespace hyrec

#endif  // HYREC_TORSION_TWO_TORSION_HPP
