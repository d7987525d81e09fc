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
   Factorization of univariate polynomials over finite fields of odd
   characteristic: squarefree decomposition, distinct-degree splitting with
   gcd(f, x^(q^d) - x), and Cantor-Zassenhaus equal-degree splitting driven by
   a caller-supplied PRNG.
*/

#ifndef HYREC_POLY_FACTOR_HPP
#define HYREC_POLY_FACTOR_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "hyrec/error.hpp"
#include "hyrec/poly/polynomial.hpp"
#include "hyrec/random.hpp"

namespace hyrec {

template <class F>
struct Factorization {
    typename F::Element unit;
    /// (monic irreducible factor, multiplicity), sorted canonically.
    std::vector<std::pair<Polynomial<F>, unsigned>> factors;

    std::size_t distinct_count() const noexcept { return factors.size(); }
};

/// Reproduces unit * prod factor^mult.
template <class F>
Polynomial<F> expand(const Factorization<F>& fac, const std::shared_ptr<const F>& field) {
    auto p = Polynomial<F>::constant(field, fac.unit);
    for (const auto& [g, m] : fac.factors)
        for (unsigned i = 0; i < m; ++i) p *= g;
    return p;
}

/// Sorted multiset of (degree, multiplicity) pairs of an irreducible factorization.
struct SplittingType {
    std::vector<std::pair<unsigned, unsigned>> parts;
    bool all_linear = false;  ///< every irreducible factor has degree 1
    bool squarefree = false;  ///< every multiplicity is 1

    unsigned total_degree() const noexcept {
        unsigned s = 0;
        for (auto [d, m] : parts) s += d * m;
        return s;
    }
    /// Distinct linear factors only.
    bool splits_completely() const noexcept { return all_linear && squarefree; }

    friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

template <class F>
SplittingType splitting_type(const Factorization<F>& fac) {
    SplittingType t;
    t.all_linear = true;
    t.squarefree = true;
    for (const auto& [g, m] : fac.factors) {
        t.parts.emplace_back(static_cast<unsigned>(g.degree()), m);
        if (g.degree() != 1) t.all_linear = false;
        if (m != 1) t.squarefree = false;
    }
    std::sort(t.parts.begin(), t.parts.end());
    return t;
}

/// True iff gcd(f, f') = 1. Over a perfect field this is exact for every degree:
/// an irreducible factor can only divide f' if it is repeated, since an
/// irreducible polynomial never has zero derivative.
template <class F>
bool is_squarefree(const Polynomial<F>& f) {
    if (f.is_zero()) throw Error(ErrorCode::Undefined, "squarefreeness of the zero polynomial");
    if (f.degree() == 0) return true;
    return gcd(f, f.derivative()).is_one();
}

namespace detail {

/// q-th power map x -> x^q mod m, where q is the field order.
template <class F>
Polynomial<F> frobenius_power_mod(const Polynomial<F>& a, const Polynomial<F>& m) {
    return powmod(a, a.field().order(), m);
}

/// Inverse of g(x) -> g(x)^p for a polynomial whose exponents are all multiples of p.
template <class F>
Polynomial<F> pth_root(const Polynomial<F>& f) {
    const auto p = static_cast<std::size_t>(f.field().characteristic());
    std::vector<typename F::Element> v;
    auto c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); i += p) v.push_back(f.field().pth_root(c[i]));
    return Polynomial<F>(f.field_ptr(), std::move(v));
}

/// Squarefree decomposition of a monic polynomial: list of (squarefree part, multiplicity).
template <class F>
std::vector<std::pair<Polynomial<F>, unsigned>> squarefree_decomposition(const Polynomial<F>& f) {
    std::vector<std::pair<Polynomial<F>, unsigned>> out;
    if (f.degree() <= 0) return out;
    const unsigned p = f.field().characteristic();
    auto d = f.derivative();
    if (d.is_zero()) {
        for (auto& [g, m] : squarefree_decomposition(pth_root(f))) out.emplace_back(std::move(g), m * p);
        return out;
    }
    auto c = gcd(f, d);
    auto w = f / c;
    unsigned i = 1;
    while (!w.is_one()) {
        auto y = gcd(w, c);
        auto z = w / y;
        if (z.degree() > 0) out.emplace_back(z.monic(), i);
        ++i;
        w = std::move(y);
        c = c / w;
    }
    if (c.degree() > 0) {
        for (auto& [g, m] : squarefree_decomposition(pth_root(c.monic()))) out.emplace_back(std::move(g), m * p);
    }
    return out;
}

/// Distinct-degree splitting of a monic squarefree polynomial into (product of all
/// degree-d irreducible factors, d).
template <class F>
std::vector<std::pair<Polynomial<F>, unsigned>> distinct_degree(Polynomial<F> f) {
    std::vector<std::pair<Polynomial<F>, unsigned>> out;
    const auto x = Polynomial<F>::x(f.field_ptr());
    auto h = x % f;
    unsigned d = 0;
    while (f.degree() >= 2 * static_cast<int>(d + 1)) {
        ++d;
        h = frobenius_power_mod(h, f);
        auto g = gcd(f, h - x);
        if (!g.is_one()) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f.monic(), static_cast<unsigned>(f.degree()));
    return out;
}

/// Cantor-Zassenhaus: splits a monic product of distinct degree-d irreducibles (odd q).
template <class F>
std::vector<Polynomial<F>> equal_degree(const Polynomial<F>& g, unsigned d, Rng& rng) {
    const auto n = static_cast<unsigned>(g.degree());
    std::vector<Polynomial<F>> parts{g};
    if (n == d) return parts;
    const BigInt q = g.field().order();
    const BigInt e = (boost::multiprecision::pow(q, d) - 1) / 2;
    const auto one = Polynomial<F>::one(g.field_ptr());
    while (parts.size() < n / d) {
        auto a = Polynomial<F>::random(g.field_ptr(), n, rng);
        if (a.degree() <= 0) continue;
        auto b = powmod(a, e, g) - one;
        std::vector<Polynomial<F>> next;
        for (auto& u : parts) {
            if (u.degree() == static_cast<int>(d) || b.is_zero()) {
                next.push_back(std::move(u));
                continue;
            }
            auto h = gcd(u, b);
            if (h.degree() > 0 && h.degree() < u.degree()) {
                next.push_back(u / h);
                next.push_back(std::move(h));
            } else {
                next.push_back(std::move(u));
            }
        }
        parts = std::move(next);
    }
    for (auto& u : parts) u = u.monic();
    return parts;
}

}  // namespace detail

/// Complete factorization into monic irreducibles. Deterministic for a fixed PRNG state.
template <class F>
Factorization<F> factorize(const Polynomial<F>& f, Rng& rng) {
    if (f.is_zero()) throw Error(ErrorCode::Undefined, "factorization of the zero polynomial");
    Factorization<F> out{f.leading(), {}};
    for (const auto& [part, mult] : detail::squarefree_decomposition(f.monic())) {
        for (const auto& [block, d] : detail::distinct_degree(part)) {
            for (auto& g : detail::equal_degree(block, d, rng)) out.factors.emplace_back(std::move(g), mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    if (!(expand(out, f.field_ptr()) == f))
        throw Error(ErrorCode::VerificationFailed, "factor product does not reproduce the input");
    return out;
}

template <class F>
Factorization<F> factorize(const Polynomial<F>& f, std::uint64_t seed = kDefaultSeed) {
    Rng rng(seed);
    return factorize(f, rng);
}

/// Rabin's test: f of degree n is irreducible iff x^(q^n) = x mod f and
/// gcd(x^(q^(n/r)) - x, f) = 1 for every prime r dividing n.
template <class F>
bool is_irreducible(const Polynomial<F>& f) {
    const int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    const auto m = f.monic();
    const auto x = Polynomial<F>::x(f.field_ptr());
    std::vector<int> maximal;  // n / r for prime r | n
    for (int r = 2, k = n; r <= k; ++r) {
        if (k % r != 0) continue;
        maximal.push_back(n / r);
        while (k % r == 0) k /= r;
    }
    auto h = x % m;
    for (int i = 1; i <= n; ++i) {
        h = detail::frobenius_power_mod(h, m);
        if (std::find(maximal.begin(), maximal.end(), i) != maximal.end() && !gcd(m, h - x).is_one()) return false;
    }
    return h == x % m;
}

/// Distinct roots of f in its own coefficient field, sorted ascending.
template <class F>
std::vector<typename F::Element> roots(const Polynomial<F>& f, Rng& rng) {
    if (f.is_zero()) throw Error(ErrorCode::Undefined, "roots of the zero polynomial");
    std::vector<typename F::Element> out;
    if (f.degree() <= 0) return out;
    const auto m = f.monic();
    const auto x = Polynomial<F>::x(f.field_ptr());
    auto linear_part = gcd(m, detail::frobenius_power_mod(x % m, m) - x);
    if (linear_part.degree() <= 0) return out;
    for (const auto& g : detail::equal_degree(linear_part, 1, rng)) out.push_back(f.field().neg(g.coeff(0)));
    std::sort(out.begin(), out.end());
    return out;
}

template <class F>
std::vector<typename F::Element> roots(const Polynomial<F>& f, std::uint64_t seed = kDefaultSeed) {
    Rng rng(seed);
    return roots(f, rng);
}

}  // namespace hyrec

#endif  // HYREC_POLY_FACTOR_HPP
