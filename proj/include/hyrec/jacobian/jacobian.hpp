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
   Imaginary hyperelliptic curves y^2 = f(x), deg f = 2g + 1, and the group
   law of their Jacobians on reduced Mumford pairs (u, v):

     - u monic, deg v < deg u <= g, u | v^2 - f;
     - the neutral element is (1, 0);
     - reduced representatives are unique, so equality is syntactic.

   Addition is Cantor's composition followed by reduction.
*/

#ifndef HYREC_JACOBIAN_JACOBIAN_HPP
#define HYREC_JACOBIAN_JACOBIAN_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hyrec/error.hpp"
#include "hyrec/poly/factor.hpp"
#include "hyrec/poly/polynomial.hpp"
#include "hyrec/random.hpp"

namespace hyrec {

template <class F>
class HyperellipticCurve {
public:
    /// Validates: char != 2, f monic of odd degree >= 3, f squarefree.
    explicit HyperellipticCurve(Polynomial<F> f) : f_(std::move(f)) {
        if (f_.field().characteristic() == 2)
            throw Error(ErrorCode::BadCharacteristic, "characteristic 2 is not supported");
        if (f_.degree() % 2 == 0) throw Error(ErrorCode::EvenDegree, "deg f = " + std::to_string(f_.degree()));
        if (f_.degree() < 3) throw Error(ErrorCode::UnsupportedDegree, "deg f must be at least 3");
        if (!f_.is_monic()) throw Error(ErrorCode::NotMonic, "f must be monic");
        if (!is_squarefree(f_)) throw Error(ErrorCode::NotSquarefree, "f has a repeated factor");
        genus_ = static_cast<unsigned>(f_.degree() - 1) / 2;
        tag_ = f_.field().fingerprint();
        for (const auto& c : f_.coeffs())
            for (auto w : f_.field().coefficients(c)) tag_ = mix_seed(tag_ ^ w);
    }

    const Polynomial<F>& f() const noexcept { return f_; }
    unsigned genus() const noexcept { return genus_; }
    const F& field() const noexcept { return f_.field(); }
    const std::shared_ptr<const F>& field_ptr() const noexcept { return f_.field_ptr(); }
    std::uint64_t tag() const noexcept { return tag_; }

    friend bool operator==(const HyperellipticCurve& a, const HyperellipticCurve& b) {
        return a.tag_ == b.tag_ && a.f_ == b.f_;
    }

private:
    Polynomial<F> f_;
    unsigned genus_ = 0;
    std::uint64_t tag_ = 0;
};

template <class F>
struct MumfordDivisor {
    Polynomial<F> u;
    Polynomial<F> v;
    std::uint64_t curve_tag = 0;

    bool is_identity() const noexcept { return u.is_one() && v.is_zero(); }

    friend bool operator==(const MumfordDivisor& a, const MumfordDivisor& b) { return a.u == b.u && a.v == b.v; }

    std::string to_string() const { return "(" + u.to_string() + ", " + v.to_string() + ")"; }
};

template <class F>
bool canonical_less(const MumfordDivisor<F>& a, const MumfordDivisor<F>& b) {
    if (canonical_less(a.u, b.u)) return true;
    if (canonical_less(b.u, a.u)) return false;
    return canonical_less(a.v, b.v);
}

template <class F>
MumfordDivisor<F> identity(const HyperellipticCurve<F>& c) {
    return {Polynomial<F>::one(c.field_ptr()), Polynomial<F>(c.field_ptr()), c.tag()};
}

/// Membership test without throwing.
template <class F>
bool is_valid_divisor(const MumfordDivisor<F>& d, const HyperellipticCurve<F>& c) {
    if (!d.u.is_monic()) return false;
    if (d.u.degree() > static_cast<int>(c.genus()) || d.v.degree() >= d.u.degree()) return false;
    return ((d.v * d.v - c.f()) % d.u).is_zero();
}

/// Validated constructor for a reduced divisor.
template <class F>
MumfordDivisor<F> make_divisor(Polynomial<F> u, Polynomial<F> v, const HyperellipticCurve<F>& c) {
    if (!(u.field() == c.field()) || !(v.field() == c.field()))
        throw Error(ErrorCode::CurveMismatch, "divisor coefficients lie in another field");
    if (!u.is_monic()) throw Error(ErrorCode::NotMonic, "u must be monic");
    if (u.degree() > static_cast<int>(c.genus())) throw Error(ErrorCode::NotReduced, "deg u exceeds the genus");
    if (v.degree() >= u.degree()) throw Error(ErrorCode::NotReduced, "deg v must be below deg u");
    if (!((v * v - c.f()) % u).is_zero()) throw Error(ErrorCode::NotOnJacobian, "u does not divide v^2 - f");
    return {std::move(u), std::move(v), c.tag()};
}

namespace detail {

template <class F>
void check_on(const MumfordDivisor<F>& d, const HyperellipticCurve<F>& c) {
    if (d.curve_tag != c.tag()) throw Error(ErrorCode::CurveMismatch, "divisor belongs to another curve");
}

/// Reduction: while deg u > g, u <- (f - v^2) / u, v <- -v mod u.
template <class F>
MumfordDivisor<F> reduce(Polynomial<F> u, Polynomial<F> v, const HyperellipticCurve<F>& c) {
    const int g = static_cast<int>(c.genus());
    v = v % u;
    while (u.degree() > g) {
        const int before = u.degree();
        u = exact_div(c.f() - v * v, u);
        v = (-v) % u;
        if (u.degree() >= before) throw Error(ErrorCode::NonTerminating, "reduction failed to lower deg u");
    }
    u = u.monic();
    v = v % u;
    return {std::move(u), std::move(v), c.tag()};
}

}  // namespace detail

/// Cantor composition and reduction, including the non-coprime branch.
template <class F>
MumfordDivisor<F> add(const MumfordDivisor<F>& a, const MumfordDivisor<F>& b, const HyperellipticCurve<F>& c) {
    detail::check_on(a, c);
    detail::check_on(b, c);
    if (a.is_identity()) return b;
    if (b.is_identity()) return a;
    // d1 = e1 u1 + e2 u2
    auto bz1 = xgcd(a.u, b.u);
    // d = c1 d1 + c2 (v1 + v2)
    auto bz2 = xgcd(bz1.gcd, a.v + b.v);
    const auto& d = bz2.gcd;
    const auto s1 = bz2.s * bz1.s;
    const auto s2 = bz2.s * bz1.t;
    const auto& s3 = bz2.t;
    auto u = exact_div(a.u * b.u, d * d);
    auto v = exact_div(s1 * a.u * b.v + s2 * b.u * a.v + s3 * (a.v * b.v + c.f()), d) % u;
    return detail::reduce(std::move(u), std::move(v), c);
}

template <class F>
MumfordDivisor<F> neg(const MumfordDivisor<F>& a, const HyperellipticCurve<F>& c) {
    detail::check_on(a, c);
    return {a.u, (-a.v) % a.u, c.tag()};
}

template <class F>
MumfordDivisor<F> sub(const MumfordDivisor<F>& a, const MumfordDivisor<F>& b, const HyperellipticCurve<F>& c) {
    return add(a, neg(b, c), c);
}

/// n * D by double-and-add.
template <class F>
MumfordDivisor<F> scalar_mul(std::uint64_t n, const MumfordDivisor<F>& d, const HyperellipticCurve<F>& c) {
    detail::check_on(d, c);
    auto result = identity(c);
    auto base = d;
    while (n != 0) {
        if (n & 1U) result = add(result, base, c);
        n >>= 1U;
        if (n != 0) base = add(base, base, c);
    }
    return result;
}

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// Every reduced divisor on the curve, by exhaustive scan over monic u of degree <= g
/// and v of degree < deg u with u | v^2 - f. The number of candidate pairs,
/// sum_{d<=g} q^(2d), must not exceed `cap`.
template <class F>
std::vector<MumfordDivisor<F>> enumerate_jacobian(const HyperellipticCurve<F>& c,
                                                  std::uint64_t cap = kDefaultEnumerationCap) {
    const auto& field = c.field_ptr();
    const BigInt q = c.field().order();
    BigInt candidates = 0;
    for (unsigned d = 0; d <= c.genus(); ++d) candidates += boost::multiprecision::pow(q, 2 * d);
    if (candidates > cap)
        throw Error(ErrorCode::CapExceeded, "enumeration needs " + candidates.str() + " candidate pairs");
    const auto qn = q.convert_to<std::uint64_t>();

    // all polynomials with exactly `len` free coefficients (degree < len), in index order
    auto all_polys = [&](unsigned len) {
        std::vector<Polynomial<F>> out;
        std::uint64_t count = 1;
        for (unsigned i = 0; i < len; ++i) count *= qn;
        out.reserve(count);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<typename F::Element> v;
            std::uint64_t r = idx;
            for (unsigned i = 0; i < len; ++i) {
                v.push_back(c.field().element_at(r % qn));
                r /= qn;
            }
            out.emplace_back(field, std::move(v));
        }
        return out;
    };

    std::vector<MumfordDivisor<F>> out;
    out.push_back(identity(c));
    for (unsigned d = 1; d <= c.genus(); ++d) {
        const auto lower = all_polys(d);
        const auto xd = Polynomial<F>::monomial(field, c.field().one(), d);
        for (const auto& low : lower) {
            const auto u = xd + low;
            const auto fu = c.f() % u;
            for (const auto& v : lower) {
                if (((v * v - fu) % u).is_zero()) out.push_back({u, v, c.tag()});
            }
        }
    }
    return out;
}

/// Random divisor built as a sum of g random affine points. Useful for curves
/// too large to enumerate; not uniform on the group.
template <class F>
MumfordDivisor<F> random_divisor(const HyperellipticCurve<F>& c, Rng& rng) {
    auto acc = identity(c);
    const auto& field = c.field_ptr();
    for (unsigned i = 0; i < c.genus(); ++i) {
        for (;;) {
            const auto x0 = c.field().random(rng);
            const auto rhs = c.f()(x0);
            // y^2 - rhs
            auto eq = Polynomial<F>::monomial(field, c.field().one(), 2) -
                      Polynomial<F>::constant(field, rhs);
            auto ys = roots(eq, rng);
            if (ys.empty()) continue;
            const auto y = ys[std::uniform_int_distribution<std::size_t>(0, ys.size() - 1)(rng)];
            MumfordDivisor<F> pt{Polynomial<F>::linear(field, x0), Polynomial<F>::constant(field, y), c.tag()};
            acc = add(acc, pt, c);
            break;
        }
    }
    return acc;
}

}  // namespace hyrec

#endif  // HYREC_JACOBIAN_JACOBIAN_HPP
