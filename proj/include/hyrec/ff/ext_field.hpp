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

#ifndef HYREC_FF_EXT_FIELD_HPP
#define HYREC_FF_EXT_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hyrec/error.hpp"
#include "hyrec/ff/prime_field.hpp"
#include "hyrec/poly/factor.hpp"
#include "hyrec/poly/polynomial.hpp"
#include "hyrec/random.hpp"

namespace hyrec {

/// F_{p^k} = F_p[t] / (m(t)) for a monic irreducible m of degree k.
///
/// Elements are coefficient vectors of length exactly k (ascending powers of t).
/// Multiplication is schoolbook followed by reduction modulo m.
class ExtField {
public:
    struct Element {
        std::vector<std::uint32_t> c;
        friend auto operator<=>(const Element&, const Element&) = default;
    };

    static constexpr unsigned kDefaultDegreeCap = 64;

    /// Validates that `modulus` is monic and irreducible over the base field.
    ExtField(std::shared_ptr<const PrimeField> base, const Polynomial<PrimeField>& modulus)
        : base_(std::move(base)) {
        if (modulus.degree() < 1 || !modulus.is_monic())
            throw Error(ErrorCode::ReducibleModulus, "modulus must be monic of positive degree");
        if (!is_irreducible(modulus))
            throw Error(ErrorCode::ReducibleModulus, "modulus " + modulus.to_string("t") + " is reducible");
        k_ = static_cast<unsigned>(modulus.degree());
        for (auto e : modulus.coeffs()) m_.push_back(e.value);
    }

    /// Seeded random search for an irreducible modulus of degree k.
    static std::shared_ptr<const ExtField> random(std::shared_ptr<const PrimeField> base, unsigned k,
                                                  std::uint64_t seed, unsigned cap = kDefaultDegreeCap) {
        if (k < 1) throw Error(ErrorCode::UnsupportedDegree, "extension degree must be >= 1");
        if (k > cap)
            throw Error(ErrorCode::ExtensionTooLarge,
                        "extension degree " + std::to_string(k) + " exceeds cap " + std::to_string(cap));
        Rng rng(seed);
        for (;;) {
            auto cand = Polynomial<PrimeField>::random(base, k, rng) +
                        Polynomial<PrimeField>::monomial(base, base->one(), k);
            if (is_irreducible(cand)) return std::make_shared<const ExtField>(base, cand);
        }
    }

    const PrimeField& base() const noexcept { return *base_; }
    const std::shared_ptr<const PrimeField>& base_ptr() const noexcept { return base_; }
    Polynomial<PrimeField> modulus() const {
        std::vector<PrimeField::Element> v;
        for (auto c : m_) v.push_back({c});
        return Polynomial<PrimeField>(base_, std::move(v));
    }

    std::uint32_t characteristic() const noexcept { return base_->characteristic(); }
    unsigned degree() const noexcept { return k_; }
    BigInt order() const { return boost::multiprecision::pow(BigInt(characteristic()), k_); }
    std::uint64_t fingerprint() const noexcept {
        std::uint64_t h = base_->fingerprint();
        for (auto c : m_) h = mix_seed(h ^ c);
        return h;
    }

    Element zero() const { return {std::vector<std::uint32_t>(k_, 0)}; }
    Element one() const { return embed(base_->one()); }
    Element embed(PrimeField::Element a) const {
        Element e = zero();
        e.c[0] = a.value;
        return e;
    }
    /// The class of t, a root of the modulus.
    Element generator() const {
        Element e = zero();
        if (k_ == 1) {
            e.c[0] = base_->neg(PrimeField::Element{m_[0]}).value;
        } else {
            e.c[1] = 1;
        }
        return e;
    }

    Element from_int(std::int64_t v) const { return embed(base_->from_int(v)); }
    Element from_bigint(const BigInt& v) const { return embed(base_->from_bigint(v)); }

    /// Element from an explicit coefficient vector (entries reduced mod p).
    Element from_coefficients(const std::vector<std::int64_t>& coeffs) const {
        Element e = zero();
        for (std::size_t i = 0; i < coeffs.size() && i < k_; ++i) e.c[i] = base_->from_int(coeffs[i]).value;
        return e;
    }

    bool is_zero(const Element& a) const noexcept {
        for (auto v : a.c)
            if (v != 0) return false;
        return true;
    }
    /// True when a lies in the embedded base field.
    bool in_base(const Element& a) const noexcept {
        for (std::size_t i = 1; i < a.c.size(); ++i)
            if (a.c[i] != 0) return false;
        return true;
    }

    Element add(const Element& a, const Element& b) const {
        Element r = zero();
        for (unsigned i = 0; i < k_; ++i) r.c[i] = base_->add({a.c[i]}, {b.c[i]}).value;
        return r;
    }
    Element sub(const Element& a, const Element& b) const {
        Element r = zero();
        for (unsigned i = 0; i < k_; ++i) r.c[i] = base_->sub({a.c[i]}, {b.c[i]}).value;
        return r;
    }
    Element neg(const Element& a) const {
        Element r = zero();
        for (unsigned i = 0; i < k_; ++i) r.c[i] = base_->neg({a.c[i]}).value;
        return r;
    }

    Element mul(const Element& a, const Element& b) const {
        const std::uint64_t p = characteristic();
        std::vector<std::uint64_t> t(2 * k_ - 1, 0);
        for (unsigned i = 0; i < k_; ++i) {
            if (a.c[i] == 0) continue;
            for (unsigned j = 0; j < k_; ++j) t[i + j] = (t[i + j] + std::uint64_t{a.c[i]} * b.c[j]) % p;
        }
        // t^k = -(m_0 + ... + m_{k-1} t^{k-1})
        for (std::size_t d = t.size(); d-- > k_;) {
            const std::uint64_t c = t[d];
            if (c == 0) continue;
            t[d] = 0;
            for (unsigned j = 0; j < k_; ++j) {
                const std::uint64_t s = c * m_[j] % p;
                std::uint64_t& dst = t[d - k_ + j];
                dst = (dst + p - s) % p;
            }
        }
        Element r = zero();
        for (unsigned i = 0; i < k_; ++i) r.c[i] = static_cast<std::uint32_t>(t[i]);
        return r;
    }

    Element pow(Element a, const BigInt& e) const {
        Element r = one();
        if (e <= 0) return r;
        const auto bits = boost::multiprecision::msb(e);
        for (std::size_t i = bits + 1; i-- > 0;) {
            r = mul(r, r);
            if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) r = mul(r, a);
        }
        return r;
    }
    Element pow(const Element& a, std::uint64_t e) const { return pow(a, BigInt(e)); }

    Element inv(const Element& a) const {
        if (is_zero(a)) throw Error(ErrorCode::NonInvertible, "zero has no inverse");
        auto bz = xgcd(as_polynomial(a), modulus());
        return from_polynomial(bz.s);
    }

    /// a -> a^p. A field automorphism fixing exactly the base field.
    Element frobenius(const Element& a) const { return pow(a, std::uint64_t{characteristic()}); }

    /// a -> a^(p^(k-1)), the inverse of the Frobenius.
    Element pth_root(const Element& a) const {
        Element r = a;
        for (unsigned i = 1; i < k_; ++i) r = frobenius(r);
        return r;
    }

    Element random(Rng& rng) const {
        Element r = zero();
        for (unsigned i = 0; i < k_; ++i) r.c[i] = base_->random(rng).value;
        return r;
    }

    /// Enumerates the field by reading the index in base p.
    Element element_at(std::uint64_t index) const {
        Element r = zero();
        const std::uint64_t p = characteristic();
        for (unsigned i = 0; i < k_; ++i) {
            r.c[i] = static_cast<std::uint32_t>(index % p);
            index /= p;
        }
        return r;
    }

    std::vector<std::uint32_t> coefficients(const Element& a) const { return a.c; }

    std::string to_string(const Element& a) const {
        return as_polynomial(a).to_string("t");
    }

    Polynomial<PrimeField> as_polynomial(const Element& a) const {
        std::vector<PrimeField::Element> v;
        for (auto c : a.c) v.push_back({c});
        return Polynomial<PrimeField>(base_, std::move(v));
    }

    Element from_polynomial(const Polynomial<PrimeField>& poly) const {
        auto r = poly % modulus();
        Element e = zero();
        for (int i = 0; i <= r.degree(); ++i) e.c[static_cast<std::size_t>(i)] = r.coeff(static_cast<std::size_t>(i)).value;
        return e;
    }

    friend bool operator==(const ExtField& a, const ExtField& b) noexcept {
        return *a.base_ == *b.base_ && a.m_ == b.m_;
    }

private:
    std::shared_ptr<const PrimeField> base_;
    unsigned k_ = 0;
    std::vector<std::uint32_t> m_;
};

/// Image of a base-field polynomial in an extension.
inline Polynomial<ExtField> lift(const Polynomial<PrimeField>& f, const std::shared_ptr<const ExtField>& ext) {
    std::vector<ExtField::Element> v;
    for (auto c : f.coeffs()) v.push_back(ext->embed(c));
    return Polynomial<ExtField>(ext, std::move(v));
}

/// Distinct roots of a base-field polynomial inside the extension, in canonical order.
inline std::vector<ExtField::Element> roots_in(const Polynomial<PrimeField>& f,
                                               const std::shared_ptr<const ExtField>& ext, Rng& rng) {
    return roots(lift(f, ext), rng);
}

}  // namespace hyrec

#endif  // HYREC_FF_EXT_FIELD_HPP
