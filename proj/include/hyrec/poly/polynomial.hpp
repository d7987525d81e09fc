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

#ifndef HYREC_POLY_POLYNOMIAL_HPP
#define HYREC_POLY_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyrec/error.hpp"
#include "hyrec/ff/prime_field.hpp"
#include "hyrec/random.hpp"

namespace hyrec {

/// Univariate polynomial over a finite field context F.
///
/// Coefficients are stored in ascending degree and kept normalized: the zero
/// polynomial is the empty sequence, otherwise the top coefficient is nonzero.
/// The field context is shared and immutable, so copies are cheap to reason
/// about and safe across threads.
template <class F>
class Polynomial {
public:
    using Field = F;
    using Element = typename F::Element;

    explicit Polynomial(std::shared_ptr<const F> field) : field_(std::move(field)) {}

    Polynomial(std::shared_ptr<const F> field, std::vector<Element> coeffs)
        : field_(std::move(field)), c_(std::move(coeffs)) {
        normalize();
    }

    static Polynomial constant(std::shared_ptr<const F> field, Element c) {
        return Polynomial(std::move(field), std::vector<Element>{c});
    }

    static Polynomial one(std::shared_ptr<const F> field) {
        auto o = field->one();
        return constant(std::move(field), o);
    }

    /// c * x^n
    static Polynomial monomial(std::shared_ptr<const F> field, Element c, std::size_t n) {
        std::vector<Element> v(n + 1, field->zero());
        v[n] = c;
        return Polynomial(std::move(field), std::move(v));
    }

    static Polynomial x(std::shared_ptr<const F> field) {
        auto o = field->one();
        return monomial(std::move(field), o, 1);
    }

    /// x - r
    static Polynomial linear(std::shared_ptr<const F> field, Element r) {
        std::vector<Element> v{field->neg(r), field->one()};
        return Polynomial(std::move(field), std::move(v));
    }

    /// Uniform random polynomial of degree < n.
    static Polynomial random(std::shared_ptr<const F> field, std::size_t n, Rng& rng) {
        std::vector<Element> v;
        v.reserve(n);
        for (std::size_t i = 0; i < n; ++i) v.push_back(field->random(rng));
        return Polynomial(std::move(field), std::move(v));
    }

    const F& field() const noexcept { return *field_; }
    const std::shared_ptr<const F>& field_ptr() const noexcept { return field_; }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == field_->one(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == field_->one(); }

    std::span<const Element> coeffs() const noexcept { return c_; }
    Element coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : field_->zero(); }
    Element leading() const noexcept { return c_.empty() ? field_->zero() : c_.back(); }

    Element operator()(const Element& at) const {
        Element acc = field_->zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_->add(field_->mul(acc, at), *it);
        return acc;
    }

    Polynomial monic() const {
        if (c_.empty()) return *this;
        return scaled(field_->inv(c_.back()));
    }

    Polynomial scaled(const Element& s) const {
        std::vector<Element> v;
        v.reserve(c_.size());
        for (const auto& a : c_) v.push_back(field_->mul(a, s));
        return Polynomial(field_, std::move(v));
    }

    Polynomial derivative() const {
        std::vector<Element> v;
        for (std::size_t i = 1; i < c_.size(); ++i)
            v.push_back(field_->mul(c_[i], field_->from_int(static_cast<std::int64_t>(i))));
        return Polynomial(field_, std::move(v));
    }

    /// Applies a coefficient map such as the Frobenius.
    template <class Fn>
    Polynomial map_coeffs(Fn&& fn) const {
        std::vector<Element> v;
        v.reserve(c_.size());
        for (const auto& a : c_) v.push_back(fn(a));
        return Polynomial(field_, std::move(v));
    }

    Polynomial operator-() const { return map_coeffs([this](const Element& a) { return field_->neg(a); }); }

    Polynomial& operator+=(const Polynomial& o) {
        check_same_field(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_->zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->add(c_[i], o.c_[i]);
        normalize();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        check_same_field(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_->zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->sub(c_[i], o.c_[i]);
        normalize();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_same_field(b);
        if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
        const F& fd = *a.field_;
        std::vector<Element> v(a.c_.size() + b.c_.size() - 1, fd.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (fd.is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = fd.add(v[i + j], fd.mul(a.c_[i], b.c_[j]));
        }
        return Polynomial(a.field_, std::move(v));
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    /// Equality requires equal fields and identical normalized coefficients.
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.c_ == b.c_ && (a.field_ == b.field_ || *a.field_ == *b.field_);
    }

    /// Canonical order: by degree, then lexicographic on ascending coefficients.
    friend bool canonical_less(const Polynomial& a, const Polynomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
    }

    std::string to_string(const std::string& var = "x") const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (field_->is_zero(c_[k])) continue;
            if (!out.empty()) out += " + ";
            std::string cs = field_->to_string(c_[k]);
            bool unit = c_[k] == field_->one();
            if (k == 0) {
                out += cs;
            } else {
                if (!unit) out += (cs.find(' ') != std::string::npos ? "(" + cs + ")" : cs) + "*";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void normalize() {
        while (!c_.empty() && field_->is_zero(c_.back())) c_.pop_back();
    }

    void check_same_field(const Polynomial& o) const {
        if (field_ != o.field_ && !(*field_ == *o.field_))
            throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
    }

    std::shared_ptr<const F> field_;
    std::vector<Element> c_;
};

/// Euclidean division: a = q*b + r with deg r < deg b.
template <class F>
std::pair<Polynomial<F>, Polynomial<F>> divmod(const Polynomial<F>& a, const Polynomial<F>& b) {
    if (b.is_zero()) throw Error(ErrorCode::ZeroDivisor, "division by the zero polynomial");
    const F& fd = a.field();
    if (a.degree() < b.degree()) return {Polynomial<F>(a.field_ptr()), a};
    auto bc = b.coeffs();
    const int db = b.degree();
    const auto lead_inv = fd.inv(bc.back());
    std::vector<typename F::Element> r(a.coeffs().begin(), a.coeffs().end());
    std::vector<typename F::Element> q(static_cast<std::size_t>(a.degree() - db + 1), fd.zero());
    for (int k = a.degree(); k >= db; --k) {
        const auto c = fd.mul(r[k], lead_inv);
        q[k - db] = c;
        if (fd.is_zero(c)) continue;
        for (int j = 0; j <= db; ++j) r[k - db + j] = fd.sub(r[k - db + j], fd.mul(c, bc[j]));
    }
    r.resize(static_cast<std::size_t>(db));
    return {Polynomial<F>(a.field_ptr(), std::move(q)), Polynomial<F>(a.field_ptr(), std::move(r))};
}

template <class F>
Polynomial<F> operator/(const Polynomial<F>& a, const Polynomial<F>& b) {
    return divmod(a, b).first;
}

template <class F>
Polynomial<F> operator%(const Polynomial<F>& a, const Polynomial<F>& b) {
    return divmod(a, b).second;
}

/// Division that must leave no remainder.
template <class F>
Polynomial<F> exact_div(const Polynomial<F>& a, const Polynomial<F>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error(ErrorCode::VerificationFailed, "inexact polynomial division");
    return q;
}

/// Monic gcd. gcd(a, 0) = monic(a); gcd(0, 0) is undefined.
template <class F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
    if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::Undefined, "gcd(0, 0)");
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <class F>
struct Bezout {
    Polynomial<F> gcd;  ///< monic
    Polynomial<F> s;
    Polynomial<F> t;
};

/// Extended Euclid: s*a + t*b = gcd(a, b), gcd monic.
template <class F>
Bezout<F> xgcd(const Polynomial<F>& a, const Polynomial<F>& b) {
    if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::Undefined, "xgcd(0, 0)");
    const auto& fp = a.field_ptr();
    Polynomial<F> r0 = a, r1 = b;
    Polynomial<F> s0 = Polynomial<F>::one(fp), s1(fp);
    Polynomial<F> t0(fp), t1 = Polynomial<F>::one(fp);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        auto s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        auto t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const auto li = a.field().inv(r0.leading());
    return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

/// base^e mod m for a machine-word exponent.
template <class F>
Polynomial<F> powmod(Polynomial<F> base, std::uint64_t e, const Polynomial<F>& m) {
    Polynomial<F> r = Polynomial<F>::one(m.field_ptr()) % m;
    base = base % m;
    while (e != 0) {
        if (e & 1U) r = (r * base) % m;
        e >>= 1U;
        if (e != 0) base = (base * base) % m;
    }
    return r;
}

/// base^e mod m for an arbitrary-precision exponent.
template <class F>
Polynomial<F> powmod(Polynomial<F> base, const BigInt& e, const Polynomial<F>& m) {
    Polynomial<F> r = Polynomial<F>::one(m.field_ptr()) % m;
    base = base % m;
    if (e <= 0) return r;
    const auto bits = boost::multiprecision::msb(e);
    for (std::size_t i = bits + 1; i-- > 0;) {
        r = (r * r) % m;
        if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) r = (r * base) % m;
    }
    return r;
}

}  // namespace hyrec

#endif  // HYREC_POLY_POLYNOMIAL_HPP
