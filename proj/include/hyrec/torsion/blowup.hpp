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
   Blow-up chain of y^2 = f(x), deg f = 2g + 1, at the point at infinity.

   In the chart x = X/Y, z = Z/Y the curve reads

       x^(2g+1) + a1 x^(2g) z + ... + a_(2g+1) z^(2g+1) - z^(2g-1) = 0.

   The first substitution is z = u x. Every later one replaces the squared
   variable s by s u. After each substitution the largest monomial dividing
   all terms is factored out and recorded. The residual equation has the form
   s^2 S(u) - u^e with S(u) = 1 + a1 u + ... + a_(2g+1) u^(2g+1), and e drops
   by 2 per round until the cusp s^2 S(u) - u^3.
*/

#ifndef HYREC_TORSION_BLOWUP_HPP
#define HYREC_TORSION_BLOWUP_HPP

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hyrec/error.hpp"
#include "hyrec/ff/prime_field.hpp"

namespace hyrec {

/// Sparse bivariate polynomial in (s, t); keys are (deg_s, deg_t).
template <class F>
class Bivariate {
public:
    using Element = typename F::Element;
    using Exponents = std::pair<unsigned, unsigned>;

    explicit Bivariate(std::shared_ptr<const F> field) : field_(std::move(field)) {}

    void add_term(unsigned i, unsigned j, const Element& c) {
        auto& slot = terms_.try_emplace({i, j}, field_->zero()).first->second;
        slot = field_->add(slot, c);
        if (field_->is_zero(slot)) terms_.erase({i, j});
    }

    const std::map<Exponents, Element>& terms() const noexcept { return terms_; }
    const F& field() const noexcept { return *field_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Element coeff(unsigned i, unsigned j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? field_->zero() : it->second;
    }

    /// Monomial map s^i t^j -> s^(a i + b j) t^(c i + d j).
    Bivariate substitute(unsigned a, unsigned b, unsigned c, unsigned d) const {
        Bivariate out(field_);
        for (const auto& [e, coef] : terms_) out.add_term(a * e.first + b * e.second, c * e.first + d * e.second, coef);
        return out;
    }

    /// Componentwise minimum exponent over all terms: the largest dividing monomial.
    Exponents max_monomial_divisor() const {
        if (terms_.empty()) return {0, 0};
        Exponents m{std::numeric_limits<unsigned>::max(), std::numeric_limits<unsigned>::max()};
        for (const auto& [e, coef] : terms_) {
            m.first = std::min(m.first, e.first);
            m.second = std::min(m.second, e.second);
        }
        return m;
    }

    /// Exact division by s^i t^j.
    Bivariate divide_monomial(Exponents by) const {
        Bivariate out(field_);
        for (const auto& [e, coef] : terms_) {
            if (e.first < by.first || e.second < by.second)
                throw Error(ErrorCode::VerificationFailed, "monomial does not divide");
            out.terms_.emplace(Exponents{e.first - by.first, e.second - by.second}, coef);
        }
        return out;
    }

    Bivariate multiply_monomial(Exponents by) const {
        Bivariate out(field_);
        for (const auto& [e, coef] : terms_) out.terms_.emplace(Exponents{e.first + by.first, e.second + by.second}, coef);
        return out;
    }

    std::string to_string(const std::string& s, const std::string& t) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            if (!out.empty()) out += " + ";
            std::string mono;
            auto var = [&mono](const std::string& v, unsigned k) {
                if (k == 0) return;
                if (!mono.empty()) mono += "*";
                mono += v;
                if (k > 1) mono += "^" + std::to_string(k);
            };
            var(s, e.first);
            var(t, e.second);
            const bool unit = c == field_->one();
            if (mono.empty()) {
                out += field_->to_string(c);
            } else {
                out += unit ? mono : field_->to_string(c) + "*" + mono;
            }
        }
        return out;
    }

    friend bool operator==(const Bivariate& a, const Bivariate& b) { return a.terms_ == b.terms_; }

private:
    std::shared_ptr<const F> field_;
    std::map<Exponents, Element> terms_;
};

struct BlowupChart {
    unsigned step = 0;                ///< 1-based round index
    std::string substitution;         ///< e.g. "z = u*x"
    std::string s_name, t_name;       ///< variable names of this chart
    Bivariate<PrimeField> substituted;
    std::pair<unsigned, unsigned> factored;  ///< exponents of the factored monomial s^i t^j
    Bivariate<PrimeField> equation;   ///< substituted / monomial
    unsigned residual_exponent = 0;   ///< e in s^2 S(u) - u^e
    bool terminal = false;
};

/// The equation near the point at infinity, in variables (x, z).
inline Bivariate<PrimeField> infinity_chart(unsigned genus, const std::vector<PrimeField::Element>& a,
                                            const std::shared_ptr<const PrimeField>& field) {
    const unsigned n = 2 * genus + 1;
    Bivariate<PrimeField> eq(field);
    eq.add_term(n, 0, field->one());
    for (unsigned i = 1; i <= n; ++i) eq.add_term(n - i, i, a[i - 1]);
    eq.add_term(0, 2 * genus - 1, field->neg(field->one()));
    return eq;
}

namespace detail {

/// Reads e from an equation of shape s^2 S(t) - t^e with S(0) = 1; 0 when the shape differs.
inline unsigned cusp_exponent(const Bivariate<PrimeField>& eq) {
    const auto& fd = eq.field();
    unsigned e = 0;
    for (const auto& [ex, c] : eq.terms()) {
        if (ex.first == 2) continue;
        if (ex.first != 0 || e != 0 || c != fd.neg(fd.one())) return 0;
        e = ex.second;
    }
    if (eq.coeff(2, 0) != fd.one()) return 0;
    return e;
}

}  // namespace detail

/// Runs the substitution chain for coefficients a1..a_(2g+1). Empty for g = 1,
/// where the point at infinity is already smooth.
inline std::vector<BlowupChart> blowup_chain(unsigned genus, const std::vector<PrimeField::Element>& a,
                                             const std::shared_ptr<const PrimeField>& field) {
    if (field->characteristic() == 2) throw Error(ErrorCode::BadCharacteristic, "characteristic 2");
    if (genus == 0) throw Error(ErrorCode::UnsupportedDegree, "genus must be at least 1");
    if (a.size() != 2 * genus + 1) throw Error(ErrorCode::Undefined, "expected 2g + 1 coefficients");
    std::vector<BlowupChart> chain;
    if (genus == 1) return chain;

    // chart variables: (x, z) -> (x, u) -> (m1, u) -> (m2, u) ...
    auto current = infinity_chart(genus, a, field);
    unsigned previous = std::numeric_limits<unsigned>::max();
    for (unsigned step = 1;; ++step) {
        BlowupChart chart{step, "", "", "", Bivariate<PrimeField>(field), {0, 0}, Bivariate<PrimeField>(field), 0, false};
        if (step == 1) {
            chart.substitution = "z = u*x";
            chart.s_name = "x";
            chart.substituted = current.substitute(1, 1, 0, 1);  // x^i z^j -> x^(i+j) u^j
        } else {
            const std::string prev = step == 2 ? "x" : "m" + std::to_string(step - 2);
            chart.s_name = "m" + std::to_string(step - 1);
            chart.substitution = prev + " = " + chart.s_name + "*u";
            chart.substituted = current.substitute(1, 0, 1, 1);  // s^i u^j -> m^i u^(i+j)
        }
        chart.t_name = "u";
        chart.factored = chart.substituted.max_monomial_divisor();
        chart.equation = chart.substituted.divide_monomial(chart.factored);
        chart.residual_exponent = detail::cusp_exponent(chart.equation);
        if (chart.residual_exponent == 0 || chart.residual_exponent >= previous)
            throw Error(ErrorCode::NonTerminating, "residual exponent failed to decrease at step " + std::to_string(step));
        previous = chart.residual_exponent;
        chart.terminal = chart.residual_exponent == 3;
        current = chart.equation;
        chain.push_back(std::move(chart));
        if (chain.back().terminal) break;
        if (chain.back().residual_exponent < 3)
            throw Error(ErrorCode::NonTerminating, "residual exponent fell below 3");
    }
    return chain;
}

/// Coefficients a1..a_(2g+1) of a monic f of degree 2g + 1.
inline std::vector<PrimeField::Element> blowup_coefficients(const std::vector<PrimeField::Element>& ascending) {
    std::vector<PrimeField::Element> a;
    for (std::size_t i = ascending.size() - 1; i-- > 0;) a.push_back(ascending[i]);
    return a;
}

}  // namespace hyrec

#endif  // HYREC_TORSION_BLOWUP_HPP
