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

#ifndef HYREC_POLY_INTEGER_POLYNOMIAL_HPP
#define HYREC_POLY_INTEGER_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hyrec/error.hpp"
#include "hyrec/ff/prime_field.hpp"
#include "hyrec/poly/polynomial.hpp"

namespace hyrec {

/// Polynomial over Z with arbitrary-precision coefficients, ascending degree, normalized.
class IntegerPolynomial {
public:
    IntegerPolynomial() = default;
    explicit IntegerPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }
    IntegerPolynomial(std::initializer_list<long long> coeffs) {
        for (auto v : coeffs) c_.emplace_back(v);
        normalize();
    }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    const std::vector<BigInt>& coeffs() const noexcept { return c_; }
    BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
    const BigInt& leading() const { return c_.back(); }

    IntegerPolynomial derivative() const {
        std::vector<BigInt> v;
        for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * static_cast<long long>(i));
        return IntegerPolynomial(std::move(v));
    }

    BigInt operator()(const BigInt& x) const {
        BigInt acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// Image in F_p[x].
    Polynomial<PrimeField> reduce(const std::shared_ptr<const PrimeField>& field) const {
        std::vector<PrimeField::Element> v;
        v.reserve(c_.size());
        for (const auto& c : c_) v.push_back(field->from_bigint(c));
        return Polynomial<PrimeField>(field, std::move(v));
    }

    /// Sparse symbolic form, e.g. "x^3 - 2".
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t k = c_.size(); k-- > 0;) {
            const BigInt& c = c_[k];
            if (c == 0) continue;
            const bool negative = c < 0;
            const BigInt mag = negative ? BigInt(-c) : c;
            if (out.empty()) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            if (k == 0) {
                out += mag.str();
                continue;
            }
            if (mag != 1) out += mag.str() + "*";
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
        return out;
    }

    /// Comma-separated ascending coefficients, e.g. "-2,0,0,1".
    std::string to_csv() const {
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) out += ",";
            out += c_[i].str();
        }
        return out.empty() ? "0" : out;
    }

    friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

/// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    BigInt sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0) ++swap;
            if (swap == n) return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// Res(a, b) as the determinant of the Sylvester matrix.
inline BigInt resultant(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    const int n = a.degree(), m = b.degree();
    if (n < 0 || m < 0) return 0;
    if (n == 0 && m == 0) return 1;
    const std::size_t size = static_cast<std::size_t>(n + m);
    std::vector<std::vector<BigInt>> s(size, std::vector<BigInt>(size, 0));
    // rows 0..m-1: shifted copies of a (descending coefficients); rows m..m+n-1: copies of b
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) s[r][r + j] = a.coeff(static_cast<std::size_t>(n - j));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) s[m + r][r + j] = b.coeff(static_cast<std::size_t>(m - j));
    return bareiss_determinant(std::move(s));
}

/// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f).
inline BigInt discriminant(const IntegerPolynomial& f) {
    const int n = f.degree();
    if (n < 1) throw Error(ErrorCode::UnsupportedDegree, "discriminant needs degree >= 1");
    if (n == 1) return 1;
    BigInt r = resultant(f, f.derivative()) / f.leading();
    return ((n * (n - 1) / 2) % 2 == 0) ? r : BigInt(-r);
}

}  // namespace hyrec

#endif  // HYREC_POLY_INTEGER_POLYNOMIAL_HPP
