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
   Polynomial text format. Two spellings are accepted, whitespace-insensitive:

     "-2,0,0,1"   ascending integer coefficients
     "x^3 - 2"    sparse sum of terms  [c][*]x[^n] | c

   Repeated degrees are summed. Errors report a 0-based offset into the input.
*/

#ifndef HYREC_CLI_PARSE_HPP
#define HYREC_CLI_PARSE_HPP

#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyrec/error.hpp"
#include "hyrec/poly/integer_polynomial.hpp"

namespace hyrec::cli {

struct ParsedPolynomial {
    IntegerPolynomial poly;
    bool non_monic = false;  ///< warning flag: leading coefficient is not 1
};

namespace detail {

inline constexpr unsigned kMaxParsedDegree = 10'000;

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {
        for (std::size_t i = 0; i < text.size(); ++i)
            if (!std::isspace(static_cast<unsigned char>(text[i]))) chars_.push_back({text[i], i});
    }

    bool done() const noexcept { return i_ >= chars_.size(); }
    bool empty() const noexcept { return chars_.empty(); }
    char peek() const noexcept { return done() ? '\0' : chars_[i_].first; }
    std::size_t position() const noexcept { return done() ? text_.size() : chars_[i_].second; }
    void advance() noexcept { ++i_; }

    bool accept(char c) {
        if (peek() != c) return false;
        advance();
        return true;
    }

    std::string digits() {
        std::string s;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            s += peek();
            advance();
        }
        return s;
    }

    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(position(), what); }

private:
    std::string_view text_;
    std::vector<std::pair<char, std::size_t>> chars_;
    std::size_t i_ = 0;
};

inline IntegerPolynomial parse_coefficient_list(Scanner& s) {
    std::vector<BigInt> coeffs;
    for (;;) {
        bool negative = false;
        if (s.accept('-')) {
            negative = true;
        } else {
            s.accept('+');
        }
        const std::string d = s.digits();
        if (d.empty()) s.fail("expected an integer coefficient");
        BigInt v(d);
        coeffs.push_back(negative ? BigInt(-v) : v);
        if (s.done()) break;
        if (!s.accept(',')) s.fail("expected ','");
    }
    return IntegerPolynomial(std::move(coeffs));
}

inline IntegerPolynomial parse_symbolic(Scanner& s) {
    std::map<unsigned, BigInt> terms;
    bool first = true;
    while (!s.done()) {
        const bool negative = s.accept('-');
        if (!negative && !s.accept('+') && !first) s.fail("expected '+' or '-'");
        const std::size_t term_start = s.position();
        const std::string d = s.digits();
        BigInt coef = d.empty() ? BigInt(1) : BigInt(d);
        unsigned deg = 0;
        if (!d.empty() && s.accept('*')) {
            if (s.peek() != 'x' && s.peek() != 'X') s.fail("expected 'x' after '*'");
        }
        if (s.peek() == 'x' || s.peek() == 'X') {
            s.advance();
            deg = 1;
            if (s.accept('^')) {
                const std::size_t at = s.position();
                const std::string e = s.digits();
                if (e.empty()) s.fail("expected an exponent");
                if (e.size() > 6 || std::stoul(e) > kMaxParsedDegree) throw SyntaxError(at, "exponent too large");
                deg = static_cast<unsigned>(std::stoul(e));
            }
        } else if (d.empty()) {
            throw SyntaxError(term_start, "expected a term");
        }
        terms[deg] += negative ? BigInt(-coef) : coef;
        first = false;
    }
    if (first) s.fail("expected a term");
    std::vector<BigInt> coeffs(terms.rbegin()->first + 1, BigInt(0));
    for (const auto& [k, v] : terms) coeffs[k] = v;
    return IntegerPolynomial(std::move(coeffs));
}

}  // namespace detail

/// Parses either spelling of the polynomial text format.
inline ParsedPolynomial parse_polynomial(std::string_view text) {
    detail::Scanner s(text);
    if (s.empty()) throw SyntaxError(0, "empty polynomial");
    const bool symbolic = text.find_first_of("xX") != std::string_view::npos;
    ParsedPolynomial out;
    out.poly = symbolic ? detail::parse_symbolic(s) : detail::parse_coefficient_list(s);
    out.non_monic = !out.poly.is_monic();
    return out;
}

}  // namespace hyrec::cli

#endif  // HYREC_CLI_PARSE_HPP
