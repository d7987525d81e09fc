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
   Prime sweeps over Q for a monic integer polynomial f of odd degree 2g + 1.

   A prime p is good when p is odd and p does not divide disc(f); then f mod p
   is squarefree of the same degree. For each good prime two quantities are
   computed along separate paths:

     - the splitting type of f mod p (factorization only);
     - the F_2-rank of the rational 2-torsion of the Jacobian of
       y^2 = f(x) over F_p (Cantor arithmetic).

   The law under test: f mod p splits into distinct linear factors exactly
   when that rank equals 2g.
*/

#ifndef HYREC_RECIPROCITY_RECIPROCITY_HPP
#define HYREC_RECIPROCITY_RECIPROCITY_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "hyrec/error.hpp"
#include "hyrec/ff/prime_field.hpp"
#include "hyrec/jacobian/jacobian.hpp"
#include "hyrec/poly/factor.hpp"
#include "hyrec/poly/integer_polynomial.hpp"
#include "hyrec/primes.hpp"
#include "hyrec/random.hpp"
#include "hyrec/torsion/two_torsion.hpp"

namespace hyrec {

struct SweepOptions {
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 1;
};

struct PrimeRecord {
    std::uint32_t p = 0;
    SplittingType splitting;
    std::optional<unsigned> torsion_rank;  ///< absent when f mod p is not squarefree
    bool law_consistent = true;

    friend bool operator==(const PrimeRecord&, const PrimeRecord&) = default;
};

struct Fraction {
    std::uint64_t numerator = 0;
    std::uint64_t denominator = 0;

    double value() const noexcept {
        return denominator == 0 ? 0.0 : static_cast<double>(numerator) / static_cast<double>(denominator);
    }
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// Cheap evidence about irreducibility of f over Q; full Z[x] factorization is not attempted.
struct IrreducibilityHints {
    bool rational_root = false;                 ///< an integer root was found
    std::optional<std::uint32_t> certified_by;  ///< a good prime modulo which f is irreducible

    friend bool operator==(const IrreducibilityHints&, const IrreducibilityHints&) = default;
};

struct ReciprocityReport {
    IntegerPolynomial f;
    unsigned genus = 0;
    std::uint64_t bound = 0;
    BigInt discriminant;
    std::vector<std::uint32_t> bad_primes;
    std::vector<PrimeRecord> records;
    std::vector<std::uint32_t> spl;
    bool verdict = true;
    Fraction density;
    IrreducibilityHints hints;

    std::vector<PrimeRecord> violations() const {
        std::vector<PrimeRecord> out;
        for (const auto& r : records)
            if (!r.law_consistent) out.push_back(r);
        return out;
    }

    friend bool operator==(const ReciprocityReport&, const ReciprocityReport&) = default;
};

struct InclusionResult {
    bool holds = true;
    std::vector<std::uint32_t> exceptions;  ///< good p with f split and h not split
    std::uint64_t good_count = 0;
    std::uint64_t f_split_count = 0;
    std::uint64_t h_split_count = 0;

    std::optional<std::uint32_t> first_counterexample() const {
        if (exceptions.empty()) return std::nullopt;
        return exceptions.front();
    }
};

struct DensityReport {
    std::uint64_t bound = 0;
    Fraction observed;
    std::optional<std::uint64_t> group_order;
    std::optional<double> deviation;  ///< |observed - 1/G| when G is given
};

namespace detail {

inline void require_law_input(const IntegerPolynomial& f) {
    if (f.degree() % 2 == 0) throw Error(ErrorCode::EvenDegree, "deg f = " + std::to_string(f.degree()));
    if (f.degree() < 3) throw Error(ErrorCode::UnsupportedDegree, "deg f must be at least 3");
    if (!f.is_monic()) throw Error(ErrorCode::NotMonic, "f must be monic");
}

inline BigInt nonzero_discriminant(const IntegerPolynomial& f) {
    auto d = discriminant(f);
    if (d == 0) throw Error(ErrorCode::ZeroDiscriminant, f.to_string() + " has a repeated factor over Q");
    return d;
}

/// Applies fn to every item on `threads` workers; results keep the input order.
template <class T, class Fn>
auto ordered_map(const std::vector<T>& items, unsigned threads, Fn fn) {
    using R = decltype(fn(items.front()));
    std::vector<std::optional<R>> slots(items.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= items.size()) return;
            try {
                slots[i].emplace(fn(items[i]));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = items.size();
                return;
            }
        }
    };
    const unsigned n = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(items.size())));
    if (n <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    std::vector<R> out;
    out.reserve(items.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

inline bool has_integer_root(const IntegerPolynomial& f) {
    const BigInt& a0 = f.coeff(0);
    if (a0 == 0) return true;
    const BigInt mag = a0 < 0 ? BigInt(-a0) : a0;
    if (mag > 1'000'000) return false;  // heuristic only
    const auto m = mag.convert_to<long long>();
    for (long long d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        if (f(BigInt(d)) == 0 || f(BigInt(-d)) == 0) return true;
    }
    return false;
}

}  // namespace detail

/// Primes p <= bound with p = 2 or p | disc(f).
inline std::vector<std::uint32_t> bad_primes(const IntegerPolynomial& f, std::uint64_t bound) {
    const auto d = detail::nonzero_discriminant(f);
    std::vector<std::uint32_t> out;
    for (auto p : sieve_primes(bound))
        if (p == 2 || d % p == 0) out.push_back(p);
    return out;
}

/// Odd primes p <= bound with p not dividing disc(f), ascending.
inline std::vector<std::uint32_t> good_primes(const IntegerPolynomial& f, std::uint64_t bound) {
    const auto d = detail::nonzero_discriminant(f);
    std::vector<std::uint32_t> out;
    for (auto p : sieve_primes(bound))
        if (p != 2 && d % p != 0) out.push_back(p);
    return out;
}

inline SplittingType splitting_type_mod_p(const IntegerPolynomial& f, std::uint32_t p,
                                          std::uint64_t seed = kDefaultSeed) {
    auto field = std::make_shared<const PrimeField>(p);
    const auto fbar = f.reduce(field);
    if (fbar.is_zero()) throw Error(ErrorCode::Undefined, "f vanishes modulo " + std::to_string(p));
    return splitting_type(factorize(fbar, derive_seed(seed, p)));
}

/// f mod p is a product of deg f distinct linear factors.
inline bool splits_completely(const IntegerPolynomial& f, std::uint32_t p, std::uint64_t seed = kDefaultSeed) {
    const auto t = splitting_type_mod_p(f, p, seed);
    return t.splits_completely() && static_cast<int>(t.total_degree()) == f.degree();
}

/// Both sides of the law at a single prime.
inline PrimeRecord evaluate_prime(const IntegerPolynomial& f, std::uint32_t p, std::uint64_t seed = kDefaultSeed) {
    const unsigned g = static_cast<unsigned>(f.degree() - 1) / 2;
    PrimeRecord rec;
    rec.p = p;
    rec.splitting = splitting_type_mod_p(f, p, seed);
    if (!rec.splitting.squarefree) return rec;
    auto field = std::make_shared<const PrimeField>(p);
    const HyperellipticCurve<PrimeField> curve(f.reduce(field));
    rec.torsion_rank = two_torsion_rank(curve, derive_seed(seed, std::uint64_t{p} << 32U));
    const bool split = rec.splitting.splits_completely() && static_cast<int>(rec.splitting.total_degree()) == f.degree();
    rec.law_consistent = split == (*rec.torsion_rank == 2 * g);
    return rec;
}

/// Checks the law at every good prime <= bound.
inline ReciprocityReport verify_law(const IntegerPolynomial& f, std::uint64_t bound, const SweepOptions& opts = {}) {
    detail::require_law_input(f);
    ReciprocityReport rep;
    rep.f = f;
    rep.genus = static_cast<unsigned>(f.degree() - 1) / 2;
    rep.bound = bound;
    rep.discriminant = detail::nonzero_discriminant(f);
    rep.bad_primes = bad_primes(f, bound);
    const auto good = good_primes(f, bound);
    if (!good.empty())
        rep.records = detail::ordered_map(good, opts.threads,
                                          [&](std::uint32_t p) { return evaluate_prime(f, p, opts.seed); });
    const unsigned n = static_cast<unsigned>(f.degree());
    for (const auto& r : rep.records) {
        if (!r.law_consistent) rep.verdict = false;
        if (r.splitting.splits_completely() && r.splitting.total_degree() == n) rep.spl.push_back(r.p);
        if (!rep.hints.certified_by && r.splitting.parts.size() == 1 && r.splitting.parts[0].first == n)
            rep.hints.certified_by = r.p;
    }
    rep.hints.rational_root = detail::has_integer_root(f);
    rep.density = {rep.spl.size(), rep.records.size()};
    return rep;
}

/// Good primes <= bound modulo which f splits completely.
inline std::vector<std::uint32_t> spl_set(const IntegerPolynomial& f, std::uint64_t bound,
                                          const SweepOptions& opts = {}) {
    detail::require_law_input(f);
    const auto good = good_primes(f, bound);
    std::vector<std::uint32_t> out;
    if (good.empty()) return out;
    const auto split = detail::ordered_map(good, opts.threads, [&](std::uint32_t p) { return splits_completely(f, p, opts.seed); });
    for (std::size_t i = 0; i < good.size(); ++i)
        if (split[i]) out.push_back(good[i]);
    return out;
}

/// Tests Spl(f) within Spl(h) over odd primes <= bound not dividing disc(f) disc(h).
inline InclusionResult inclusion_check(const IntegerPolynomial& f, const IntegerPolynomial& h, std::uint64_t bound,
                                       const SweepOptions& opts = {}) {
    for (const auto* q : {&f, &h}) {
        if (!q->is_monic()) throw Error(ErrorCode::NotMonic, q->to_string() + " is not monic");
        if (q->degree() < 1) throw Error(ErrorCode::UnsupportedDegree, "polynomials must be nonconstant");
    }
    const BigInt d = detail::nonzero_discriminant(f) * detail::nonzero_discriminant(h);
    std::vector<std::uint32_t> good;
    for (auto p : sieve_primes(bound))
        if (p != 2 && d % p != 0) good.push_back(p);
    InclusionResult res;
    res.good_count = good.size();
    if (good.empty()) return res;
    const auto pairs = detail::ordered_map(good, opts.threads, [&](std::uint32_t p) {
        return std::pair<bool, bool>{splits_completely(f, p, opts.seed), splits_completely(h, p, opts.seed)};
    });
    for (std::size_t i = 0; i < good.size(); ++i) {
        const auto [fs, hs] = pairs[i];
        res.f_split_count += fs;
        res.h_split_count += hs;
        if (fs && !hs) res.exceptions.push_back(good[i]);
    }
    res.holds = res.exceptions.empty();
    return res;
}

/// Observed frequency of completely split primes among good primes <= bound.
inline DensityReport density_report(const IntegerPolynomial& f, std::uint64_t bound,
                                    std::optional<std::uint64_t> group_order = std::nullopt,
                                    const SweepOptions& opts = {}) {
    detail::require_law_input(f);
    const auto good = good_primes(f, bound);
    if (good.empty()) throw Error(ErrorCode::EmptyRange, "no good primes up to " + std::to_string(bound));
    if (group_order && *group_order == 0) throw Error(ErrorCode::Undefined, "group order must be positive");
    const auto spl = spl_set(f, bound, opts);
    DensityReport rep;
    rep.bound = bound;
    rep.observed = {spl.size(), good.size()};
    rep.group_order = group_order;
    if (group_order) {
        const double expected = 1.0 / static_cast<double>(*group_order);
        rep.deviation = std::abs(rep.observed.value() - expected);
    }
    return rep;
}

}  // namespace hyrec

#endif  // HYREC_RECIPROCITY_RECIPROCITY_HPP
