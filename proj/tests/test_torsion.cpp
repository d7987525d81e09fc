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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "support.hpp"

using namespace hyrec;
using namespace testing_support;

namespace {

using Curve = HyperellipticCurve<PrimeField>;

/// Monic divisors of f of degree 1..maxdeg by exhaustive scan of monic polynomials.
std::vector<oracle::Poly> monic_divisors(const oracle::Poly& f, std::int64_t p, unsigned maxdeg) {
    std::vector<oracle::Poly> out;
    for (unsigned d = 1; d <= maxdeg; ++d) {
        std::int64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::int64_t idx = 0; idx < count; ++idx) {
            oracle::Poly u(d + 1, 0);
            std::int64_t r = idx;
            for (unsigned i = 0; i < d; ++i) {
                u[i] = r % p;
                r /= p;
            }
            u[d] = 1;
            // remainder of f by monic u
            oracle::Poly rem = oracle::reduce(f, p);
            while (rem.size() > d) {
                const std::int64_t c = rem.back();
                const std::size_t shift = rem.size() - 1 - d;
                for (unsigned k = 0; k <= d; ++k) rem[shift + k] = oracle::mod(rem[shift + k] - c * u[k], p);
                oracle::trim(rem);
            }
            if (rem.empty()) out.push_back(u);
        }
    }
    return out;
}

}  // namespace

TEST(BinaryMatrixTest, Basics) {
    const auto id = BinaryMatrix::identity(2);
    EXPECT_TRUE(id.is_identity());
    const BinaryMatrix m(2, {0b10, 0b11});
    EXPECT_EQ(m.to_string(), "[01;11]");
    EXPECT_TRUE(m.invertible());
    EXPECT_EQ(m.order(), 3U);
    EXPECT_EQ(m.pow(3), id);
    EXPECT_EQ(m * m * m, id);
    const BinaryMatrix singular(2, {0b01, 0b01});
    EXPECT_EQ(singular.rank(), 1U);
    EXPECT_FALSE(singular.invertible());
    EXPECT_THROW((void)singular.order(), Error);
    EXPECT_EQ(m.apply(0b01), 0b10U);
}

TEST(BinaryMatrixTest, RankAgreesWithProductRule) {
    Rng rng(20);
    for (int i = 0; i < 500; ++i) {
        const unsigned n = 1 + rng() % 8;
        std::vector<std::uint64_t> a(n), b(n);
        for (auto& c : a) c = rng() & ((1U << n) - 1);
        for (auto& c : b) c = rng() & ((1U << n) - 1);
        const BinaryMatrix A(n, a), B(n, b);
        EXPECT_EQ((A * B).invertible(), A.invertible() && B.invertible());
        EXPECT_LE((A * B).rank(), std::min(A.rank(), B.rank()));
        if (A.invertible()) {
            EXPECT_TRUE(A.pow(A.order()).is_identity());
        }
    }
}

TEST(EmbedRootTest, Examples) {
    const Curve c(poly(fp(31), {-2, 0, 0, 1}));
    const auto d = embed_root(PrimeField::Element{4}, c);
    EXPECT_EQ(d.u, poly(fp(31), {-4, 1}));
    EXPECT_TRUE(d.v.is_zero());
    EXPECT_TRUE(add(d, d, c).is_identity());
    try {
        (void)embed_root(PrimeField::Element{5}, c);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotARoot);
    }
}

TEST(TwoTorsionTest, Examples) {
    {
        const Curve c(poly(fp(31), {-2, 0, 0, 1}));
        const auto t = two_torsion_points(c);
        EXPECT_EQ(t.rank, 2U);
        ASSERT_EQ(t.elements.size(), 4U);
        EXPECT_TRUE(t.elements[0].is_identity());
        std::set<std::uint32_t> roots;
        for (std::size_t i = 1; i < 4; ++i) roots.insert(fp(31)->neg(t.elements[i].u.coeff(0)).value);
        EXPECT_EQ(roots, (std::set<std::uint32_t>{4, 7, 20}));
    }
    EXPECT_EQ(two_torsion_points(Curve(poly(fp(5), {-2, 0, 0, 1}))).elements.size(), 2U);
    EXPECT_EQ(two_torsion_rank(Curve(poly(fp(5), {-2, 0, 0, 1}))), 1U);
    EXPECT_EQ(two_torsion_points(Curve(poly(fp(7), {-2, 0, 0, 1}))).elements.size(), 1U);
    EXPECT_EQ(two_torsion_rank(Curve(poly(fp(7), {-2, 0, 0, 1}))), 0U);
    // five distinct linear factors: full rank 2g
    auto f = fp(11);
    auto split = FpPoly::one(f);
    for (int r : {1, 2, 3, 5, 8}) split *= FpPoly::linear(f, f->from_int(r));
    EXPECT_EQ(two_torsion_rank(Curve(split)), 4U);
}

TEST(TwoTorsionTest, CountsAgainstBerlekampAndDivisorScan) {
    Rng rng(21);
    for (std::int64_t p : {3, 5, 7, 11, 13, 17}) {
        auto f = fp(static_cast<std::uint64_t>(p));
        for (unsigned deg : {3U, 5U, 7U}) {
            int done = 0;
            while (done < 6) {
                auto u = FpPoly::random(f, deg, rng) + FpPoly::monomial(f, f->one(), deg);
                if (!is_squarefree(u)) continue;
                ++done;
                const Curve c(u);
                const auto t = two_torsion_points(c, rng);
                const auto n = oracle::berlekamp_factor_count(plain(u), p);
                EXPECT_EQ(t.elements.size(), std::size_t{1} << (n - 1));
                EXPECT_EQ(t.rank, n - 1);
                for (const auto& d : t.elements) {
                    EXPECT_TRUE(d.v.is_zero());
                    EXPECT_TRUE(add(d, d, c).is_identity());
                }
                if (p <= 11 && deg <= 5) {
                    // every (u, 0) with u | f and deg u <= g is listed
                    std::set<oracle::Poly> listed;
                    for (const auto& d : t.elements)
                        if (!d.is_identity()) listed.insert(plain(d.u));
                    const auto divs = monic_divisors(plain(u), p, c.genus());
                    EXPECT_EQ(std::set<oracle::Poly>(divs.begin(), divs.end()), listed);
                }
            }
        }
    }
}

TEST(TorsionBasisTest, SplitCubic) {
    const auto tb = torsion_basis(poly(fp(31), {-2, 0, 0, 1}));
    EXPECT_EQ(tb.field->degree(), 1U);
    ASSERT_EQ(tb.roots.size(), 3U);
    std::vector<std::uint32_t> r;
    for (const auto& e : tb.roots) r.push_back(tb.field->coefficients(e)[0]);
    EXPECT_EQ(r, (std::vector<std::uint32_t>{4, 7, 20}));
    EXPECT_EQ(tb.basis().size(), 2U);
    EXPECT_EQ(add(tb.embedded[0], tb.embedded[1], tb.curve), tb.embedded[2]);
}

TEST(TorsionBasisTest, IrreducibleCubicNeedsCubicExtension) {
    const auto tb = torsion_basis(poly(fp(7), {-2, 0, 0, 1}));
    EXPECT_EQ(tb.field->degree(), 3U);
    EXPECT_EQ(tb.basis().size(), 2U);
}

TEST(TorsionBasisTest, IndependenceAndSumRelation) {
    Rng rng(22);
    for (std::uint64_t p : {7ULL, 11ULL, 13ULL}) {
        auto f = fp(p);
        for (unsigned deg : {3U, 5U, 7U}) {
            for (int i = 0; i < 3; ++i) {
                auto u = FpPoly::random(f, deg, rng) + FpPoly::monomial(f, f->one(), deg);
                if (!is_squarefree(u)) continue;
                const auto tb = torsion_basis(u, rng());
                EXPECT_EQ(tb.basis().size(), deg - 1);
                const auto table = span_table(tb);
                for (std::size_t m = 1; m < table.size(); ++m) EXPECT_FALSE(table[m].is_identity());
                auto total = identity(tb.curve);
                for (const auto& d : tb.embedded) total = add(total, d, tb.curve);
                EXPECT_TRUE(total.is_identity());
                for (const auto& d : tb.embedded) EXPECT_TRUE(scalar_mul(2, d, tb.curve).is_identity());
            }
        }
    }
}

TEST(FrobeniusMatrixTest, CubicExamples) {
    const auto split = frobenius_matrix(poly(fp(31), {-2, 0, 0, 1}));
    EXPECT_TRUE(split.matrix.is_identity());
    const auto at7 = frobenius_matrix(poly(fp(7), {-2, 0, 0, 1}));
    EXPECT_EQ(at7.matrix.order(), 3U);
    EXPECT_EQ(at7.matrix.columns(), (std::vector<std::uint64_t>{0b10, 0b11}));
    const auto at5 = frobenius_matrix(poly(fp(5), {-2, 0, 0, 1}));
    EXPECT_EQ(at5.matrix.order(), 2U);
    // conjugate to the transvection [[1,1],[0,1]]
    const BinaryMatrix t(2, {0b01, 0b11});
    bool conjugate = false;
    for (std::uint64_t a = 0; a < 4; ++a)
        for (std::uint64_t b = 0; b < 4; ++b) {
            const BinaryMatrix g(2, {a, b});
            if (g.invertible() && g * at5.matrix == t * g) conjugate = true;
        }
    EXPECT_TRUE(conjugate);
}

TEST(FrobeniusMatrixTest, MatchesGroupLawDecoding) {
    Rng rng(23);
    for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL, 19ULL}) {
        auto f = fp(p);
        for (unsigned deg : {3U, 5U, 7U}) {
            for (int i = 0; i < 3; ++i) {
                auto u = FpPoly::random(f, deg, rng) + FpPoly::monomial(f, f->one(), deg);
                if (!is_squarefree(u)) continue;
                const auto fa = frobenius_matrix(u, rng());
                const auto& tb = fa.basis;
                const auto table = span_table(tb);
                auto decode = [&](const MumfordDivisor<ExtField>& d) -> std::uint64_t {
                    for (std::size_t m = 0; m < table.size(); ++m)
                        if (table[m] == d) return m;
                    ADD_FAILURE() << "not in span";
                    return 0;
                };
                // the k-fold Frobenius acts by the k-th matrix power
                auto images = tb.basis();
                for (unsigned k = 1; k <= 6; ++k) {
                    for (auto& d : images) d = frobenius(d, tb.curve);
                    const auto mk = fa.matrix.pow(k);
                    for (unsigned i2 = 0; i2 < images.size(); ++i2) EXPECT_EQ(decode(images[i2]), mk.column(i2));
                }
                EXPECT_TRUE(fa.matrix.pow(fa.permutation_order).is_identity());
                EXPECT_EQ(fa.matrix.order(), fa.permutation_order);
                const bool linear = splitting_type(factorize(u)).all_linear;
                EXPECT_EQ(fa.matrix.is_identity(), linear);
            }
        }
    }
}

namespace {

std::vector<PrimeField::Element> ascending(const FpPoly& f) { return {f.coeffs().begin(), f.coeffs().end()}; }

/// Closed form of the last chart: s^2 (1 + a1 u + ... + a_n u^n) - u^3.
Bivariate<PrimeField> expected_terminal(const std::vector<PrimeField::Element>& a,
                                        const std::shared_ptr<const PrimeField>& f) {
    Bivariate<PrimeField> eq(f);
    eq.add_term(2, 0, f->one());
    for (std::size_t i = 0; i < a.size(); ++i) eq.add_term(2, static_cast<unsigned>(i + 1), a[i]);
    eq.add_term(0, 3, f->neg(f->one()));
    return eq;
}

}  // namespace

TEST(BlowupTest, QuinticOverF7) {
    auto f7 = fp(7);
    const auto a = blowup_coefficients(ascending(poly(f7, {1, 0, 0, 0, 0, 1})));
    ASSERT_EQ(a.size(), 5U);
    const auto chain = blowup_chain(2, a, f7);
    ASSERT_EQ(chain.size(), 1U);
    EXPECT_EQ(chain[0].substitution, "z = u*x");
    EXPECT_EQ(chain[0].factored, std::make_pair(3U, 0U));
    EXPECT_EQ(chain[0].residual_exponent, 3U);
    EXPECT_TRUE(chain[0].terminal);
    EXPECT_EQ(chain[0].equation, expected_terminal(a, f7));
    EXPECT_EQ(chain[0].equation.to_string("x", "u"), "x^2*u^5 + x^2 + 6*u^3");
}

TEST(BlowupTest, GenusOneIsEmpty) {
    auto f = fp(11);
    EXPECT_TRUE(blowup_chain(1, {f->one(), f->zero(), f->from_int(3)}, f).empty());
}

TEST(BlowupTest, Errors) {
    auto f = fp(11);
    EXPECT_THROW((void)blowup_chain(0, {f->one()}, f), Error);
    try {
        (void)blowup_chain(2, {f->one()}, f);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Undefined);
    }
}

TEST(BlowupTest, ExponentDropsByTwoAndShapeIsCusp) {
    Rng rng(24);
    for (unsigned g : {2U, 3U, 4U, 5U}) {
        for (std::uint64_t p : {3ULL, 11ULL, 101ULL}) {
            auto f = fp(p);
            for (int i = 0; i < 10; ++i) {
                std::vector<PrimeField::Element> a;
                for (unsigned k = 0; k < 2 * g + 1; ++k) a.push_back(f->random(rng));
                const auto chain = blowup_chain(g, a, f);
                ASSERT_EQ(chain.size(), g - 1);
                for (std::size_t k = 0; k < chain.size(); ++k) {
                    const auto& c = chain[k];
                    EXPECT_EQ(c.residual_exponent, 2 * g - 1 - 2 * k);
                    EXPECT_EQ(c.equation.multiply_monomial(c.factored), c.substituted);
                    EXPECT_EQ(c.equation.max_monomial_divisor(), std::make_pair(0U, 0U));
                    EXPECT_EQ(c.factored, k == 0 ? std::make_pair(2 * g - 1, 0U) : std::make_pair(0U, 2U));
                    EXPECT_EQ(c.terminal, k + 1 == chain.size());
                }
                const auto& last = chain.back();
                EXPECT_EQ(last.equation, expected_terminal(a, f));
                EXPECT_EQ(last.equation.coeff(2, 0), f->one());
            }
        }
    }
}

TEST(BlowupTest, SubstitutionNames) {
    auto f = fp(11);
    std::vector<PrimeField::Element> a(7, f->one());
    const auto chain = blowup_chain(3, a, f);
    ASSERT_EQ(chain.size(), 2U);
    EXPECT_EQ(chain[0].substitution, "z = u*x");
    EXPECT_EQ(chain[1].substitution, "x = m1*u");
    EXPECT_EQ(chain[1].s_name, "m1");
}
