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

#include "support.hpp"

using namespace hyrec;
using namespace testing_support;

namespace {

const IntegerPolynomial kCubic{-2, 0, 0, 1};

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::VerificationFailed;
}

/// Split primes by exhaustive root search: deg f distinct roots in F_p.
std::vector<std::uint32_t> spl_by_root_scan(const IntegerPolynomial& f, std::uint64_t bound) {
    const auto d = oracle::discriminant_euclid([&] {
        std::vector<long long> c;
        for (const auto& x : f.coeffs()) c.push_back(x.convert_to<long long>());
        return c;
    }());
    std::vector<std::uint32_t> out;
    for (std::uint64_t p = 3; p <= bound; p += 2) {
        if (!oracle::is_prime_trial(p) || d % p == 0) continue;
        if (static_cast<int>(oracle::roots_scan(plain(f), static_cast<std::int64_t>(p)).size()) == f.degree())
            out.push_back(static_cast<std::uint32_t>(p));
    }
    return out;
}

}  // namespace

TEST(GoodPrimesTest, Examples) {
    EXPECT_EQ(good_primes(kCubic, 20), (std::vector<std::uint32_t>{5, 7, 11, 13, 17, 19}));
    EXPECT_TRUE(good_primes(kCubic, 2).empty());
    EXPECT_EQ(bad_primes(kCubic, 20), (std::vector<std::uint32_t>{2, 3}));
    for (auto p : good_primes(IntegerPolynomial{1, 1, 0, 1}, 1000)) EXPECT_NE(p, 2U);
    EXPECT_EQ(code_of([] { good_primes(IntegerPolynomial{0, 0, 0, 1}, 10); }), ErrorCode::ZeroDiscriminant);
}

TEST(SplittingTypeTest, Examples) {
    using Parts = std::vector<std::pair<unsigned, unsigned>>;
    EXPECT_EQ(splitting_type_mod_p(kCubic, 5).parts, (Parts{{1, 1}, {2, 1}}));
    EXPECT_EQ(splitting_type_mod_p(kCubic, 31).parts, (Parts{{1, 1}, {1, 1}, {1, 1}}));
    EXPECT_EQ(splitting_type_mod_p(kCubic, 7).parts, (Parts{{3, 1}}));
    EXPECT_TRUE(splits_completely(kCubic, 31));
    EXPECT_FALSE(splits_completely(kCubic, 5));
    EXPECT_TRUE(splits_completely(kCubic, 43));
}

TEST(VerifyLawTest, CubicUpTo100) {
    const auto rep = verify_law(kCubic, 100);
    EXPECT_TRUE(rep.verdict);
    EXPECT_EQ(rep.spl, (std::vector<std::uint32_t>{31, 43}));
    EXPECT_EQ(rep.discriminant, -108);
    EXPECT_EQ(rep.density, (Fraction{2, 23}));
    EXPECT_TRUE(rep.violations().empty());
    EXPECT_FALSE(rep.hints.rational_root);
    EXPECT_EQ(rep.hints.certified_by, std::optional<std::uint32_t>(7));
    for (const auto& r : rep.records) {
        ASSERT_TRUE(r.torsion_rank.has_value());
        EXPECT_TRUE(r.splitting.squarefree);
        EXPECT_EQ(r.splitting.total_degree(), 3U);
        EXPECT_EQ(r.law_consistent, r.splitting.all_linear == (*r.torsion_rank == 2));
    }
}

TEST(VerifyLawTest, VacuousRange) {
    const auto rep = verify_law(kCubic, 4);
    EXPECT_TRUE(rep.verdict);
    EXPECT_TRUE(rep.spl.empty());
    EXPECT_TRUE(rep.records.empty());
}

TEST(VerifyLawTest, InputGuards) {
    EXPECT_EQ(code_of([] { verify_law(IntegerPolynomial{1, 0, 0, 0, 1}, 10); }), ErrorCode::EvenDegree);
    EXPECT_EQ(code_of([] { verify_law(IntegerPolynomial{1, 2}, 10); }), ErrorCode::UnsupportedDegree);
    EXPECT_EQ(code_of([] { verify_law(IntegerPolynomial{1, 0, 0, 2}, 10); }), ErrorCode::NotMonic);
    EXPECT_EQ(code_of([] { verify_law(IntegerPolynomial{0, 1, -2, 1}, 10); }), ErrorCode::ZeroDiscriminant);
}

TEST(VerifyLawTest, LawAgainstRootScanOnRandomPolynomials) {
    Rng rng(30);
    int tested = 0;
    while (tested < 12) {
        const unsigned deg = tested % 3 == 0 ? 7 : (tested % 2 == 0 ? 5 : 3);
        const auto f = random_monic(deg, 6, rng);
        if (discriminant(f) == 0) continue;
        ++tested;
        const auto rep = verify_law(f, 400);
        EXPECT_TRUE(rep.verdict) << f.to_string();
        EXPECT_EQ(rep.spl, spl_by_root_scan(f, 400)) << f.to_string();
        for (const auto& r : rep.records) {
            const auto n = oracle::berlekamp_factor_count(plain(f), r.p);
            EXPECT_EQ(*r.torsion_rank, n - 1);
            EXPECT_EQ(r.splitting.parts.size(), n);
        }
    }
}

TEST(SplSetTest, ExamplesAndMonotonicity) {
    EXPECT_EQ(spl_set(kCubic, 100), (std::vector<std::uint32_t>{31, 43}));
    EXPECT_TRUE(spl_set(kCubic, 30).empty());
    const auto small = spl_set(kCubic, 500);
    const auto large = spl_set(kCubic, 2000);
    ASSERT_LE(small.size(), large.size());
    EXPECT_TRUE(std::equal(small.begin(), small.end(), large.begin()));
    const auto good = good_primes(kCubic, 2000);
    for (auto p : large) EXPECT_TRUE(std::binary_search(good.begin(), good.end(), p));
    EXPECT_EQ(large, spl_by_root_scan(kCubic, 2000));
}

TEST(InclusionTest, Examples) {
    const IntegerPolynomial quad{3, 0, 1};
    const auto a = inclusion_check(kCubic, quad, 2000);
    EXPECT_TRUE(a.holds);
    EXPECT_TRUE(a.exceptions.empty());
    const auto b = inclusion_check(quad, kCubic, 2000);
    EXPECT_FALSE(b.holds);
    EXPECT_EQ(b.first_counterexample(), std::optional<std::uint32_t>(7));
    EXPECT_TRUE(inclusion_check(kCubic, kCubic, 2000).holds);
    EXPECT_EQ(code_of([&] { inclusion_check(IntegerPolynomial{3, 0, 2}, kCubic, 10); }), ErrorCode::NotMonic);
}

TEST(DensityTest, Examples) {
    const auto small = density_report(kCubic, 100, 6);
    EXPECT_EQ(small.observed, (Fraction{2, 23}));
    ASSERT_TRUE(small.deviation.has_value());
    EXPECT_NEAR(*small.deviation, 1.0 / 6 - 2.0 / 23, 1e-12);
    EXPECT_FALSE(density_report(kCubic, 100).deviation.has_value());
    EXPECT_EQ(code_of([] { density_report(kCubic, 4); }), ErrorCode::EmptyRange);
    EXPECT_EQ(code_of([] { density_report(kCubic, 100, 0); }), ErrorCode::Undefined);
}

TEST(SweepTest, ThreadCountDoesNotChangeResults) {
    const IntegerPolynomial quintic{1, -3, 0, 2, 0, 1};
    const auto one = verify_law(quintic, 3000, {7, 1});
    const auto four = verify_law(quintic, 3000, {7, 4});
    EXPECT_EQ(one, four);
    EXPECT_EQ(spl_set(kCubic, 3000, {1, 1}), spl_set(kCubic, 3000, {1, 3}));
}
