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
using Div = MumfordDivisor<PrimeField>;

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::VerificationFailed;
}

Curve x3m2(std::uint64_t p) { return Curve(poly(fp(p), {-2, 0, 0, 1})); }

Div point(const Curve& c, std::int64_t x, std::int64_t y) {
    const auto& f = c.field_ptr();
    return make_divisor(FpPoly::linear(f, f->from_int(x)), FpPoly::constant(f, f->from_int(y)), c);
}

}  // namespace

TEST(CurveTest, Validation) {
    EXPECT_EQ(x3m2(31).genus(), 1U);
    auto f7 = fp(7);
    const auto quintic = poly(f7, {-1, -1, 0, 0, 0, 1});
    ASSERT_TRUE(is_squarefree(quintic));
    EXPECT_EQ(Curve(quintic).genus(), 2U);
    EXPECT_EQ(code_of([&] { Curve c(poly(f7, {1, 0, 0, 0, 1})); }), ErrorCode::EvenDegree);
    EXPECT_EQ(code_of([&] { Curve c(poly(f7, {1, 1})); }), ErrorCode::UnsupportedDegree);
    EXPECT_EQ(code_of([&] { Curve c(poly(f7, {1, 0, 0, 2})); }), ErrorCode::NotMonic);
    EXPECT_EQ(code_of([&] { Curve c(poly(fp(3), {-2, 0, 0, 1})); }), ErrorCode::NotSquarefree);
}

TEST(DivisorTest, Construction) {
    const auto c = x3m2(31);
    const auto& f = c.field_ptr();
    EXPECT_NO_THROW(make_divisor(poly(f, {-4, 1}), FpPoly(f), c));
    EXPECT_TRUE(make_divisor(FpPoly::one(f), FpPoly(f), c).is_identity());
    EXPECT_EQ(code_of([&] { make_divisor(poly(f, {-5, 1}), FpPoly(f), c); }), ErrorCode::NotOnJacobian);
    EXPECT_EQ(code_of([&] { make_divisor(poly(f, {-4, 2}), FpPoly(f), c); }), ErrorCode::NotMonic);
    EXPECT_EQ(code_of([&] { make_divisor(poly(f, {1, 0, 1}), FpPoly(f), c); }), ErrorCode::NotReduced);
    const auto d = identity(c);
    EXPECT_EQ(code_of([&] { add(d, d, Curve(poly(f, {-3, 0, 0, 1}))); }), ErrorCode::CurveMismatch);
}

TEST(GroupLawTest, TwoTorsionExamples) {
    const auto c = x3m2(31);
    const auto& f = c.field_ptr();
    const Div a{poly(f, {-4, 1}), FpPoly(f), c.tag()};
    const Div b{poly(f, {-7, 1}), FpPoly(f), c.tag()};
    EXPECT_EQ(add(a, identity(c), c), a);
    EXPECT_EQ(add(a, b, c), (Div{poly(f, {-20, 1}), FpPoly(f), c.tag()}));
    EXPECT_TRUE(add(a, a, c).is_identity());
    EXPECT_EQ(neg(a, c), a);
    EXPECT_TRUE(neg(identity(c), c).is_identity());
    EXPECT_TRUE(scalar_mul(2, a, c).is_identity());
    EXPECT_TRUE(scalar_mul(0, a, c).is_identity());
    EXPECT_EQ(scalar_mul(3, a, c), a);
}

TEST(GroupLawTest, GenusOneMatchesChordAndTangent) {
    for (std::int64_t p : {5, 13, 31, 43}) {
        const auto c = Curve(poly(fp(static_cast<std::uint64_t>(p)), {3, 1, 2, 1}));
        const oracle::Poly fo{3, 1, 2, 1};
        const auto pts = oracle::affine_points(fo, p);
        auto to_div = [&](const oracle::Point& P) { return P ? point(c, P->first, P->second) : identity(c); };
        for (const auto& P : pts) {
            for (const auto& Q : pts) {
                const auto R = oracle::chord_add(P, Q, fo, p);
                EXPECT_EQ(add(to_div(P), to_div(Q), c), to_div(R));
            }
        }
    }
}

TEST(GroupLawTest, EnumerationExamples) {
    const auto c5 = x3m2(5);
    EXPECT_EQ(enumerate_jacobian(c5).size(), oracle::affine_points({-2, 0, 0, 1}, 5).size() + 1);
    const auto all = enumerate_jacobian(x3m2(31));
    EXPECT_TRUE(std::find_if(all.begin(), all.end(), [](const Div& d) { return d.is_identity(); }) != all.end());
    const auto order2 = std::count_if(all.begin(), all.end(), [](const Div& d) { return d.u.degree() == 1 && d.v.is_zero(); });
    EXPECT_EQ(order2, 3);
    EXPECT_EQ(code_of([&] { enumerate_jacobian(x3m2(31), 100); }), ErrorCode::CapExceeded);
}

TEST(GroupLawTest, EnumeratedOrderMatchesPointCounts) {
    Rng rng(13);
    for (std::int64_t p : {3, 5, 7, 11, 13}) {
        auto f = fp(static_cast<std::uint64_t>(p));
        for (unsigned deg : {3U, 5U}) {
            for (int trial = 0; trial < 3; ++trial) {
                auto u = FpPoly::random(f, deg, rng) + FpPoly::monomial(f, f->one(), deg);
                if (!is_squarefree(u)) continue;
                const Curve c(u);
                const auto all = enumerate_jacobian(c);
                EXPECT_EQ(static_cast<std::int64_t>(all.size()), oracle::jacobian_order(plain(u), p)) << u.to_string();
                for (const auto& d : all) {
                    EXPECT_TRUE(is_valid_divisor(d, c));
                    EXPECT_TRUE(scalar_mul(all.size(), d, c).is_identity());
                }
                std::set<std::string> distinct;
                for (const auto& d : all) distinct.insert(d.to_string());
                EXPECT_EQ(distinct.size(), all.size());
            }
        }
    }
}

TEST(GroupLawTest, AxiomsOnRandomDivisors) {
    Rng rng(14);
    std::vector<Curve> curves;
    curves.emplace_back(poly(fp(97), {-2, 0, 0, 1}));
    curves.emplace_back(poly(fp(13), {1, 3, 0, 2, 0, 1}));
    curves.emplace_back(poly(fp(53), {-1, -1, 0, 0, 0, 1}));
    curves.emplace_back(poly(fp(7), {3, 1, 0, 0, 0, 0, 0, 1}));
    curves.emplace_back(poly(fp(89), {5, 0, 2, 0, 0, 1, 0, 1}));
    for (const auto& c : curves) {
        ASSERT_TRUE(is_squarefree(c.f()));
        for (int i = 0; i < 150; ++i) {
            const auto a = random_divisor(c, rng), b = random_divisor(c, rng), d = random_divisor(c, rng);
            const auto ab = add(a, b, c);
            EXPECT_TRUE(is_valid_divisor(ab, c));
            EXPECT_LE(ab.u.degree(), static_cast<int>(c.genus()));
            EXPECT_EQ(ab, add(b, a, c));
            EXPECT_EQ(add(ab, d, c), add(a, add(b, d, c), c));
            EXPECT_EQ(add(a, identity(c), c), a);
            EXPECT_TRUE(add(a, neg(a, c), c).is_identity());
            EXPECT_EQ(neg(neg(a, c), c), a);
            EXPECT_EQ(sub(ab, b, c), a);
            EXPECT_EQ(scalar_mul(5, a, c), add(scalar_mul(2, a, c), scalar_mul(3, a, c), c));
        }
    }
}
