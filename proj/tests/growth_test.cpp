#include "support.hpp"

#include "codepth/error.hpp"
#include "codepth/growth.hpp"

#include <gtest/gtest.h>

using namespace codepth;
using codepth::testing::expand;
using codepth::testing::ints;
using codepth::testing::poly;

TEST(BassDiffs, ClassS) {
    auto inv = class_invariants(ClassId::s(), 2, 0, 0, 2, 0);
    EXPECT_EQ(bass_diffs(bass_series(ClassId::s(), inv), 0, 4), ints({2, 1, 3, 6, 12}));
}

TEST(BassDiffs, CompleteIntersectionIsFlat) {
    auto inv = class_invariants(ClassId::ci(3), 5, 2, 0, 0, 0);
    auto diffs = bass_diffs(bass_series(ClassId::ci(3), inv), 2, 10);
    // mu = 1, 0, 0, ...
    EXPECT_EQ(diffs[0], 1);
    EXPECT_EQ(diffs[1], -1);
    for (std::size_t i = 2; i < diffs.size(); ++i) EXPECT_EQ(diffs[i], 0);
}

TEST(BassDiffs, PlateauForSWithLOne) {
    auto inv = class_invariants(ClassId::s(), 3, 1, 1, 1, 0);
    EXPECT_EQ(bass_diffs(bass_series(ClassId::s(), inv), 1, 4)[2], 0);
}

TEST(BassDiffs, OrderBelowDepthRejected) {
    auto inv = class_invariants(ClassId::s(), 3, 1, 1, 1, 0);
    EXPECT_THROW(bass_diffs(bass_series(ClassId::s(), inv), 2, 4), OrderMismatch);
}

TEST(CoeffsA, ClassG2) {
    auto inv = class_invariants(ClassId::g(2), 3, 0, 1, 3, 1);
    auto [f, g] = fg_polys(ClassId::g(2), inv);
    EXPECT_EQ(coeffs_a(f, g, 6), ints({0, 2, 2, 2, 2, 2, 2}));
}

TEST(CoeffsA, ClassB) {
    auto inv = class_invariants(ClassId::b(), 3, 0, 0, 4, 2);
    auto [f, g] = fg_polys(ClassId::b(), inv);
    EXPECT_EQ(coeffs_a(f, g, 6), ints({1, 3, 4, 4, 4, 4, 4}));
}

TEST(CoeffsA, EqualPolynomials) {
    auto f = poly({1, -1, 3});
    EXPECT_EQ(coeffs_a(f, f, 5), ints({0, 0, 0, 0, 0, 0}));
}

TEST(CoeffsB, ClassT) {
    auto inv = class_invariants(ClassId::t(), 3, 0, 1, 2, 2);
    auto f = fg_polys(ClassId::t(), inv).first;
    auto b = coeffs_b(f, 0, 7, inv.m - inv.p);
    EXPECT_EQ(b[3], 3);
    EXPECT_EQ(b[5], 4);
    EXPECT_EQ(b[7], 5);
}

TEST(CoeffsB, ClassH32) {
    auto inv = class_invariants(ClassId::h(3, 2), 3, 0, 0, 3, 2);
    auto f = fg_polys(ClassId::h(3, 2), inv).first;
    auto b = coeffs_b(f, 1, 8, inv.m - inv.p);
    EXPECT_EQ(b[0], 2);
    EXPECT_EQ(b[1], 1);
    EXPECT_EQ(b[2], 1);
    // odd and even closed forms for i >= 3
    const long l = 3, n = 2, p = 3, q = 2;
    EXPECT_EQ(b[3], n - 1 + 2 * (l - q));
    for (long j = 2; 2 * j + 1 <= 8; ++j) EXPECT_EQ(b[static_cast<std::size_t>(2 * j + 1)], (l - q + n - p) * j + l + p - q - 2);
    for (long j = 2; 2 * j <= 8; ++j) EXPECT_EQ(b[static_cast<std::size_t>(2 * j)], (l + n - p - q) * j - l + n + q + 1);
}

TEST(CoeffsB, ZeroAndRange) {
    EXPECT_EQ(coeffs_b(LaurentPoly{}, 0, 3, 0), ints({0, 0, 0, 0}));
    EXPECT_THROW(coeffs_b(poly({1}), 2, 3, 1), SOutOfRange);
    EXPECT_THROW(coeffs_b(poly({1}), -1, 3, 1), SOutOfRange);
}

TEST(ExceptionKind, Examples) {
    EXPECT_EQ(exception_kind(ClassId::s(), class_invariants(ClassId::s(), 3, 1, 1, 1, 0)), ExceptionKind::wxwy);
    EXPECT_EQ(exception_kind(ClassId::h(2, 1), class_invariants(ClassId::h(2, 1), 3, 0, 1, 2, 1)), ExceptionKind::wxwyz);
    EXPECT_EQ(exception_kind(ClassId::t(), class_invariants(ClassId::t(), 3, 0, 0, 3, 2)), ExceptionKind::none);
}

TEST(GrowthVerdict, ClassSWithLOne) {
    auto inv = class_invariants(ClassId::s(), 3, 1, 1, 1, 0);
    auto rep = growth_verdict(ClassId::s(), inv, 12);
    EXPECT_EQ(rep.exception, ExceptionKind::wxwy);
    // mu^{d+i} from t(1+t-t^2)/(1-t-t^2), ratios skipping the plateau
    auto mu = expand({1, 1, -1}, {1, -1, -1}, 12);
    EXPECT_EQ(rep.mu, mu);
    Rational best;
    int at = 0;
    for (int i = 1; i <= 12; ++i) {
        if (i == 2) continue;
        Rational r(mu[static_cast<std::size_t>(i)], mu[static_cast<std::size_t>(i - 1)]);
        r.canonicalize();
        if (at == 0 || r < best) best = r, at = i;
    }
    EXPECT_EQ(rep.gamma_window, best);
    EXPECT_EQ(rep.gamma_window, Rational(3, 2));
    EXPECT_EQ(rep.gamma_index, at);
}

TEST(GrowthVerdict, ClassG2) {
    auto inv = class_invariants(ClassId::g(2), 3, 0, 1, 3, 1);
    auto rep = growth_verdict(ClassId::g(2), inv, 12);
    EXPECT_EQ(rep.exception, ExceptionKind::none);
    for (int i = 1; i <= 12; ++i) EXPECT_TRUE(rep.strict[static_cast<std::size_t>(i)]);
    EXPECT_GT(rep.gamma_window, 1);
}

TEST(GrowthVerdict, GorensteinRejected) {
    EXPECT_THROW(growth_verdict(ClassId::ci(3), class_invariants(ClassId::ci(3), 3, 0, 0, 0, 0), 12), HypothesisViolation);
    EXPECT_THROW(growth_verdict(ClassId::g(5), class_invariants(ClassId::g(5), 3, 0, 0, 4, 1), 12), HypothesisViolation);
}

TEST(GrowthVerdict, ForcedInadmissibleTupleFailsGracefully) {
    // S with l = 0 is not a ring; the closed form does not grow
    auto inv = class_invariants(ClassId::s(), 2, 0, 0, 0, 0);
    EXPECT_THROW(growth_verdict(ClassId::s(), inv, 12), Error);
}

TEST(GrowthVerdict, ExceptionsHaveThePlateau) {
    for (const auto& e : admissible_grid()) {
        auto rep = growth_verdict(e.cls, e.inv, 12);
        if (rep.exception == ExceptionKind::none) continue;
        auto diffs = bass_diffs(bass_series(e.cls, e.inv), e.inv.d, 12);
        EXPECT_EQ(diffs[2], 0);
        EXPECT_EQ(rep.mu[1], 2);
    }
}

TEST(LemmaBounds, DominateG2) {
    auto inv = class_invariants(ClassId::g(2), 3, 0, 1, 3, 1);
    auto [f, g] = fg_polys(ClassId::g(2), inv);
    auto a = coeffs_a(f, g, 12);
    auto diffs = LaurentPoly::from_coeffs(bass_diffs(bass_series(ClassId::g(2), inv), 0, 12));
    EXPECT_TRUE(dominates(diffs, lemma_a_bound(a, inv.l, 12), 12));
}
