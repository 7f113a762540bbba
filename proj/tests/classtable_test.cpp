#include "support.hpp"

#include "codepth/classtable.hpp"
#include "codepth/error.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace codepth;
using codepth::testing::ints;
using codepth::testing::poly;

namespace {

bool has_violation(const AdmissibilityVerdict& v, const std::string& needle) {
    return std::any_of(v.violations.begin(), v.violations.end(),
                       [&](const Violation& x) { return x.constraint.find(needle) != std::string::npos; });
}

std::vector<ClassId> sample_classes() {
    std::vector<ClassId> out = {ClassId::s(), ClassId::t(), ClassId::b()};
    for (int r = 2; r <= 4; ++r) out.push_back(ClassId::g(r));
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q) out.push_back(ClassId::h(p, q));
    return out;
}

} // namespace

TEST(ClassId, NamesRoundTrip) {
    for (const auto& cls : sample_classes()) {
        auto back = ClassId::parse(cls.name());
        ASSERT_TRUE(back.has_value()) << cls.name();
        EXPECT_EQ(*back, cls);
    }
    EXPECT_EQ(ClassId::parse("C(3)"), ClassId::ci(3));
    EXPECT_FALSE(ClassId::parse("G(1)").has_value());
    EXPECT_FALSE(ClassId::parse("X").has_value());
}

TEST(Admissible, TRequiresLAtLeastThreeMinusH) {
    auto v = admissible(ClassId::t(), class_invariants(ClassId::t(), 3, 0, 0, 2, 2));
    EXPECT_FALSE(v.ok);
    EXPECT_TRUE(has_violation(v, "T: l >= 3-h"));
}

TEST(Admissible, H32WithNTwo) {
    auto inv = class_invariants(ClassId::h(3, 2), 3, 0, 0, 3, 2);
    EXPECT_EQ(inv.p, 3);
    EXPECT_EQ(inv.q, 2);
    EXPECT_EQ(inv.r, 2);
    EXPECT_TRUE(admissible(ClassId::h(3, 2), inv).ok);
}

TEST(Admissible, GorensteinG5) {
    auto inv = class_invariants(ClassId::g(5), 3, 0, 0, 4, 1);
    auto v = admissible(ClassId::g(5), inv);
    EXPECT_TRUE(v.ok);
    EXPECT_TRUE(v.gorenstein);
    auto grid = admissible_grid(5, 5, 5, 4, false);
    EXPECT_TRUE(std::none_of(grid.begin(), grid.end(), [](const GridEntry& e) { return admissible(e.cls, e.inv).gorenstein; }));
}

TEST(Admissible, CodepthChainEnforced) {
    auto inv = class_invariants(ClassId::h(0, 0), 3, 0, 0, 1, 1);
    auto v = admissible(ClassId::h(0, 0), inv);
    EXPECT_FALSE(v.ok);
    EXPECT_TRUE(has_violation(v, "l+1 >= c-h"));
}

TEST(FgPolys, ClassS) {
    auto [f, g] = fg_polys(ClassId::s(), class_invariants(ClassId::s(), 2, 0, 0, 2, 0));
    EXPECT_EQ(f, poly({2, 1, -1}));
    EXPECT_EQ(g, poly({1, -1, -2}));
}

TEST(FgPolys, ClassT) {
    auto inv = class_invariants(ClassId::t(), 3, 0, 1, 2, 2);
    auto [f, g] = fg_polys(ClassId::t(), inv);
    EXPECT_EQ(f, poly({2, 2, -2, -1, 1}));
    EXPECT_EQ(g, poly({1, -1, -2, 1, 0, -1}));
}

TEST(FgPolys, InadmissibleNeedsForce) {
    auto inv = class_invariants(ClassId::t(), 3, 0, 0, 2, 2);
    EXPECT_THROW(fg_polys(ClassId::t(), inv), InadmissibleInvariants);
    auto [f, g] = fg_polys(ClassId::t(), inv, true);
    EXPECT_EQ(f.coeff(0), 2);
}

TEST(FgPolys, CompleteIntersection) {
    auto [f, g] = fg_polys(ClassId::ci(3), class_invariants(ClassId::ci(3), 3, 0, 0, 0, 0));
    EXPECT_EQ(f, g);
    EXPECT_EQ(f, poly({1, -1}).pow(3) * poly({1, 1}).pow(2));
}

TEST(Series, CompleteIntersectionBassIsMonomial) {
    for (int c = 0; c <= 3; ++c)
        for (int d = 0; d <= 3; ++d) {
            auto inv = class_invariants(ClassId::ci(c), c + d, d, 0, 0, 0);
            EXPECT_EQ(bass_series(ClassId::ci(c), inv), RationalSeries(LaurentPoly::t(d)));
        }
}

TEST(Series, CompleteIntersectionPoincare) {
    auto inv = class_invariants(ClassId::ci(3), 3, 0, 0, 0, 0);
    EXPECT_EQ(taylor(poincare_series(ClassId::ci(3), inv), 0, 4), ints({1, 3, 6, 10, 15}));
}

TEST(Series, ClassSWithLOne) {
    auto inv = class_invariants(ClassId::s(), 3, 1, 1, 1, 0);
    EXPECT_EQ(taylor(bass_series(ClassId::s(), inv), 1, 6), ints({1, 2, 2, 4, 6, 10}));
}

TEST(Lift, Examples) {
    EXPECT_EQ(lift_bass(RationalSeries(LaurentPoly::t(-1)), 1), RationalSeries(1));
    EXPECT_EQ(lift_poincare(RationalSeries(1), 4), RationalSeries(poly({1, 1}).pow(4)));
    // k ⋉ W with H_W = 2t + t^2
    auto ia = series(poly({1, 2, 0, -1}, -2), poly({1, 0, -2, -1}));
    auto inv = class_invariants(ClassId::s(), 3, 1, 1, 1, 0);
    EXPECT_EQ(lift_bass(ia, 3), bass_series(ClassId::s(), inv));
}

TEST(CorClass, Examples) {
    auto h21 = cor_class_report(class_invariants(ClassId::h(2, 1), 3, 0, 1, 2, 1), ClassId::h(2, 1));
    EXPECT_TRUE(h21.l_eq_q_plus_1 && h21.l_eq_p_and_n_eq_q && h21.h_with_n_eq_p_minus_1);
    auto t = cor_class_report(class_invariants(ClassId::t(), 3, 0, 0, 3, 2), ClassId::t());
    EXPECT_FALSE(t.l_eq_q_plus_1 || t.l_eq_p_and_n_eq_q || t.h_with_n_eq_p_minus_1);
    auto h32 = cor_class_report(class_invariants(ClassId::h(3, 2), 3, 0, 0, 3, 2), ClassId::h(3, 2));
    EXPECT_TRUE(h32.l_eq_q_plus_1 && h32.l_eq_p_and_n_eq_q && h32.h_with_n_eq_p_minus_1);
}

TEST(CorClass, ConsistentOnGrid) {
    for (const auto& e : admissible_grid()) {
        if (e.cls.kind == ClassKind::S) continue;
        EXPECT_NO_THROW(cor_class_report(e.inv, e.cls)) << e.cls.name() << " l=" << e.inv.l << " n=" << e.inv.n;
    }
}

TEST(TableShape, FirstBassNumberAndDegrees) {
    for (const auto& e : admissible_grid()) {
        auto [f, g] = fg_polys(e.cls, e.inv);
        EXPECT_EQ(g.coeff(0), 1);
        EXPECT_LE(f.high(), 4);
        EXPECT_LE(g.high(), 5);
        const long first = e.cls.kind == ClassKind::S ? e.inv.l : e.inv.n;
        EXPECT_EQ(f.coeff(0), first);
        EXPECT_EQ(taylor(bass_series(e.cls, e.inv), e.inv.d, e.inv.d), ints({first}));
    }
}

TEST(TableShape, GridInvariantsFollowRows) {
    auto grid = admissible_grid();
    EXPECT_FALSE(grid.empty());
    for (const auto& e : grid) {
        EXPECT_TRUE(e.inv.l + 1 >= e.inv.c - e.inv.h && e.inv.c - e.inv.h >= 0);
        if (e.cls.kind != ClassKind::S) {
            EXPECT_EQ(e.inv.m, e.inv.l + e.inv.n);
        }
    }
}

// Raising l or n never adds a violated lower bound, away from the Gorenstein
// line n = 1, r = l+1 where a different set of constraints applies.
TEST(Admissible, LowerBoundsMonotone) {
    auto lower_bound_failures = [](const ClassId& cls, int h, int l, int n) {
        auto v = admissible(cls, class_invariants(cls, cls.codepth(), 0, h, l, n));
        return std::count_if(v.violations.begin(), v.violations.end(), [](const Violation& x) {
            return x.constraint.find(": l >=") != std::string::npos || x.constraint.find(": n >=") != std::string::npos;
        });
    };
    for (const auto& cls : sample_classes())
        for (int h = 0; h <= 2; ++h)
            for (int l = 0; l <= 8; ++l)
                for (int n = 0; n <= 8; ++n) {
                    if (cls.kind == ClassKind::G && n <= 2 && l + 2 >= cls.r) continue;
                    auto here = lower_bound_failures(cls, h, l, n);
                    EXPECT_LE(lower_bound_failures(cls, h, l + 1, n), here);
                    if (cls.kind != ClassKind::S) {
                        EXPECT_LE(lower_bound_failures(cls, h, l, n + 1), here);
                    }
                }
}
