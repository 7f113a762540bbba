#include "support.hpp"

#include "cli.hpp"

#include "codepth/error.hpp"
#include "codepth/koszul.hpp"

#include <gtest/gtest.h>

using namespace codepth;
using codepth::cli::corpus;
using codepth::cli::find_corpus;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec P = FieldSpec::prime(10007);

const RingPresentation& ring(const std::string& name) {
    const auto* e = find_corpus(name);
    if (!e) throw std::runtime_error("no corpus entry " + name);
    return e->ring;
}

RingPresentation over(RingPresentation R, const FieldSpec& f) {
    R.field = f;
    return R;
}

std::vector<int> trimmed(std::vector<int> d) {
    while (d.size() > 1 && d.back() == 0) d.pop_back();
    return d;
}

} // namespace

TEST(KoszulHomology, SquaresIsExterior) {
    auto K = koszul_homology(ring("squares3"));
    EXPECT_EQ(trimmed(K.algebra.dims()), (std::vector<int>{1, 3, 3, 1}));
    EXPECT_EQ(mult_invariants(K.algebra), (MultInvariants{2, 3, 1, 3, 1, 3}));
    EXPECT_TRUE(K.stabilized);
}

TEST(KoszulHomology, WxwyHasTrivialProducts) {
    auto K = koszul_homology(ring("wxwy"));
    EXPECT_EQ(trimmed(K.algebra.dims()), (std::vector<int>{1, 2, 1}));
    EXPECT_TRUE(products_of_positives_vanish(K.algebra));
}

TEST(KoszulHomology, SquareOfMaximalIdealPlusZSquared) {
    auto mi = mult_invariants(koszul_homology(ring("xy2z2")).algebra);
    EXPECT_EQ(mi.l, 3);
    EXPECT_EQ(mi.n, 2);
    EXPECT_EQ(mi.p, 3);
    EXPECT_EQ(mi.q, 2);
    EXPECT_EQ(mi.r, 2);
}

TEST(KoszulHomology, BigradedRanksSumToDims) {
    for (const auto& e : corpus()) {
        auto K = koszul_homology(e.ring);
        for (std::size_t i = 0; i < K.ranks.size(); ++i) {
            int s = 0;
            for (int x : K.ranks[i]) s += x;
            EXPECT_EQ(s, K.algebra.dim(static_cast<int>(i))) << e.name;
        }
        EXPECT_TRUE(axiom_failures(K.algebra).empty()) << e.name;
    }
}

TEST(KoszulHomology, FieldIndependentRanks) {
    for (const auto& name : {"squares3", "xy2z2", "h21", "gorenstein5"}) {
        auto a = koszul_homology(over(ring(name), Q));
        auto b = koszul_homology(over(ring(name), P));
        EXPECT_EQ(a.ranks, b.ranks) << name;
        EXPECT_EQ(mult_invariants(a.algebra), mult_invariants(b.algebra)) << name;
    }
}

TEST(Classify, AlgebraExamples) {
    EXPECT_EQ(classify(exterior(Q, {1, 1, 1})).cls, ClassId::ci(3));
    auto k = ground_field(Q);
    auto null21 = trivial_ext(k, trivial_module(k, 1, {2, 1}));
    auto aux = class_invariants(ClassId::s(), 3, 1, 1, 1, 0);
    EXPECT_EQ(classify(null21, aux).cls, ClassId::s());
    auto inv = class_invariants(ClassId::b(), 3, 0, 0, 4, 2);
    auto rep = classify(table_algebra(ClassId::b(), inv, Q), inv);
    EXPECT_EQ(rep.cls, ClassId::b());
    EXPECT_EQ(rep.inv.p, 1);
    EXPECT_EQ(rep.inv.q, 1);
    EXPECT_EQ(rep.inv.r, 2);
}

TEST(Classify, WithoutAuxiliaryDataFlagsAssumptions) {
    auto rep = classify(exterior(Q, {1, 1, 1}));
    EXPECT_FALSE(rep.flags.empty());
}

TEST(Classify, TableAlgebrasClassifyToTheirRow) {
    for (const auto& e : admissible_grid(5, 5, 4, 4, true)) {
        auto rep = classify(table_algebra(e.cls, e.inv, P), e.inv);
        EXPECT_EQ(rep.cls, e.cls) << e.cls.name() << " l=" << e.inv.l << " n=" << e.inv.n << " h=" << e.inv.h;
        EXPECT_TRUE(rep.m_eq_l_plus_n);
    }
}

TEST(TVsH30, Examples) {
    auto t = class_invariants(ClassId::t(), 3, 0, 1, 2, 2);
    EXPECT_EQ(t_vs_h30(table_algebra(ClassId::t(), t, Q)), ClassId::t());
    auto h = class_invariants(ClassId::h(3, 0), 3, 0, 0, 3, 4);
    EXPECT_EQ(t_vs_h30(table_algebra(ClassId::h(3, 0), h, Q)), ClassId::h(3, 0));
    EXPECT_THROW(t_vs_h30(exterior(Q, {1, 1})), PreconditionViolation);
}

TEST(DepthAndH, Examples) {
    auto sq = depth_and_h(ring("squares3"), 3, 12);
    EXPECT_EQ(sq.d, 0);
    EXPECT_EQ(sq.h, 0);
    auto w = depth_and_h(ring("wxwy"), 3, 12);
    EXPECT_EQ(w.d, 1);
    EXPECT_EQ(w.h, 1);
    auto h = depth_and_h(ring("h21"), 3, 12);
    EXPECT_EQ(h.d, 0);
    EXPECT_EQ(h.h, 1);
}

TEST(Classify, CorpusStructuralLaws) {
    for (const auto& e : corpus()) {
        auto rep = classify(e.ring);
        EXPECT_EQ(rep.cls.name(), e.expected_class) << e.name;
        if (e.expected_sextuple) {
            EXPECT_EQ(rep.sextuple, *e.expected_sextuple) << e.name;
        }
        EXPECT_TRUE(rep.stabilized) << e.name;
        if (rep.inv.c == 3) {
            EXPECT_TRUE(rep.m_eq_l_plus_n) << e.name;
            EXPECT_TRUE(rep.alternating_sum_zero) << e.name;
        }
        // Golod iff A_+^2 = 0
        const bool golod = rep.cls.kind == ClassKind::S || rep.cls == ClassId::h(0, 0);
        EXPECT_EQ(golod, products_of_positives_vanish(koszul_homology(e.ring).algebra)) << e.name;
    }
}

TEST(Classify, GorensteinFixture) {
    auto rep = classify(ring("gorenstein5"));
    EXPECT_EQ(rep.cls, ClassId::g(5));
    EXPECT_TRUE(rep.gorenstein);
    EXPECT_TRUE(poincare_duality(koszul_homology(ring("gorenstein5")).algebra).holds);
}

TEST(Classify, BasisIndependence) {
    for (const auto& e : corpus()) {
        auto K = koszul_homology(e.ring);
        auto base = classify(e.ring);
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            auto A = random_basis_change(K.algebra, seed);
            EXPECT_EQ(mult_invariants(A), mult_invariants(K.algebra)) << e.name;
            EXPECT_EQ(classify(A, base.inv).cls, base.cls) << e.name;
        }
    }
}

// lift_bass(I_A, e) = bass series of the class row, for artinian rings
TEST(Classify, EndToEndSeriesLaw) {
    // The oracle grows exponentially off the Golod locus, so compare windows
    // of length 11 instead of reconstructing rational functions.
    constexpr int N = 10;
    for (const auto& name : {"squares3", "xy2z2", "xy3z2", "gorenstein5"}) {
        const auto& R = ring(name);
        auto A = koszul_homology(R).algebra;
        auto rep = classify(R);

        auto ia = bass_oracle(A, N);
        EXPECT_EQ(taylor(bass_series(rep.cls, rep.inv), ia.lo + R.e, ia.hi() + R.e), ia.c) << name;

        auto pa = poincare_oracle(A, N).c;
        std::vector<BigInt> binom(static_cast<std::size_t>(R.e) + 1, 1);
        for (int i = 1; i <= R.e; ++i) binom[static_cast<std::size_t>(i)] = binom[static_cast<std::size_t>(i - 1)] * (R.e - i + 1) / i;
        std::vector<BigInt> pr(N + 1, 0);
        for (int i = 0; i <= N; ++i)
            for (int j = 0; j <= std::min(i, R.e); ++j) pr[static_cast<std::size_t>(i)] += binom[static_cast<std::size_t>(j)] * pa[static_cast<std::size_t>(i - j)];
        auto want = taylor(poincare_series(rep.cls, rep.inv), 0, N);
        EXPECT_EQ(pr, want) << name;
    }
}

TEST(Classify, HigherCodepthRejected) {
    RingPresentation R;
    R.field = Q;
    R.e = 4;
    for (int i = 0; i < 4; ++i) {
        std::vector<int> x(4, 0);
        x[static_cast<std::size_t>(i)] = 2;
        R.gens.push_back({Term{1, x}});
    }
    EXPECT_THROW(classify(R), Unclassifiable);
}
