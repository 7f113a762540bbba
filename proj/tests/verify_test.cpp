#include "support.hpp"

#include "codepth/error.hpp"
#include "codepth/resolve.hpp"
#include "codepth/verify.hpp"

#include <gtest/gtest.h>

using namespace codepth;
using codepth::testing::poly;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec P = FieldSpec::prime(10007);

} // namespace

TEST(Appendix, FormulaNamesRoundTrip) {
    for (auto f : all_formulas) EXPECT_EQ(parse_formula(to_string(f)), f);
    EXPECT_FALSE(parse_formula("nope").has_value());
}

TEST(Appendix, NullPoincare) {
    auto k = ground_field(Q);
    auto B = trivial_ext(k, trivial_module(k, 1, {2, 1}));
    AppendixInputs in;
    in.B = &B;
    EXPECT_EQ(appendix_series(Formula::nullP, in), series(1, poly({1, 0, -2, -1})));
}

TEST(Appendix, ExteriorBass) {
    auto B = exterior(Q, {1, 1});
    AppendixInputs in;
    in.B = &B;
    EXPECT_EQ(appendix_series(Formula::exteriorI, in), RationalSeries(LaurentPoly::t(-2)));
    auto k = ground_field(Q);
    auto N = trivial_ext(k, trivial_module(k, 1, {2}));
    in.B = &N;
    EXPECT_THROW(appendix_series(Formula::exteriorI, in), HypothesisViolation);
}

TEST(Appendix, TruncatedExteriorCheckpoint) {
    auto E = exterior(Q, {1, 1, 1});
    auto B = truncate(E, 3);
    auto pb = reconstruct(poincare_oracle(B, 20), 8);
    ASSERT_TRUE(pb.has_value());
    EXPECT_EQ(pb->inverse(), RationalSeries(poly({1, 0, -3, 0, 3, -1, -1})));
    AppendixInputs in;
    in.E = &E;
    in.s = 3;
    in.p_bk = *pb;
    auto ib = appendix_series(Formula::truncatedI, in);
    EXPECT_EQ(ib / *pb, RationalSeries(poly({3, 0, -3, 0, 1}, -2)));
    auto ob = bass_oracle(B, 8);
    EXPECT_EQ(ob.lo, -2);
    EXPECT_EQ(window(ib, ob.lo, ob.hi()).c, ob.c);
}

TEST(Appendix, MissingInputRejected) {
    AppendixInputs in;
    EXPECT_THROW(appendix_series(Formula::shift, in), Error);
    EXPECT_THROW(appendix_series(Formula::nullP, in), Error);
}

TEST(Appendix, EvenExteriorDegreeRejected) {
    AppendixInputs in;
    in.degrees = {1, 2};
    EXPECT_THROW(appendix_series(Formula::exteriorP, in), HypothesisViolation);
}

TEST(Appendix, MinimalGenerators) {
    auto E = exterior(Q, {1, 1});
    EXPECT_EQ(minimal_generators(regular_module(E)), LaurentPoly(1));
    EXPECT_EQ(minimal_generators(augmentation_ideal(E)), poly({0, 2}));
    EXPECT_EQ(minimal_generators(residue_field(E)), LaurentPoly(1));
}

class VerifyFormula : public ::testing::TestWithParam<Formula> {};

TEST_P(VerifyFormula, MatchesOracleOverPrimeField) {
    const auto f = GetParam();
    auto names = fixture_names(f);
    EXPECT_GE(names.size(), 10u);
    auto checks = verify_formula(f, P, 8);
    ASSERT_EQ(checks.size(), names.size());
    for (const auto& c : checks) {
        EXPECT_TRUE(c.pass) << to_string(f) << " " << c.fixture << " " << c.error;
        EXPECT_GE(c.oracle.hi(), 8);
    }
}

INSTANTIATE_TEST_SUITE_P(AllFormulas, VerifyFormula, ::testing::ValuesIn(all_formulas),
                         [](const ::testing::TestParamInfo<Formula>& info) { return to_string(info.param); });
