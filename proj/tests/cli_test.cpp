#include "cli.hpp"

#include "codepth/error.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace codepth;
using namespace codepth::cli;

TEST(Presentation, RoundTrip) {
    for (const auto& e : corpus()) {
        auto j = presentation_json(e.ring);
        EXPECT_EQ(j["schema"], presentation_schema);
        EXPECT_EQ(parse_presentation(j), e.ring) << e.name;
        EXPECT_EQ(parse_presentation(Json::parse(j.dump())), e.ring) << e.name;
    }
}

TEST(Presentation, RationalCoefficients) {
    auto j = Json::parse(R"({"schema": "codepth.presentation/1", "field": 0, "vars": 2,
                             "gens": [[["1/2", [2, 0]], [-3, [0, 2]]]]})");
    auto R = parse_presentation(j);
    ASSERT_EQ(R.gens.size(), 1u);
    EXPECT_EQ(R.gens[0][0].coeff, Rational(1, 2));
    EXPECT_EQ(R.gens[0][1].coeff, -3);
    EXPECT_EQ(parse_presentation(presentation_json(R)), R);
}

TEST(Presentation, Rejections) {
    EXPECT_THROW(parse_presentation(Json::parse(R"({"schema": "other", "field": 0, "vars": 1, "gens": []})")), InvalidInput);
    EXPECT_THROW(parse_presentation(Json::parse(R"({"schema": "codepth.presentation/1", "field": 0, "vars": 2,
                                                    "gens": [[[1, [1, 0]]]]})")),
                 InvalidInput);
    EXPECT_THROW(parse_presentation(Json::parse(R"({"schema": "codepth.presentation/1", "field": 0, "vars": 2,
                                                    "gens": [[["x", [1, 1]]]]})")),
                 InvalidInput);
    EXPECT_THROW(load_presentation("/nonexistent/presentation.json"), InvalidInput);
}

TEST(Json, ExactNumbers) {
    BigInt big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 30);
    EXPECT_TRUE(to_json(big).is_string());
    EXPECT_EQ(to_json(big).get<std::string>(), big.get_str());
    EXPECT_EQ(to_json(BigInt(-7)), -7);
    EXPECT_EQ(to_json(Rational(3, 2)), Json::array({3, 2}));
    auto p = LaurentPoly::from_coeffs(std::vector<long>{2, 0, -1}, -1);
    EXPECT_EQ(to_json(p), Json::parse("[[-1, 2], [1, -1]]"));
}

TEST(Series, CompleteIntersectionBass) {
    ClassArgs a;
    a.cls = "C";
    a.c = 3;
    a.e = 5;
    a.d = 2;
    auto r = cmd_series(a, 10);
    EXPECT_EQ(r["schema"], report_schema);
    EXPECT_EQ(r["results"]["bass"]["num"], Json::parse("[[2, 1]]"));
    EXPECT_EQ(r["results"]["bass"]["den"], Json::parse("[[0, 1]]"));
    EXPECT_EQ(exit_code(r), 0);
}

TEST(Series, PlateauFlag) {
    ClassArgs a;
    a.cls = "H";
    a.p = 2;
    a.q = 1;
    a.l = 2;
    a.n = 1;
    auto r = cmd_series(a, 10);
    EXPECT_EQ(r["inputs"]["invariants"]["h"], 1);
    EXPECT_TRUE(r["inputs"]["h_inferred"].get<bool>());
    bool plateau = false;
    for (const auto& f : r["flags"]) plateau = plateau || f.get<std::string>().rfind("plateau", 0) == 0;
    EXPECT_TRUE(plateau);
    EXPECT_EQ(r["results"]["exception"], "wxwyz");
}

TEST(Series, ExplicitInadmissibleTupleIsAnInputError) {
    ClassArgs a;
    a.cls = "T";
    a.l = 2;
    a.n = 2;
    a.h = 0;
    EXPECT_THROW(cmd_series(a, 10), InadmissibleInvariants);
    a.force = true;
    auto r = cmd_series(a, 10);
    EXPECT_FALSE(r["results"]["admissible"].get<bool>());
    EXPECT_FALSE(r["flags"].empty());
}

TEST(Series, ClassArgumentForms) {
    ClassArgs a;
    a.cls = "H(2,1)";
    EXPECT_EQ(resolve_class(a), ClassId::h(2, 1));
    a.cls = "G";
    EXPECT_THROW(resolve_class(a), InvalidInput);
    a.r = 3;
    EXPECT_EQ(resolve_class(a), ClassId::g(3));
}

TEST(Classify, CorpusReports) {
    auto sq = cmd_classify(find_corpus("squares3")->ring, "corpus:squares3", -1);
    EXPECT_EQ(sq["results"]["class"], "C(3)");
    EXPECT_EQ(sq["results"]["sextuple"], Json::parse(R"({"h":0,"l":2,"n":1,"p":3,"q":1,"r":3})"));
    auto w = cmd_classify(find_corpus("wxwy")->ring, "corpus:wxwy", -1);
    EXPECT_EQ(w["results"]["class"], "S");
    EXPECT_EQ(w["results"]["invariants"]["l"], 1);
    EXPECT_EQ(w["results"]["exception"], "wxwy");
    auto h = cmd_classify(find_corpus("h21")->ring, "corpus:h21", -1);
    EXPECT_EQ(h["results"]["class"], "H(2,1)");
    EXPECT_EQ(h["results"]["invariants"]["n"], 1);
    EXPECT_EQ(h["results"]["exception"], "wxwyz");
}

TEST(Verify, ReportPasses) {
    auto r = cmd_verify({Formula::truncatedI}, FieldSpec::rationals(), 8, "");
    EXPECT_TRUE(r["results"]["pass"].get<bool>());
    EXPECT_EQ(exit_code(r), 0);
}

TEST(Growth, Report) {
    ClassArgs a;
    a.cls = "S";
    a.l = 1;
    a.d = 1;
    auto r = cmd_growth(a, 12);
    EXPECT_EQ(r["results"]["exception"], "wxwy");
    EXPECT_EQ(r["results"]["gamma_window"], Json::array({3, 2}));
}

TEST(Examples, ListsCorpus) {
    auto r = cmd_examples();
    std::vector<std::string> names;
    for (const auto& e : r["results"]["corpus"]) names.push_back(e["name"]);
    EXPECT_EQ(names, (std::vector<std::string>{"squares3", "xy2z2", "xy3z2", "xxy1z2", "xxy2z2", "wxwy", "h21", "gorenstein5",
                                               "golod"}));
}

TEST(Reports, DeterministicAndRoundTrip) {
    ClassArgs a;
    a.cls = "B";
    a.l = 4;
    a.n = 2;
    auto r1 = cmd_series(a, 12);
    auto r2 = cmd_series(a, 12);
    EXPECT_EQ(r1.dump(), r2.dump());
    EXPECT_EQ(Json::parse(r1.dump()), r1);
    auto c1 = cmd_classify(find_corpus("xy2z2")->ring, "x", -1).dump();
    EXPECT_EQ(cmd_classify(find_corpus("xy2z2")->ring, "x", -1).dump(), c1);
}

TEST(Reports, ExitCodes) {
    EXPECT_EQ(exit_code(error_report("series", Json::object(), "InvalidInput", "input", "bad")), 2);
    EXPECT_EQ(exit_code(error_report("classify", Json::object(), "InternalInconsistency", "math", "bad")), 1);
    Json failed = {{"results", {{"pass", false}}}};
    EXPECT_EQ(exit_code(failed), 1);
    EXPECT_EQ(exit_code(Json{{"results", Json::object()}}), 0);
}

TEST(Reports, TableRendering) {
    auto t = render_table(cmd_examples());
    EXPECT_NE(t.find("squares3"), std::string::npos);
}

TEST(Environment, Window) {
    unsetenv("CODEPTH_WINDOW");
    EXPECT_EQ(window_from_env(10), 10);
    setenv("CODEPTH_WINDOW", "7", 1);
    EXPECT_EQ(window_from_env(10), 7);
    setenv("CODEPTH_WINDOW", "seven", 1);
    EXPECT_THROW(window_from_env(10), InvalidInput);
    unsetenv("CODEPTH_WINDOW");
}
