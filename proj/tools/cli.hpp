#pragma once

#include "codepth/appendix.hpp"
#include "codepth/classtable.hpp"
#include "codepth/koszul.hpp"
#include "codepth/ring.hpp"

#include <json.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace codepth::cli {

using Json = nlohmann::json;

inline constexpr const char* report_schema = "codepth.report/1";
inline constexpr const char* presentation_schema = "codepth.presentation/1";

struct CorpusEntry {
    std::string name;
    std::string description;
    RingPresentation ring;
    std::string expected_class;
    std::optional<std::array<int, 6>> expected_sextuple;  // (h, l, n, p, q, r)
    bool derived = false;  // expectation computed here, not printed in the literature
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry* find_corpus(const std::string& name);

// {"schema", "field", "vars", "gens": [[[coeff, [exps...]], ...], ...]}
// coeff is an integer or a string "a/b".
RingPresentation parse_presentation(const Json& j);
Json presentation_json(const RingPresentation& R);
RingPresentation load_presentation(const std::string& path);

Json to_json(const BigInt& x);       // number when it fits in 64 bits, else a decimal string
Json to_json(const Rational& x);     // [num, den]
Json to_json(const LaurentPoly& p);  // [[exponent, coeff], ...] ascending
Json to_json(const RationalSeries& s);
Json window_json(int lo, const std::vector<BigInt>& c);

// Class on the command line: a letter plus its parameters, or a full name like "H(2,1)".
struct ClassArgs {
    std::string cls;
    std::optional<int> c, r, p, q;
    std::optional<int> l, n;
    int e = 3, d = 0;
    std::optional<int> h;  // unset: least h in 0..3 that makes the tuple admissible
    bool force = false;
};

ClassId resolve_class(const ClassArgs& a);
RingInvariants resolve_invariants(const ClassArgs& a, const ClassId& cls);

Json cmd_series(const ClassArgs& a, int window);
Json cmd_classify(const RingPresentation& R, const std::string& source, int window);
Json cmd_verify(const std::vector<Formula>& formulas, const FieldSpec& field, int degree, const std::string& fixture_filter);
Json cmd_growth(const ClassArgs& a, int window);
Json cmd_examples();

Json error_report(const std::string& command, const Json& inputs, const std::string& code, const std::string& kind,
                  const std::string& message);

// 0 ok, 1 mathematical failure, 2 input error
int exit_code(const Json& report);

std::string render_table(const Json& report);

// CODEPTH_WINDOW if set to a nonnegative integer, else fallback
int window_from_env(int fallback);

} // namespace codepth::cli
