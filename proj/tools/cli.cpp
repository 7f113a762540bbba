#include "cli.hpp"

#include "codepth/error.hpp"
#include "codepth/growth.hpp"
#include "codepth/verify.hpp"

#include <climits>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace codepth::cli {

namespace {

Polynomial mono(std::vector<int> e) { return {Term{1, std::move(e)}}; }

// generators of (x,y)^k in k[x,y,z], times x when with_x
std::vector<Polynomial> xy_power(int k, bool with_x) {
    std::vector<Polynomial> g;
    for (int a = k; a >= 0; --a) g.push_back(mono({a + (with_x ? 1 : 0), k - a, 0}));
    return g;
}

std::vector<CorpusEntry> build_corpus() {
    const auto Q = FieldSpec::rationals();
    std::vector<CorpusEntry> c;
    c.push_back({"squares3", "(x^2, y^2, z^2) in k[x,y,z]", {Q, 3, {mono({2, 0, 0}), mono({0, 2, 0}), mono({0, 0, 2})}},
                 "C(3)", std::array{0, 2, 1, 3, 1, 3}, false});
    for (int l = 3; l <= 4; ++l) {
        auto g = xy_power(l - 1, false);
        g.push_back(mono({0, 0, 2}));
        c.push_back({"xy" + std::to_string(l - 1) + "z2", "(x,y)^" + std::to_string(l - 1) + " + (z^2) in k[x,y,z]", {Q, 3, g},
                     "H(" + std::to_string(l) + "," + std::to_string(l - 1) + ")", std::array{0, l, l - 1, l, l - 1, l - 1}, false});
    }
    for (int l = 2; l <= 3; ++l) {
        auto g = xy_power(l - 1, true);
        g.push_back(mono({0, 0, 2}));
        c.push_back({"xxy" + std::to_string(l - 1) + "z2", "x(x,y)^" + std::to_string(l - 1) + " + (z^2) in k[x,y,z]", {Q, 3, g},
                     "H(" + std::to_string(l) + "," + std::to_string(l - 1) + ")", std::array{1, l, l - 1, l, l - 1, l - 1}, false});
    }
    c.push_back({"wxwy", "(xy, xz) in k[x,y,z]", {Q, 3, {mono({1, 1, 0}), mono({1, 0, 1})}}, "S", std::array{1, 1, 0, 0, 0, 0}, false});
    c.push_back({"h21", "(x^2, xy, z^2) in k[x,y,z]", {Q, 3, {mono({2, 0, 0}), mono({1, 1, 0}), mono({0, 0, 2})}}, "H(2,1)",
                 std::array{1, 2, 1, 2, 1, 1}, false});
    // the five 4x4 Pfaffians of a generic skew 5x5 matrix specialize to these quadrics
    c.push_back({"gorenstein5", "(x^2 - y^2, y^2 - z^2, xy, xz, yz) in k[x,y,z]",
                 {Q,
                  3,
                  {{Term{1, {2, 0, 0}}, Term{-1, {0, 2, 0}}},
                   {Term{1, {0, 2, 0}}, Term{-1, {0, 0, 2}}},
                   mono({1, 1, 0}),
                   mono({1, 0, 1}),
                   mono({0, 1, 1})}},
                 "G(5)", std::array{0, 4, 1, 0, 1, 5}, true});
    std::vector<Polynomial> golod;
    for (const auto& m : std::vector<std::vector<int>>{{1, 2, 0, 0}, {1, 1, 1, 0}, {1, 1, 0, 1}, {1, 0, 2, 0}, {1, 0, 1, 1}, {1, 0, 0, 2}})
        golod.push_back(mono(m));
    c.push_back({"golod", "w(x,y,z)^2 in k[w,x,y,z]", {Q, 4, golod}, "H(0,0)", std::array{2, 5, 3, 0, 0, 0}, true});
    return c;
}

Rational parse_coeff(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
        Rational q;
        if (q.set_str(j.get<std::string>(), 10) != 0) throw InvalidInput("presentation: bad coefficient '" + j.get<std::string>() + "'");
        if (q.get_den() == 0) throw InvalidInput("presentation: zero denominator");
        q.canonicalize();
        return q;
    }
    throw InvalidInput("presentation: coefficient must be an integer or a string a/b");
}

Json base(const std::string& command, Json inputs) {
    Json r;
    r["schema"] = report_schema;
    r["command"] = command;
    r["inputs"] = std::move(inputs);
    r["flags"] = Json::array();
    return r;
}

Json class_inputs(const ClassArgs& a, const ClassId& cls, const RingInvariants& inv, int window) {
    Json in;
    in["class"] = cls.name();
    in["invariants"] = {{"e", inv.e}, {"d", inv.d}, {"c", inv.c}, {"h", inv.h}, {"l", inv.l}, {"m", inv.m},
                        {"n", inv.n}, {"p", inv.p}, {"q", inv.q}, {"r", inv.r}};
    in["window"] = window;
    in["force"] = a.force;
    in["h_inferred"] = !a.h.has_value();
    return in;
}

Json invariants_json(const RingInvariants& inv) {
    return {{"e", inv.e}, {"d", inv.d}, {"c", inv.c}, {"h", inv.h}, {"l", inv.l},
            {"m", inv.m}, {"n", inv.n}, {"p", inv.p}, {"q", inv.q}, {"r", inv.r}};
}

} // namespace

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> c = build_corpus();
    return c;
}

const CorpusEntry* find_corpus(const std::string& name) {
    for (const auto& e : corpus())
        if (e.name == name) return &e;
    return nullptr;
}

RingPresentation parse_presentation(const Json& j) {
    if (!j.is_object()) throw InvalidInput("presentation: expected an object");
    if (j.contains("schema") && j["schema"] != presentation_schema)
        throw InvalidInput("presentation: unknown schema " + j["schema"].dump());
    RingPresentation R;
    if (!j.contains("field") || !j["field"].is_number_integer()) throw InvalidInput("presentation: field must be 0 or an odd prime");
    const auto p = j["field"].get<long long>();
    if (p < 0 || p > INT_MAX) throw InvalidInput("presentation: field out of range");
    R.field = p == 0 ? FieldSpec::rationals() : FieldSpec::prime(static_cast<std::uint32_t>(p));
    if (!j.contains("vars") || !j["vars"].is_number_integer() || j["vars"].get<long long>() < 1 || j["vars"].get<long long>() > 16)
        throw InvalidInput("presentation: vars must be an integer in 1..16");
    R.e = j["vars"].get<int>();
    if (!j.contains("gens") || !j["gens"].is_array()) throw InvalidInput("presentation: gens must be a list");
    for (const auto& g : j["gens"]) {
        if (!g.is_array()) throw InvalidInput("presentation: each generator is a list of terms");
        Polynomial poly;
        for (const auto& t : g) {
            if (!t.is_array() || t.size() != 2 || !t[1].is_array()) throw InvalidInput("presentation: a term is [coeff, [exponents]]");
            Term term;
            term.coeff = parse_coeff(t[0]);
            for (const auto& x : t[1]) {
                if (!x.is_number_integer()) throw InvalidInput("presentation: exponents must be integers");
                term.exps.push_back(x.get<int>());
            }
            poly.push_back(std::move(term));
        }
        R.gens.push_back(std::move(poly));
    }
    R.validate();
    return R;
}

Json presentation_json(const RingPresentation& R) {
    Json gens = Json::array();
    for (const auto& g : R.gens) {
        Json poly = Json::array();
        for (const auto& t : g) {
            Json c = t.coeff.get_den() == 1 && t.coeff.get_num().fits_slong_p() ? Json(t.coeff.get_num().get_si()) : Json(t.coeff.get_str());
            poly.push_back({c, t.exps});
        }
        gens.push_back(poly);
    }
    return {{"schema", presentation_schema}, {"field", R.field.characteristic}, {"vars", R.e}, {"gens", gens}};
}

RingPresentation load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::exception& e) {
        throw InvalidInput(path + ": " + e.what());
    }
    return parse_presentation(j);
}

Json to_json(const BigInt& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

Json to_json(const Rational& x) { return Json::array({to_json(BigInt(x.get_num())), to_json(BigInt(x.get_den()))}); }

Json to_json(const LaurentPoly& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms()) out.push_back({e, to_json(c)});
    return out;
}

Json to_json(const RationalSeries& s) { return {{"num", to_json(s.num())}, {"den", to_json(s.den())}}; }

Json window_json(int lo, const std::vector<BigInt>& c) {
    Json coeffs = Json::array();
    for (const auto& x : c) coeffs.push_back(to_json(x));
    return {{"lo", lo}, {"coeffs", coeffs}};
}

ClassId resolve_class(const ClassArgs& a) {
    if (auto full = ClassId::parse(a.cls)) return *full;
    auto need = [&](const std::optional<int>& v, const char* what) {
        if (!v) throw InvalidInput("class " + a.cls + " needs --" + what);
        return *v;
    };
    if (a.cls == "C") return ClassId::ci(need(a.c, "c"));
    if (a.cls == "G") return ClassId::g(need(a.r, "r"));
    if (a.cls == "H") return ClassId::h(need(a.p, "p"), need(a.q, "q"));
    throw InvalidInput("unknown class '" + a.cls + "'");
}

RingInvariants resolve_invariants(const ClassArgs& a, const ClassId& cls) {
    if (a.e < 0 || a.d < 0 || a.h.value_or(0) < 0) throw InvalidInput("e, d and h must be nonnegative");
    int l = 0, n = 0;
    if (cls.kind != ClassKind::C) {
        if (!a.l) throw InvalidInput("class " + cls.name() + " needs --l");
        l = *a.l;
        n = cls.kind == ClassKind::S ? a.n.value_or(0) : (a.n ? *a.n : throw InvalidInput("class " + cls.name() + " needs --n"));
    }
    int h = a.h.value_or(0);
    if (!a.h && cls.kind != ClassKind::C) {
        for (int t = 0; t <= 3; ++t) {
            if (admissible(cls, class_invariants(cls, a.e, a.d, t, l, n)).ok) {
                h = t;
                break;
            }
        }
    }
    auto inv = class_invariants(cls, a.e, a.d, h, l, n);
    if (cls.kind == ClassKind::C && inv.c != cls.c)
        throw InvalidInput("C(" + std::to_string(cls.c) + ") needs e - d = " + std::to_string(cls.c));
    return inv;
}

Json cmd_series(const ClassArgs& a, int window) {
    if (window < 0) throw InvalidInput("window must be nonnegative");
    const auto cls = resolve_class(a);
    const auto inv = resolve_invariants(a, cls);
    Json r = base("series", class_inputs(a, cls, inv, window));
    auto verdict = admissible(cls, inv);
    Json res;
    res["admissible"] = verdict.ok;
    res["gorenstein"] = verdict.gorenstein;
    for (const auto& v : verdict.violations) r["flags"].push_back("inadmissible: " + v.constraint + " (" + v.witness + ")");
    auto [f, g] = fg_polys(cls, inv, a.force);
    res["f"] = to_json(f);
    res["g"] = to_json(g);
    auto bass = bass_series(cls, inv, a.force);
    auto poin = poincare_series(cls, inv, a.force);
    res["bass"] = to_json(bass);
    res["poincare"] = to_json(poin);
    auto mu = taylor(bass, 0, window);
    res["mu"] = window_json(0, mu);
    res["betti"] = window_json(0, taylor(poin, 0, window));
    const auto exc = exception_kind(cls, inv);
    res["exception"] = to_string(exc);
    const int d = inv.d;
    if (d + 2 <= window && mu[static_cast<std::size_t>(d + 1)] != 0 &&
        mu[static_cast<std::size_t>(d + 1)] == mu[static_cast<std::size_t>(d + 2)])
        r["flags"].push_back("plateau: mu^(d+1) = mu^(d+2) = " + mu[static_cast<std::size_t>(d + 1)].get_str());
    r["results"] = res;
    return r;
}

Json cmd_classify(const RingPresentation& R, const std::string& source, int window) {
    R.validate();
    const int D = window < 0 ? default_window(R) : window;
    Json in = {{"source", source}, {"presentation", presentation_json(R)}, {"window", D}};
    Json r = base("classify", in);
    auto K = koszul_homology(R, D);
    Json res;
    Json ranks = Json::array();
    for (std::size_t i = 0; i < K.ranks.size(); ++i)
        for (std::size_t j = 0; j < K.ranks[i].size(); ++j)
            if (K.ranks[i][j] != 0) ranks.push_back({i, j, K.ranks[i][j]});
    res["koszul"] = {{"dims", K.algebra.dims()}, {"ranks", ranks}, {"stabilized", K.stabilized}};
    auto rep = classify(R, D);
    res["class"] = rep.cls.name();
    res["sextuple"] = {{"h", rep.sextuple[0]}, {"l", rep.sextuple[1]}, {"n", rep.sextuple[2]},
                       {"p", rep.sextuple[3]}, {"q", rep.sextuple[4]}, {"r", rep.sextuple[5]}};
    res["invariants"] = invariants_json(rep.inv);
    res["gorenstein"] = rep.gorenstein;
    res["golod"] = rep.cls.kind == ClassKind::S || (rep.cls.kind == ClassKind::H && rep.cls.p == 0 && rep.cls.q == 0);
    res["exception"] = to_string(rep.exception);
    res["m_eq_l_plus_n"] = rep.m_eq_l_plus_n;
    res["alternating_sum_zero"] = rep.alternating_sum_zero;
    for (const auto& f : rep.flags) r["flags"].push_back(f);
    // the class row's Bass series, when the computed tuple is admissible for it
    auto verdict = admissible(rep.cls, rep.inv);
    if (verdict.ok) {
        auto bass = bass_series(rep.cls, rep.inv);
        res["bass"] = to_json(bass);
        res["mu"] = window_json(0, taylor(bass, 0, 10));
    } else {
        for (const auto& v : verdict.violations) r["flags"].push_back("class row not admissible: " + v.constraint);
    }
    r["results"] = res;
    return r;
}

Json cmd_verify(const std::vector<Formula>& formulas, const FieldSpec& field, int degree, const std::string& fixture_filter) {
    Json names = Json::array();
    for (auto f : formulas) names.push_back(to_string(f));
    Json r = base("verify", {{"formulas", names}, {"field", field.characteristic}, {"degree", degree}, {"fixture", fixture_filter}});
    Json rows = Json::array();
    bool all = true;
    int checked = 0;
    for (auto f : formulas) {
        Json row;
        row["formula"] = to_string(f);
        Json fx = Json::array();
        int pass = 0, total = 0;
        for (const auto& c : verify_formula(f, field, degree)) {
            if (!fixture_filter.empty() && c.fixture.find(fixture_filter) == std::string::npos) continue;
            ++total;
            pass += c.pass;
            Json e = {{"fixture", c.fixture}, {"pass", c.pass}};
            if (!c.pass) {
                e["closed_form"] = window_json(c.closed_form.lo, c.closed_form.c);
                e["oracle"] = window_json(c.oracle.lo, c.oracle.c);
                if (!c.error.empty()) e["error"] = c.error;
            }
            fx.push_back(e);
        }
        row["fixtures"] = fx;
        row["passed"] = pass;
        row["total"] = total;
        row["pass"] = pass == total && total > 0;
        all = all && row["pass"].get<bool>();
        checked += total;
        rows.push_back(row);
    }
    if (checked == 0) throw InvalidInput("no fixture matches '" + fixture_filter + "'");
    r["results"] = {{"formulas", rows}, {"pass", all}};
    return r;
}

Json cmd_growth(const ClassArgs& a, int window) {
    const auto cls = resolve_class(a);
    const auto inv = resolve_invariants(a, cls);
    Json r = base("growth", class_inputs(a, cls, inv, window));
    auto g = growth_verdict(cls, inv, window);
    Json mu = Json::array(), strict = Json::array();
    for (const auto& x : g.mu) mu.push_back(to_json(x));
    for (std::size_t i = 1; i < g.strict.size(); ++i) strict.push_back(static_cast<bool>(g.strict[i]));
    r["results"] = {{"d", g.d},
                    {"mu", window_json(g.d, g.mu)},
                    {"strict", strict},
                    {"exception", to_string(g.exception)},
                    {"gamma_window", to_json(g.gamma_window)},
                    {"gamma_index", g.gamma_index},
                    {"pass", true}};
    return r;
}

Json cmd_examples() {
    Json r = base("examples", Json::object());
    Json list = Json::array();
    for (const auto& e : corpus()) {
        Json x = {{"name", e.name},
                  {"description", e.description},
                  {"presentation", presentation_json(e.ring)},
                  {"expected_class", e.expected_class},
                  {"derived", e.derived}};
        if (e.expected_sextuple) x["expected_sextuple"] = *e.expected_sextuple;
        list.push_back(x);
    }
    r["results"] = {{"corpus", list}};
    return r;
}

Json error_report(const std::string& command, const Json& inputs, const std::string& code, const std::string& kind,
                  const std::string& message) {
    Json r = base(command, inputs);
    r["error"] = {{"code", code}, {"kind", kind}, {"message", message}};
    return r;
}

int exit_code(const Json& report) {
    if (report.contains("error")) return report["error"]["kind"] == "input" ? 2 : 1;
    if (report.contains("results") && report["results"].contains("pass") && !report["results"]["pass"].get<bool>()) return 1;
    return 0;
}

std::string render_table(const Json& r) {
    std::ostringstream os;
    os << r["command"].get<std::string>() << "\n";
    if (r.contains("error")) {
        os << "  error " << r["error"]["code"].get<std::string>() << ": " << r["error"]["message"].get<std::string>() << "\n";
        return os.str();
    }
    const auto& res = r["results"];
    auto coeffs = [](const Json& w) {
        std::string s;
        for (const auto& c : w["coeffs"]) s += (s.empty() ? "" : " ") + (c.is_string() ? c.get<std::string>() : c.dump());
        return s;
    };
    const std::string cmd = r["command"];
    if (cmd == "series") {
        os << "  class   " << r["inputs"]["class"].get<std::string>() << "\n";
        os << "  mu      " << coeffs(res["mu"]) << "\n";
        os << "  betti   " << coeffs(res["betti"]) << "\n";
    } else if (cmd == "classify") {
        os << "  class     " << res["class"].get<std::string>() << "\n";
        const auto& s = res["sextuple"];
        os << "  sextuple  (" << s["h"] << "," << s["l"] << "," << s["n"] << "," << s["p"] << "," << s["q"] << "," << s["r"] << ")\n";
        os << "  koszul    " << res["koszul"]["dims"].dump() << "\n";
        if (res["exception"] != "none") os << "  exception " << res["exception"].get<std::string>() << "\n";
    } else if (cmd == "verify") {
        for (const auto& f : res["formulas"])
            os << "  " << f["formula"].get<std::string>() << " " << f["passed"] << "/" << f["total"] << (f["pass"].get<bool>() ? " pass" : " FAIL") << "\n";
    } else if (cmd == "growth") {
        os << "  mu        " << coeffs(res["mu"]) << "\n";
        os << "  exception " << res["exception"].get<std::string>() << "\n";
        os << "  gamma     " << res["gamma_window"][0] << "/" << res["gamma_window"][1] << "\n";
    } else if (cmd == "examples") {
        for (const auto& e : res["corpus"])
            os << "  " << e["name"].get<std::string>() << "  " << e["description"].get<std::string>() << "  -> "
               << e["expected_class"].get<std::string>() << "\n";
    }
    for (const auto& f : r["flags"]) os << "  flag: " << f.get<std::string>() << "\n";
    return os.str();
}

int window_from_env(int fallback) {
    const char* v = std::getenv("CODEPTH_WINDOW");
    if (!v || !*v) return fallback;
    char* end = nullptr;
    long w = std::strtol(v, &end, 10);
    if (*end != '\0' || w < 0 || w > 1000) throw InvalidInput("CODEPTH_WINDOW must be an integer in 0..1000");
    return static_cast<int>(w);
}

} // namespace codepth::cli
