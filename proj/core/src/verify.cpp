#include "codepth/verify.hpp"

#include "codepth/classtable.hpp"
#include "codepth/error.hpp"
#include "codepth/galg.hpp"
#include "codepth/resolve.hpp"

#include <functional>

namespace codepth {

namespace {

struct Named {
    std::string name;
    GradedAlgebra A;
};

struct NamedModule {
    std::string name;
    GradedModule M;
};

std::string list(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

Named ext(const FieldSpec& f, const std::vector<int>& deg) { return {"ext(" + list(deg) + ")", exterior(f, deg)}; }

// k ⋉ W with W trivial, dims[i] in degree i+1
Named null_alg(const FieldSpec& f, const std::vector<int>& dims) {
    auto k = ground_field(f);
    return {"k⋉W(" + list(dims) + ")", trivial_ext(k, trivial_module(k, 1, dims))};
}

LaurentPoly w_poly(const std::vector<int>& dims) {
    LaurentPoly h;
    for (std::size_t i = 0; i < dims.size(); ++i) h.add_term(static_cast<int>(i) + 1, dims[i]);
    return h;
}

// C ⋉ Σ^s C*, C = k ⋉ W
Named null2_alg(const FieldSpec& f, const std::vector<int>& dims, int s) {
    auto C = null_alg(f, dims).A;
    return {"null2(W=" + list(dims) + ",s=" + std::to_string(s) + ")", trivial_ext(C, dual(regular_module(C), s))};
}

std::vector<NamedModule> modules_over(const GradedAlgebra& B) {
    return {{"k", residue_field(B)}, {"B", regular_module(B)}, {"B+", augmentation_ideal(B)}};
}

RationalSeries as_series(const SeriesWindow& w) { return RationalSeries(w.poly()); }

SeriesWindow ext_window(const GradedAlgebra& B, const GradedModule& N, int hi) {
    return ext_oracle(B, N, -N.hi(), hi);
}

using Check = std::function<std::pair<RationalSeries, SeriesWindow>(int degree)>;

struct Fixture {
    std::string name;
    Check run;
};

// inputs are computed this far past the comparison window so truncation cannot reach it
constexpr int margin = 8;

std::vector<Fixture> fixtures(Formula f, const FieldSpec& F) {
    std::vector<Fixture> out;
    const std::vector<std::vector<int>> ext_degrees = {{1}, {3}, {1, 1}, {1, 3}, {3, 3}, {1, 1, 1}, {1, 1, 3}, {1, 3, 3}, {5}, {1, 5}, {3, 5}};
    const std::vector<std::vector<int>> w_dims = {{1},       {2},       {3},       {0, 1},    {1, 1},    {0, 0, 1},
                                                  {1, 0, 1}, {2, 1},    {1, 2, 1}, {0, 2, 1}, {1, 1, 1}, {3, 1, 2}};
    std::vector<Named> base = {ext(F, {1}),     ext(F, {1, 1}),  ext(F, {1, 3}), null_alg(F, {2}),
                               null_alg(F, {1, 1}), null_alg(F, {0, 1}), ext(F, {3})};

    switch (f) {
    case Formula::shift:
    case Formula::dual: {
        int s = 1;
        bool bass = false;
        for (const auto& B : base)
            for (const auto& N : modules_over(B.A)) {
                if (out.size() >= 14) break;
                const int shift = s;
                const bool b = bass;
                const std::string name = B.name + " N=" + N.name + (f == Formula::shift ? " s=" + std::to_string(shift) : "") +
                                         (b ? " bass" : "");
                auto A = B.A;
                auto M = N.M;
                if (f == Formula::shift) {
                    out.push_back({name, [=](int deg) {
                                       AppendixInputs in;
                                       in.s = shift;
                                       in.bass = b;
                                       if (b) {
                                           in.i_n = as_series(ext_window(A, M, deg + margin));
                                           return std::pair{appendix_series(f, in), ext_window(A, suspend(M, shift), deg)};
                                       }
                                       in.p_n = as_series(poincare_oracle(A, M, deg + margin));
                                       return std::pair{appendix_series(f, in), poincare_oracle(A, suspend(M, shift), deg)};
                                   }});
                } else {
                    out.push_back({name, [=](int deg) {
                                       AppendixInputs in;
                                       in.bass = b;
                                       if (b) {
                                           in.p_n = as_series(poincare_oracle(A, M, deg + margin));
                                           return std::pair{appendix_series(f, in), ext_window(A, dual(M, 0), deg)};
                                       }
                                       in.i_n = as_series(ext_window(A, M, deg + margin));
                                       return std::pair{appendix_series(f, in), poincare_oracle(A, dual(M, 0), deg)};
                                   }});
                }
                s = s % 3 + 1;
                bass = !bass;
            }
        break;
    }
    case Formula::maximalP: {
        std::vector<Named> algs = base;
        algs.push_back(ext(F, {1, 1, 1}));
        for (const auto& B : algs)
            for (const auto& N : modules_over(B.A)) {
                if (N.name == "B" || out.size() >= 12) continue;  // a free module has zero syzygy
                auto A = B.A;
                auto M = N.M;
                out.push_back({B.name + " M=" + N.name, [=](int deg) {
                                   AppendixInputs in;
                                   in.M = &M;
                                   in.p_m = as_series(poincare_oracle(A, M, deg + margin));
                                   auto syz = first_syzygy(M);
                                   return std::pair{appendix_series(f, in), poincare_oracle(A, syz, deg)};
                               }});
            }
        break;
    }
    case Formula::kunneth: {
        const std::vector<std::pair<Named, Named>> pairs = {
            {ext(F, {1}), ext(F, {1})},          {ext(F, {1}), ext(F, {3})},          {ext(F, {1}), null_alg(F, {1})},
            {null_alg(F, {1}), null_alg(F, {1})}, {null_alg(F, {2}), ext(F, {1})},     {ext(F, {1, 1}), ext(F, {1})},
            {null_alg(F, {0, 1}), ext(F, {1})},   {null_alg(F, {1, 1}), ext(F, {3})},  {ext(F, {3}), null_alg(F, {1})},
            {null_alg(F, {1}), null_alg(F, {0, 1})}, {ext(F, {1, 3}), null_alg(F, {1})}, {null_alg(F, {2}), null_alg(F, {1})}};
        bool bass = false;
        for (std::size_t x = 0; x < pairs.size(); ++x) {
            const auto& [C, D] = pairs[x];
            auto CA = C.A, DA = D.A;
            const bool b = bass;
            const bool reg = x % 3 == 2;  // use the regular module on one side
            out.push_back({C.name + " ⊗ " + D.name + (reg ? " T=C" : "") + (b ? " bass" : ""), [=](int deg) {
                               auto T = reg ? regular_module(CA) : residue_field(CA);
                               auto U = residue_field(DA);
                               auto TU = module_tensor(T, U);
                               auto CD = TU.algebra();
                               AppendixInputs in;
                               in.bass = b;
                               if (b) {
                                   in.i_t = as_series(ext_window(CA, T, deg + margin));
                                   in.i_u = as_series(ext_window(DA, U, deg + margin));
                                   return std::pair{appendix_series(f, in), ext_window(CD, TU, deg)};
                               }
                               in.p_t = as_series(poincare_oracle(CA, T, deg + margin));
                               in.p_u = as_series(poincare_oracle(DA, U, deg + margin));
                               return std::pair{appendix_series(f, in), poincare_oracle(CD, TU, deg)};
                           }});
            bass = !bass;
        }
        break;
    }
    case Formula::nullP:
    case Formula::nullI:
        for (const auto& w : w_dims) {
            auto B = null_alg(F, w);
            out.push_back({B.name, [=, A = B.A](int deg) {
                               AppendixInputs in;
                               in.B = &A;
                               auto oracle = f == Formula::nullP ? poincare_oracle(A, deg) : bass_oracle(A, deg);
                               return std::pair{appendix_series(f, in), oracle};
                           }});
        }
        break;
    case Formula::exteriorP:
    case Formula::exteriorI:
        for (const auto& d : ext_degrees) {
            auto B = ext(F, d);
            out.push_back({B.name, [=, A = B.A](int deg) {
                               AppendixInputs in;
                               in.degrees = d;
                               in.B = &A;
                               auto oracle = f == Formula::exteriorP ? poincare_oracle(A, deg) : bass_oracle(A, deg);
                               return std::pair{appendix_series(f, in), oracle};
                           }});
        }
        if (f == Formula::exteriorI)
            for (auto [w, s] : std::vector<std::pair<std::vector<int>, int>>{{{1}, 2}, {{1, 1}, 3}}) {
                auto B = null2_alg(F, w, s);
                out.push_back({B.name, [=, A = B.A](int deg) {
                                   AppendixInputs in;
                                   in.B = &A;
                                   return std::pair{appendix_series(f, in), bass_oracle(A, deg)};
                               }});
            }
        break;
    case Formula::trivialP: {
        std::vector<std::pair<Named, NamedModule>> cases;
        for (const auto& C : {ext(F, {1}), ext(F, {1, 1}), ext(F, {3}), null_alg(F, {1}), ext(F, {1, 3})}) {
            cases.push_back({C, {"Σk", suspend(residue_field(C.A), 1)}});
            cases.push_back({C, {"ΣC", suspend(regular_module(C.A), 1)}});
            if (cases.size() < 12) cases.push_back({C, {"Σ²C+", suspend(augmentation_ideal(C.A), 1)}});
        }
        for (const auto& [C, W] : cases) {
            auto CA = C.A;
            auto WM = W.M;
            out.push_back({C.name + " W=" + W.name, [=](int deg) {
                               auto B = trivial_ext(CA, WM);
                               AppendixInputs in;
                               in.p_ck = as_series(poincare_oracle(CA, deg + margin));
                               in.p_cw = as_series(poincare_oracle(CA, WM, deg + margin));
                               return std::pair{appendix_series(f, in), poincare_oracle(B, deg)};
                           }});
        }
        break;
    }
    case Formula::null2P:
    case Formula::null2I: {
        const std::vector<std::pair<std::vector<int>, int>> cases = {
            {{1}, 2},       {{2}, 2},       {{3}, 2},       {{0, 1}, 3},    {{1, 1}, 3},    {{2, 1}, 3},
            {{1, 2}, 3},    {{1}, 3},       {{0, 0, 1}, 4}, {{1, 0, 1}, 4}, {{1, 1, 1}, 4}, {{0, 2, 1}, 4}};
        for (const auto& [w, s] : cases) {
            auto B = null2_alg(F, w, s);
            out.push_back({B.name, [=, A = B.A, w = w, s = s](int deg) {
                               AppendixInputs in;
                               in.h_w = w_poly(w);
                               in.s = s;
                               auto oracle = f == Formula::null2P ? poincare_oracle(A, deg) : bass_oracle(A, deg);
                               return std::pair{appendix_series(f, in), oracle};
                           }});
        }
        break;
    }
    case Formula::syzygyC: {
        std::vector<Named> algs = base;
        algs.push_back(ext(F, {1, 1, 1}));
        algs.push_back(null_alg(F, {1, 0, 1}));
        algs.push_back(null2_alg(F, {1}, 2));
        algs.push_back({"ext(1,1,1)/E>=3", truncate(exterior(F, {1, 1, 1}), 3)});
        algs.push_back(null_alg(F, {2, 1}));
        for (const auto& B : algs) {
            out.push_back({B.name, [=, A = B.A](int deg) {
                               AppendixInputs in;
                               in.B = &A;
                               in.p_bk = as_series(poincare_oracle(A, deg + margin));
                               in.i_bplus = as_series(ext_window(A, augmentation_ideal(A), deg + margin));
                               return std::pair{appendix_series(f, in), bass_oracle(A, deg)};
                           }});
        }
        break;
    }
    case Formula::trivialI: {
        std::vector<std::pair<Named, std::vector<int>>> cases;
        for (const auto& C : {ext(F, {1}), ext(F, {1, 1}), ext(F, {3}), null_alg(F, {1}), ext(F, {1, 3}), null_alg(F, {0, 1})})
            for (const auto& w : {std::vector<int>{1}, std::vector<int>{0, 1}})
                cases.push_back({C, w});
        for (const auto& [C, w] : cases) {
            auto CA = C.A;
            out.push_back({C.name + " W=" + list(w), [=, w = w](int deg) {
                               auto W = trivial_module(CA, 1, w);
                               auto B = trivial_ext(CA, W);
                               AppendixInputs in;
                               in.C = &CA;
                               in.W = &W;
                               in.p_bk = as_series(poincare_oracle(B, deg + margin));
                               in.p_ck = as_series(poincare_oracle(CA, deg + margin));
                               in.i_c = as_series(bass_oracle(CA, deg + margin));
                               return std::pair{appendix_series(f, in), bass_oracle(B, deg)};
                           }});
        }
        break;
    }
    case Formula::truncatedI: {
        std::vector<Named> pd;
        for (const auto& d : std::vector<std::vector<int>>{{1, 1}, {1, 1, 1}, {1, 3}, {1, 1, 3}, {3, 3}, {1, 5}, {1, 1, 1, 1}})
            pd.push_back(ext(F, d));
        for (auto [w, s] : std::vector<std::pair<std::vector<int>, int>>{{{1}, 2}, {{2}, 2}, {{1, 1}, 3}, {{0, 1}, 3}, {{1, 0, 1}, 4}})
            pd.push_back(null2_alg(F, w, s));
        for (const auto& E : pd) {
            const int s = poincare_duality(E.A).degree;
            out.push_back({E.name + "/E>=" + std::to_string(s), [=, EA = E.A](int deg) {
                               auto B = truncate(EA, s);
                               AppendixInputs in;
                               in.E = &EA;
                               in.s = s;
                               in.p_bk = as_series(poincare_oracle(B, deg + margin));
                               return std::pair{appendix_series(f, in), bass_oracle(B, deg)};
                           }});
        }
        break;
    }
    }
    return out;
}

} // namespace

std::vector<std::string> fixture_names(Formula f) {
    std::vector<std::string> names;
    for (const auto& fx : fixtures(f, FieldSpec::rationals())) names.push_back(fx.name);
    return names;
}

std::vector<FormulaCheck> verify_formula(Formula f, const FieldSpec& field, int degree) {
    if (degree < 0) throw PreconditionViolation("verify_formula: negative degree");
    std::vector<FormulaCheck> out;
    for (const auto& fx : fixtures(f, field)) {
        FormulaCheck c;
        c.formula = f;
        c.fixture = fx.name;
        try {
            auto [closed, oracle] = fx.run(degree);
            // start below the oracle window so stray low-order terms of the closed form are caught
            const int lo = oracle.lo - 2;
            c.closed_form = window(closed, lo, degree);
            c.oracle.lo = lo;
            for (int x = lo; x <= degree; ++x) c.oracle.c.push_back(oracle.at(x));
            c.pass = c.closed_form == c.oracle;
        } catch (const Error& e) {
            c.error = e.what();
        }
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace codepth
