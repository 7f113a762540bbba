#include "codepth/appendix.hpp"

#include "codepth/error.hpp"
#include "codepth/linalg.hpp"

namespace codepth {

namespace {

const char* const names[] = {"shift",     "dual",   "maximalP", "kunneth", "nullP",   "nullI",    "exteriorP",
                             "exteriorI", "trivialP", "null2P",  "null2I",  "syzygyC", "trivialI", "truncatedI"};

template <class T>
const T& need(const std::optional<T>& v, Formula f, const char* what) {
    if (!v) throw HypothesisViolation(to_string(f) + ": missing input " + what);
    return *v;
}

template <class T>
const T& need(const T* v, Formula f, const char* what) {
    if (!v) throw HypothesisViolation(to_string(f) + ": missing input " + what);
    return *v;
}

RationalSeries one_minus_t_times(const LaurentPoly& h) { return RationalSeries(LaurentPoly(1) - h.shifted(1)); }

LaurentPoly w_of_square_zero(const GradedAlgebra& B, Formula f) {
    if (B.total_dim() <= 1) throw HypothesisViolation(to_string(f) + ": W must be nonzero");
    if (!products_of_positives_vanish(B)) throw HypothesisViolation(to_string(f) + ": B_+^2 != 0");
    return hilbert(B) - LaurentPoly(1);
}

} // namespace

std::string to_string(Formula f) { return names[static_cast<int>(f)]; }

std::optional<Formula> parse_formula(const std::string& s) {
    for (Formula f : all_formulas)
        if (to_string(f) == s) return f;
    return std::nullopt;
}

LaurentPoly minimal_generators(const GradedModule& M) {
    const auto& A = M.algebra();
    return with_field(A.field(), [&](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        LaurentPoly out;
        for (int j = M.lo(); j <= M.hi(); ++j) {
            Echelon<F> image(f, static_cast<std::size_t>(M.dim(j)));
            for (int i = 1; i <= A.max_degree(); ++i)
                for (int a = 0; a < A.dim(i); ++a)
                    for (int m = 0; m < M.dim(j - i); ++m) {
                        Vec<F> v;
                        for (const auto& x : M.act(i, a, j - i, m)) v.push_back(f.from(x));
                        image.insert(std::move(v));
                    }
            out.add_term(j, M.dim(j) - static_cast<long>(image.size()));
        }
        return out;
    });
}

RationalSeries appendix_series(Formula f, const AppendixInputs& in) {
    switch (f) {
    case Formula::shift:
        if (in.bass) return need(in.i_n, f, "I_N").shifted(-in.s);
        return need(in.p_n, f, "P_N").shifted(in.s);
    case Formula::dual:
        if (in.bass) return need(in.p_n, f, "P_N");
        return need(in.i_n, f, "I_N");
    case Formula::maximalP: {
        const auto& M = need(in.M, f, "M");
        return (need(in.p_m, f, "P_M") - RationalSeries(minimal_generators(M))).shifted(-1);
    }
    case Formula::kunneth:
        if (in.bass) return need(in.i_t, f, "I_T") * need(in.i_u, f, "I_U");
        return need(in.p_t, f, "P_T") * need(in.p_u, f, "P_U");
    case Formula::nullP: {
        LaurentPoly hw = w_of_square_zero(need(in.B, f, "B"), f);
        return one_minus_t_times(hw).inverse();
    }
    case Formula::nullI: {
        LaurentPoly hw = w_of_square_zero(need(in.B, f, "B"), f);
        RationalSeries pk = one_minus_t_times(hw).inverse();
        return RationalSeries(substitute_inverse(hw) - LaurentPoly::t(1)) * pk;
    }
    case Formula::exteriorP: {
        LaurentPoly den(1);
        for (int d : in.degrees) {
            if (d <= 0 || d % 2 == 0) throw HypothesisViolation("exteriorP: generator degree " + std::to_string(d) + " is not odd");
            den *= LaurentPoly(1) - LaurentPoly::t(d + 1);
        }
        return series(LaurentPoly(1), den);
    }
    case Formula::exteriorI: {
        const auto& B = need(in.B, f, "B");
        auto pd = poincare_duality(B);
        if (!pd.holds) throw HypothesisViolation("exteriorI: B has no Poincaré duality");
        return RationalSeries(LaurentPoly::t(-pd.degree));
    }
    case Formula::trivialP: {
        const auto& pck = need(in.p_ck, f, "P^C_k");
        const auto& pcw = need(in.p_cw, f, "P^C_W");
        return pck / (RationalSeries(1) - pcw.shifted(1));
    }
    case Formula::null2P:
    case Formula::null2I: {
        const auto& hw = need(in.h_w, f, "H_W");
        if (hw.is_zero() || hw.low() < 1) throw HypothesisViolation(to_string(f) + ": W must be nonzero in positive degrees");
        if (in.s < 1) throw HypothesisViolation(to_string(f) + ": s must be positive");
        LaurentPoly den = LaurentPoly(1) - hw.shifted(1) - substitute_inverse(hw).shifted(in.s + 1) + LaurentPoly::t(in.s + 2);
        RationalSeries pk = series(LaurentPoly(1), den);
        if (f == Formula::null2P) return pk;
        return RationalSeries(den.shifted(-in.s)) * pk;
    }
    case Formula::syzygyC: {
        if (in.B && in.B->total_dim() <= 1) throw HypothesisViolation("syzygyC: B_+ must be nonzero");
        const auto& pbk = need(in.p_bk, f, "P^B_k");
        return need(in.i_bplus, f, "I^B_{B+}") - pbk.shifted(1);
    }
    case Formula::trivialI: {
        if (in.C && in.C->total_dim() <= 1) throw HypothesisViolation("trivialI: C_+ must be nonzero");
        if (in.W) {
            const auto& W = *in.W;
            const auto& C = W.algebra();
            for (int i = 1; i <= C.max_degree(); ++i)
                for (int j = W.lo(); i + j <= W.hi(); ++j)
                    for (int a = 0; a < C.dim(i); ++a)
                        for (int m = 0; m < W.dim(j); ++m)
                            for (const auto& x : W.act(i, a, j, m))
                                if (x != 0) throw HypothesisViolation("trivialI: C_+W != 0");
        }
        LaurentPoly hw = in.W ? hilbert(*in.W) : need(in.h_w, f, "H_W");
        const auto& pbk = need(in.p_bk, f, "P^B_k");
        const auto& pck = need(in.p_ck, f, "P^C_k");
        const auto& ic = need(in.i_c, f, "I_C");
        return pbk * (ic / pck + RationalSeries(substitute_inverse(hw)));
    }
    case Formula::truncatedI: {
        if (in.E) {
            auto pd = poincare_duality(*in.E);
            if (!pd.holds || pd.degree != in.s)
                throw HypothesisViolation("truncatedI: E has no Poincaré duality in degree " + std::to_string(in.s));
        }
        if (in.s < 1) throw HypothesisViolation("truncatedI: s must be positive");
        const auto& pbk = need(in.p_bk, f, "P^B_k");
        return (pbk - RationalSeries(1)).shifted(-in.s - 1) - pbk.shifted(1);
    }
    }
    throw InvalidInput("unknown formula");
}

} // namespace codepth
