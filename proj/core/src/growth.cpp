#include "codepth/growth.hpp"

#include "codepth/error.hpp"

namespace codepth {

std::string to_string(ExceptionKind k) {
    switch (k) {
    case ExceptionKind::none: return "none";
    case ExceptionKind::wxwy: return "wxwy";
    case ExceptionKind::wxwyz: return "wxwyz";
    }
    return "?";
}

std::vector<BigInt> bass_diffs(const RationalSeries& s, int d, int N) {
    auto ord = s.order();
    if (ord && *ord < d)
        throw OrderMismatch("series has a nonzero coefficient at t^" + std::to_string(*ord) + " below t^" +
                            std::to_string(d));
    RationalSeries x = s * RationalSeries(LaurentPoly::from_coeffs(std::vector<long>{1, -1}));
    return taylor(x.shifted(-d), 0, N);
}

std::vector<BigInt> coeffs_a(const LaurentPoly& f, const LaurentPoly& g, int N) {
    return taylor(RationalSeries(f - g, LaurentPoly::from_coeffs(std::vector<long>{1, 0, -1})), 0, N);
}

std::vector<BigInt> coeffs_b(const LaurentPoly& f, int s, int N, int s_max) {
    if (s < 0 || s > s_max)
        throw SOutOfRange("s=" + std::to_string(s) + " outside [0, " + std::to_string(s_max) + "]");
    LaurentPoly num = f * LaurentPoly::from_coeffs(std::vector<long>{1, 0, 0, 1}).pow(static_cast<unsigned>(s));
    LaurentPoly den = LaurentPoly::from_coeffs(std::vector<long>{1, 0, -1}).pow(2);
    return taylor(RationalSeries(num, den), 0, N);
}

LaurentPoly lemma_a_bound(const std::vector<BigInt>& a, int l, int N) {
    LaurentPoly p;
    for (int i = 0; i <= N; ++i) {
        BigInt c;
        if (i == 0) c = a[0];
        else if (i == 1) c = a[1] - 1;
        else c = a[static_cast<std::size_t>(i)] + (l - 1) * a[static_cast<std::size_t>(i - 2)];
        p.add_term(i, c);
    }
    return p;
}

LaurentPoly lemma_b_bound(const std::vector<BigInt>& b, int l, int N) {
    LaurentPoly p;
    for (int i = 0; i <= N; ++i) {
        BigInt c = b[static_cast<std::size_t>(i)];
        if (i >= 2) c += (l - 2) * b[static_cast<std::size_t>(i - 2)];
        p.add_term(i, c);
    }
    return p;
}

ExceptionKind exception_kind(const ClassId& cls, const RingInvariants& inv) {
    if (cls.kind == ClassKind::S && inv.l == 1) return ExceptionKind::wxwy;
    if (cls.kind == ClassKind::H && cls.p == 2 && cls.q == 1 && inv.l == 2 && inv.n == 1) return ExceptionKind::wxwyz;
    return ExceptionKind::none;
}

GrowthReport growth_verdict(const ClassId& cls, const RingInvariants& inv, int N) {
    if (N < 2) throw PreconditionViolation("growth window must be at least 2");
    auto verdict = admissible(cls, inv);
    if (verdict.gorenstein || cls.kind == ClassKind::C)
        throw HypothesisViolation(cls.name() + " is Gorenstein; the growth theorem covers non-Gorenstein rings");
    RationalSeries I = bass_series(cls, inv);

    GrowthReport rep;
    rep.N = N;
    rep.d = inv.d;
    rep.exception = exception_kind(cls, inv);
    rep.mu = taylor(I, inv.d, inv.d + N);
    rep.strict.assign(static_cast<std::size_t>(N + 1), true);
    bool have_gamma = false;
    for (int i = 1; i <= N; ++i) {
        const BigInt& prev = rep.mu[static_cast<std::size_t>(i - 1)];
        const BigInt& cur = rep.mu[static_cast<std::size_t>(i)];
        rep.strict[static_cast<std::size_t>(i)] = cur >= prev + 1;
        const bool excused = i == 2 && rep.exception != ExceptionKind::none;
        if (excused) {
            if (!(cur == 2 && prev == 2))
                throw GrowthViolation("exception " + to_string(rep.exception) +
                                      " requires mu^{d+2} = mu^{d+1} = 2; i=2");
            continue;
        }
        if (!rep.strict[static_cast<std::size_t>(i)])
            throw GrowthViolation("mu^{d+i} < mu^{d+i-1} + 1 at i=" + std::to_string(i) + " for " + cls.name());
        if (prev == 0) throw GrowthViolation("mu^{d+i-1} = 0 at i=" + std::to_string(i));
        Rational ratio(cur, prev);
        ratio.canonicalize();
        if (!have_gamma || ratio < rep.gamma_window) {
            rep.gamma_window = ratio;
            rep.gamma_index = i;
            have_gamma = true;
        }
    }
    return rep;
}

} // namespace codepth
