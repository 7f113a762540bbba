#include "codepth/classtable.hpp"

#include "codepth/error.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

namespace codepth {

int ClassId::codepth() const {
    switch (kind) {
    case ClassKind::C: return c;
    case ClassKind::S: return 2;
    default: return 3;
    }
}

std::string ClassId::name() const {
    switch (kind) {
    case ClassKind::C: return "C(" + std::to_string(c) + ")";
    case ClassKind::S: return "S";
    case ClassKind::T: return "T";
    case ClassKind::B: return "B";
    case ClassKind::G: return "G(" + std::to_string(r) + ")";
    case ClassKind::H: return "H(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
    return "?";
}

std::optional<ClassId> ClassId::parse(const std::string& s) {
    static const std::regex one(R"(^\s*([CG])\(\s*(\d+)\s*\)\s*$)");
    static const std::regex two(R"(^\s*H\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$)");
    std::smatch m;
    if (s == "S") return ClassId::s();
    if (s == "T") return ClassId::t();
    if (s == "B") return ClassId::b();
    if (std::regex_match(s, m, one)) {
        int v = std::stoi(m[2]);
        if (m[1] == "C") return ClassId::ci(v);
        if (v >= 2) return ClassId::g(v);
        return std::nullopt;
    }
    if (std::regex_match(s, m, two)) return ClassId::h(std::stoi(m[1]), std::stoi(m[2]));
    return std::nullopt;
}

RingInvariants class_invariants(const ClassId& cls, int e, int d, int h, int l, int n) {
    RingInvariants inv;
    inv.e = e;
    inv.d = d;
    inv.c = e - d;
    inv.h = h;
    inv.l = l;
    inv.n = n;
    switch (cls.kind) {
    case ClassKind::C:
        inv.l = cls.c - 1;
        inv.n = cls.c == 3 ? 1 : 0;
        inv.m = cls.c == 3 ? 3 : (cls.c == 2 ? 1 : 0);
        inv.p = cls.c == 3 ? 3 : (cls.c == 2 ? 1 : 0);
        inv.q = cls.c == 3 ? 1 : 0;
        inv.r = cls.c == 3 ? 3 : 0;
        break;
    case ClassKind::S:
        inv.n = 0;
        inv.m = l;
        break;
    case ClassKind::T:
        inv.m = l + n;
        inv.p = 3;
        break;
    case ClassKind::B:
        inv.m = l + n;
        inv.p = 1;
        inv.q = 1;
        inv.r = 2;
        break;
    case ClassKind::G:
        inv.m = l + n;
        inv.q = 1;
        inv.r = cls.r;
        break;
    case ClassKind::H:
        inv.m = l + n;
        inv.p = cls.p;
        inv.q = cls.q;
        inv.r = cls.q;
        break;
    }
    return inv;
}

namespace {

class Checker {
public:
    explicit Checker(AdmissibilityVerdict& v) : v_(v) {}

    void require(bool cond, const std::string& constraint, const std::string& witness) {
        if (!cond) {
            v_.ok = false;
            v_.violations.push_back({constraint, witness});
        }
    }

private:
    AdmissibilityVerdict& v_;
};

std::string kv(std::initializer_list<std::pair<const char*, int>> items) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : items) {
        if (!first) os << ", ";
        first = false;
        os << k << "=" << v;
    }
    return os.str();
}

bool is_h(const ClassId& cls, int p, int q) { return cls.kind == ClassKind::H && cls.p == p && cls.q == q; }

} // namespace

AdmissibilityVerdict admissible(const ClassId& cls, const RingInvariants& inv) {
    AdmissibilityVerdict v;
    Checker ck(v);
    const int h = inv.h, l = inv.l, n = inv.n, p = inv.p, q = inv.q, r = inv.r;

    ck.require(inv.e >= 0 && inv.d >= 0 && h >= 0, "nonnegative e, d, h", kv({{"e", inv.e}, {"d", inv.d}, {"h", h}}));
    ck.require(inv.c == inv.e - inv.d, "c = e - d", kv({{"c", inv.c}, {"e", inv.e}, {"d", inv.d}}));
    ck.require(inv.c == cls.codepth(), "codepth of " + cls.name(), kv({{"c", inv.c}}));
    ck.require(l + 1 >= inv.c - h && inv.c - h >= 0, "l+1 >= c-h >= 0", kv({{"l", l}, {"c", inv.c}, {"h", h}}));
    if (cls.kind != ClassKind::C)
        ck.require(l >= 0 && inv.m >= 0 && n >= 0 && p >= 0 && q >= 0 && r >= 0, "nonnegative ranks",
                   kv({{"l", l}, {"m", inv.m}, {"n", n}, {"p", p}, {"q", q}, {"r", r}}));

    if (cls.kind == ClassKind::C) {
        RingInvariants want = class_invariants(cls, inv.e, inv.d, 0, 0, 0);
        ck.require(cls.c >= 0 && cls.c <= 3, "C(c): 0 <= c <= 3", kv({{"c", cls.c}}));
        ck.require(h == 0, "C(c): h = 0", kv({{"h", h}}));
        ck.require(l == want.l && inv.m == want.m && n == want.n && p == want.p && q == want.q && r == want.r,
                   "C(c): ranks of the exterior algebra",
                   kv({{"l", l}, {"m", inv.m}, {"n", n}, {"p", p}, {"q", q}, {"r", r}}));
        v.gorenstein = v.ok;
        return v;
    }

    if (cls.kind == ClassKind::S) {
        ck.require(h <= 1, "S: h <= 1", kv({{"h", h}}));
        ck.require(l >= 2 - h, "S: l >= 2-h", kv({{"l", l}, {"h", h}}));
        ck.require(n == 0, "S: n = 0", kv({{"n", n}}));
        ck.require(p == 0 && q == 0 && r == 0, "S: p = q = r = 0", kv({{"p", p}, {"q", q}, {"r", r}}));
        ck.require(inv.m == l, "c=2: m = l", kv({{"m", inv.m}, {"l", l}}));
        return v;
    }

    // c = 3 from here on
    ck.require(inv.m == l + n, "m = l+n", kv({{"m", inv.m}, {"l", l}, {"n", n}}));
    ck.require(l >= 2, "c=3, not C(3): l >= 2", kv({{"l", l}}));

    const bool gor = cls.kind == ClassKind::G && n == 1 && r == l + 1;
    if (gor) {
        v.gorenstein = true;
        ck.require(h == 0, "Gorenstein G: h = 0", kv({{"h", h}}));
        ck.require(l >= 4 && l % 2 == 0, "Gorenstein G: l even, l >= 4", kv({{"l", l}}));
        ck.require(p == 0 && q == 1 && r == cls.r, "G(r): p = 0, q = 1", kv({{"p", p}, {"q", q}, {"r", r}}));
        if (!v.ok) v.gorenstein = false;
        return v;
    }

    switch (cls.kind) {
    case ClassKind::T:
        ck.require(h <= 1, "T: h <= 1", kv({{"h", h}}));
        ck.require(l >= 3 - h, "T: l >= 3-h", kv({{"l", l}, {"h", h}}));
        ck.require(n >= 2, "T: n >= 2", kv({{"n", n}}));
        ck.require(p == 3 && q == 0 && r == 0, "T: p = 3, q = 0, r = 0", kv({{"p", p}, {"q", q}, {"r", r}}));
        break;
    case ClassKind::B:
        ck.require(h <= 1, "B: h <= 1", kv({{"h", h}}));
        ck.require(l >= 4 - h, "B: l >= 4-h", kv({{"l", l}, {"h", h}}));
        ck.require(n >= 2 - h, "B: n >= 2-h", kv({{"n", n}, {"h", h}}));
        ck.require(p == 1 && q == 1 && r == 2, "B: p = 1, q = 1, r = 2", kv({{"p", p}, {"q", q}, {"r", r}}));
        break;
    case ClassKind::G:
        ck.require(cls.r >= 2, "G(r): r >= 2", kv({{"r", cls.r}}));
        ck.require(h <= 1, "G(r): h <= 1", kv({{"h", h}}));
        ck.require(l >= std::max(4 - h, cls.r + 1), "G(r): l >= max{4-h, r+1}", kv({{"l", l}, {"h", h}, {"r", cls.r}}));
        ck.require(n >= 2 - h, "G(r): n >= 2-h", kv({{"n", n}, {"h", h}}));
        ck.require(p == 0 && q == 1 && r == cls.r, "G(r): p = 0, q = 1", kv({{"p", p}, {"q", q}, {"r", r}}));
        break;
    case ClassKind::H:
        ck.require(h <= 2, "H(p,q): h <= 2", kv({{"h", h}}));
        ck.require(l >= std::max({3 - h, cls.p, cls.q + 1, 2}), "H(p,q): l >= max{3-h, p, q+1, 2}",
                   kv({{"l", l}, {"h", h}, {"p", cls.p}, {"q", cls.q}}));
        ck.require(n >= std::max({2 - h, cls.p - 1, cls.q, 1}), "H(p,q): n >= max{2-h, p-1, q, 1}",
                   kv({{"n", n}, {"h", h}, {"p", cls.p}, {"q", cls.q}}));
        ck.require(p == cls.p && q == cls.q && r == cls.q, "H(p,q): ranks p, q and r = q",
                   kv({{"p", p}, {"q", q}, {"r", r}}));
        ck.require(h < 2 || (cls.p == 0 && cls.q == 0), "h = 2 implies H(0,0)", kv({{"h", h}}));
        break;
    default: break;
    }

    // either l >= q+2 and n >= p-tau, or l = q+1 and n = p-1-tau
    const int tau = cls.kind == ClassKind::T ? 1 : 0;
    const bool case_a = l >= q + 2 && n >= p - tau;
    const bool case_b = l == q + 1 && n == p - 1 - tau;
    ck.require(case_a || case_b, "l >= q+2 and n >= p-tau, or l = q+1 and n = p-1-tau",
               kv({{"l", l}, {"n", n}, {"p", p}, {"q", q}, {"tau", tau}}));

    // chain of lower bounds
    CorReport cr;
    cr.l_eq_q_plus_1 = l == q + 1;
    cr.l_eq_p_and_n_eq_q = l == p && n == q;
    cr.h_with_n_eq_p_minus_1 = cls.kind == ClassKind::H && n == p - 1;
    ck.require(cr.l_eq_q_plus_1 == cr.l_eq_p_and_n_eq_q && cr.l_eq_p_and_n_eq_q == cr.h_with_n_eq_p_minus_1,
               "l = q+1 iff (l = p and n = q) iff (H(p,q) and n = p-1)",
               kv({{"l", l}, {"n", n}, {"p", p}, {"q", q}}));

    if (l == 2) {
        if (h == 0) {
            ck.require(false, "l = 2, h = 0 implies C(3)", kv({{"l", l}, {"h", h}}));
        } else if (h == 1) {
            bool listed = (is_h(cls, 2, 1) && n == 1) || ((is_h(cls, 0, 0) || is_h(cls, 1, 0)) && n >= 1) ||
                          ((is_h(cls, 2, 0) || cls.kind == ClassKind::T) && n >= 2);
            ck.require(listed, "l = 2, h = 1: H(2,1) n=1, H(0,0) or H(1,0) n>=1, H(2,0) or T n>=2",
                       kv({{"l", l}, {"n", n}}));
        } else {
            ck.require(is_h(cls, 0, 0) && n >= 1, "l = 2, h = 2: H(0,0) with n >= 1", kv({{"n", n}}));
        }
    }
    if (l == 3 && h == 0) {
        bool listed = (is_h(cls, 3, 2) && n == 2) || (cls.kind == ClassKind::T && n >= 3 && n % 2 == 1) ||
                      (is_h(cls, 3, 0) && n >= 4 && n % 2 == 0);
        ck.require(listed, "l = 3, h = 0: H(3,2) n=2, T odd n>=3, H(3,0) even n>=4", kv({{"n", n}}));
    }
    if (l >= 4 && h == 0 && n == 2 && p > 0) {
        bool listed = (cls.kind == ClassKind::B && l % 2 == 0) || (is_h(cls, 1, 2) && l % 2 == 1);
        ck.require(listed, "l >= 4, h = 0, n = 2, p > 0: B with even l or H(1,2) with odd l",
                   kv({{"l", l}, {"p", p}}));
    }
    return v;
}

std::pair<LaurentPoly, LaurentPoly> fg_polys(const ClassId& cls, const RingInvariants& inv, bool force) {
    if (!force) {
        auto v = admissible(cls, inv);
        if (!v.ok) {
            std::string msg = cls.name() + " inadmissible:";
            for (const auto& x : v.violations) msg += " [" + x.constraint + ": " + x.witness + "]";
            throw InadmissibleInvariants(msg);
        }
    }
    const long l = inv.l, n = inv.n;
    auto P = [](std::vector<long> c) { return LaurentPoly::from_coeffs(c); };
    switch (cls.kind) {
    case ClassKind::C: {
        if (cls.c == 0) return {LaurentPoly(1), LaurentPoly(1)};
        LaurentPoly g = P({1, -1}).pow(static_cast<unsigned>(cls.c)) * P({1, 1}).pow(static_cast<unsigned>(cls.c - 1));
        return {g, g};
    }
    case ClassKind::S: return {P({l, 1, -1}), P({1, -1, -l})};
    case ClassKind::T: return {P({n, l, -2, -1, 1}), P({1, -1, -l, -(n - 3), 0, -1})};
    case ClassKind::B: return {P({n, l - 2, -1, 0, 1}), P({1, -1, -l, -(n - 1), 1})};
    case ClassKind::G: {
        const long r = cls.r;
        return {P({n, l - r, -(r - 1), -1, 1}), P({1, -1, -l, -n, 1})};
    }
    case ClassKind::H: {
        const long p = cls.p, q = cls.q;
        if (p + q == 0) return {P({n, l, 1, -1}), P({1, -1, -l, -n})};
        return {P({n, l - q, -p, -1, 1}), P({1, -1, -l, -(n - p), q})};
    }
    }
    throw InvalidInput("unknown class");
}

RationalSeries bass_series(const ClassId& cls, const RingInvariants& inv, bool force) {
    auto [f, g] = fg_polys(cls, inv, force);
    if (cls.kind == ClassKind::C) return RationalSeries(LaurentPoly::t(inv.d));  // f = g
    return RationalSeries(f.shifted(inv.d), g);
}

RationalSeries poincare_series(const ClassId& cls, const RingInvariants& inv, bool force) {
    auto [f, g] = fg_polys(cls, inv, force);
    const LaurentPoly one_plus_t = LaurentPoly::from_coeffs(std::vector<long>{1, 1});
    if (cls.kind == ClassKind::C) {
        // (1+t)^{e-1}/((1-t)^c (1+t)^{c-1}), written without negative powers
        LaurentPoly num = one_plus_t.pow(static_cast<unsigned>(std::max(inv.e - cls.c, 0)));
        LaurentPoly den = LaurentPoly::from_coeffs(std::vector<long>{1, -1}).pow(static_cast<unsigned>(cls.c));
        if (inv.e < cls.c) den *= one_plus_t.pow(static_cast<unsigned>(cls.c - inv.e));
        return RationalSeries(num, den);
    }
    if (inv.e < 1) throw InvalidInput("poincare_series: e must be positive");
    return RationalSeries(one_plus_t.pow(static_cast<unsigned>(inv.e - 1)), g);
}

RationalSeries lift_poincare(const RationalSeries& pak, int e) {
    if (e < 0) throw InvalidInput("lift_poincare: e < 0");
    return pak * RationalSeries(LaurentPoly::from_coeffs(std::vector<long>{1, 1}).pow(static_cast<unsigned>(e)));
}

RationalSeries lift_bass(const RationalSeries& ia, int e) { return ia.shifted(e); }

CorReport cor_class_report(const RingInvariants& inv, const ClassId& cls) {
    if (inv.c != 3 || cls.kind == ClassKind::C || cls.kind == ClassKind::S)
        throw PreconditionViolation("cor_class_report needs c = 3 and a class other than C(3)");
    CorReport cr;
    cr.l_eq_q_plus_1 = inv.l == inv.q + 1;
    cr.l_eq_p_and_n_eq_q = inv.l == inv.p && inv.n == inv.q;
    cr.h_with_n_eq_p_minus_1 = cls.kind == ClassKind::H && inv.n == inv.p - 1;
    int holding = cr.l_eq_q_plus_1 + cr.l_eq_p_and_n_eq_q + cr.h_with_n_eq_p_minus_1;
    if (holding == 1 || holding == 2)
        throw EquivalenceViolation("conditions (i), (ii), (iii) disagree for " + cls.name() + " with l=" +
                                   std::to_string(inv.l) + ", n=" + std::to_string(inv.n) +
                                   ", p=" + std::to_string(inv.p) + ", q=" + std::to_string(inv.q));
    return cr;
}

std::vector<GridEntry> admissible_grid(int lmax, int nmax, int rmax, int pqmax, bool include_gorenstein) {
    std::vector<GridEntry> out;
    auto consider = [&](const ClassId& cls, int h, int l, int n) {
        int c = cls.codepth();
        RingInvariants inv = class_invariants(cls, c, 0, h, l, n);
        auto v = admissible(cls, inv);
        if (v.ok && (include_gorenstein || !v.gorenstein)) out.push_back({cls, inv});
    };
    for (int h = 0; h <= 2; ++h)
        for (int l = 1; l <= lmax; ++l) {
            consider(ClassId::s(), h, l, 0);
            for (int n = 1; n <= nmax; ++n) {
                consider(ClassId::t(), h, l, n);
                consider(ClassId::b(), h, l, n);
                for (int r = 2; r <= std::max(rmax, include_gorenstein ? lmax + 1 : 0); ++r)
                    if (r <= rmax || (n == 1 && r == l + 1)) consider(ClassId::g(r), h, l, n);
                for (int p = 0; p <= pqmax; ++p)
                    for (int q = 0; q <= pqmax; ++q) consider(ClassId::h(p, q), h, l, n);
            }
        }
    return out;
}

} // namespace codepth
