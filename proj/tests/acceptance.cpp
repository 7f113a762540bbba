// One line per acceptance criterion; exit status 1 if any fails.

#include "cli.hpp"

#include "codepth/classtable.hpp"
#include "codepth/error.hpp"
#include "codepth/growth.hpp"
#include "codepth/koszul.hpp"
#include "codepth/resolve.hpp"
#include "codepth/ring.hpp"
#include "codepth/verify.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <tuple>

using namespace codepth;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec P = FieldSpec::prime(10007);

struct Outcome {
    bool pass = true;
    std::string detail;
};

// collects the first few failures
class Tally {
public:
    void check(bool ok, const std::string& what) {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (failures_ <= 3) notes_ << (failures_ > 1 ? "; " : "") << what;
    }
    Outcome outcome(const std::string& summary) const {
        std::ostringstream os;
        os << summary << ", " << checks_ << " checks";
        if (failures_) os << ", " << failures_ << " failed: " << notes_.str();
        return {failures_ == 0, os.str()};
    }

private:
    int checks_ = 0, failures_ = 0;
    std::ostringstream notes_;
};

std::string tuple_name(const ClassId& cls, const RingInvariants& inv) {
    return cls.name() + " h=" + std::to_string(inv.h) + " l=" + std::to_string(inv.l) + " n=" + std::to_string(inv.n);
}

const RingPresentation& ring(const std::string& name) { return cli::find_corpus(name)->ring; }

RingPresentation over(RingPresentation R, const FieldSpec& f) {
    R.field = f;
    return R;
}

std::vector<GridEntry> full_grid() {
    auto grid = admissible_grid(5, 5, 4, 4, true);
    for (int c = 0; c <= 3; ++c) grid.push_back({ClassId::ci(c), class_invariants(ClassId::ci(c), c, 0, 0, 0, 0)});
    return grid;
}

Outcome table_vs_oracle() {
    Tally t;
    const LaurentPoly one_plus_t = LaurentPoly::from_coeffs(std::vector<long>{1, 1});
    auto grid = full_grid();
    for (const auto& e : grid) {
        auto A = table_algebra(e.cls, e.inv, P);
        DgOracle o(A);
        auto [f, g] = fg_polys(e.cls, e.inv);
        const int c = e.inv.c;
        RationalSeries pk(LaurentPoly(1), one_plus_t * g);
        RationalSeries ia = RationalSeries(f.shifted(-c) * one_plus_t) * pk;
        if (e.cls.kind == ClassKind::C) {
            // (1+t) g = (1-t^2)^c, also for c = 0 where g itself is not a polynomial
            pk = RationalSeries(LaurentPoly(1), LaurentPoly::from_coeffs(std::vector<long>{1, 0, -1}).pow(static_cast<unsigned>(c)));
            ia = RationalSeries(LaurentPoly::t(-c));
        }
        t.check(o.residue(10) == window(pk, 0, 10), "P_k " + tuple_name(e.cls, e.inv));
        t.check(o.bass(10) == window(ia, -c, 10), "I_A " + tuple_name(e.cls, e.inv));
    }
    return t.outcome(std::to_string(grid.size()) + " tuples, P_k to t^10, I_A on [-c,10]");
}

Outcome corpus_sextuples() {
    Tally t;
    const std::vector<std::pair<std::string, std::array<int, 6>>> want = {
        {"squares3", {0, 2, 1, 3, 1, 3}}, {"xy2z2", {0, 3, 2, 3, 2, 2}},  {"xy3z2", {0, 4, 3, 4, 3, 3}},
        {"xxy1z2", {1, 2, 1, 2, 1, 1}},   {"xxy2z2", {1, 3, 2, 3, 2, 2}}, {"wxwy", {1, 1, 0, 0, 0, 0}},
    };
    const std::vector<std::string> classes = {"C(3)", "H(3,2)", "H(4,3)", "H(2,1)", "H(3,2)", "S"};
    for (std::size_t i = 0; i < want.size(); ++i) {
        auto rep = classify(ring(want[i].first));
        t.check(rep.cls.name() == classes[i], want[i].first + " class " + rep.cls.name());
        t.check(rep.sextuple == want[i].second, want[i].first + " sextuple");
    }
    return t.outcome("6 presentations");
}

Outcome end_to_end_bass() {
    Tally t;
    const auto& wxwy = ring("wxwy");
    auto b = bass_ring_oracle(wxwy, 6, 16);
    t.check(b.mu == std::vector<BigInt>{0, 1, 2, 2, 4, 6, 10}, "wxwy mu^0..mu^6");
    auto A = koszul_homology(wxwy).algebra;
    auto ia = reconstruct(bass_oracle(A, 24), 8);
    t.check(ia.has_value(), "wxwy I_A reconstruction");
    if (ia) {
        auto inv = class_invariants(ClassId::s(), 3, 1, 1, 1, 0);
        t.check(lift_bass(*ia, 3) == bass_series(ClassId::s(), inv), "wxwy lift_bass");
    }
    const auto& h21 = ring("h21");
    auto dh = depth_and_h(h21, 4, 16);
    auto bh = bass_ring_oracle(h21, 4, 16);
    const auto d = static_cast<std::size_t>(dh.d);
    t.check(dh.d == 0, "h21 depth");
    t.check(bh.mu[d + 1] == 2 && bh.mu[d + 2] == 2, "h21 plateau");
    return t.outcome("wxwy mu = 0 1 2 2 4 6 10, h21 mu^1 = mu^2 = " + bh.mu[d + 1].get_str());
}

Outcome appendix_suite() {
    Tally t;
    int fixtures = 0;
    for (const auto& field : {Q, P})
        for (auto f : all_formulas) {
            auto checks = verify_formula(f, field, 8);
            t.check(checks.size() >= 10, to_string(f) + " has fewer than 10 fixtures");
            for (const auto& c : checks) {
                ++fixtures;
                t.check(c.pass && c.oracle.hi() >= 8, to_string(f) + "/" + c.fixture + " over " + field.name());
            }
        }
    // I_B / P_B = 3t^-2 - 3 + t^2 for B = E/E_{>=3}, E exterior on three degree-one generators
    auto E = exterior(Q, {1, 1, 1});
    auto B = truncate(E, 3);
    auto pb = reconstruct(poincare_oracle(B, 20), 8);
    t.check(pb.has_value(), "P_B reconstruction");
    if (pb) {
        AppendixInputs in;
        in.E = &E;
        in.s = 3;
        in.p_bk = *pb;
        auto ib = appendix_series(Formula::truncatedI, in);
        t.check(ib / *pb == RationalSeries(LaurentPoly::from_coeffs(std::vector<long>{3, 0, -3, 0, 1}, -2)), "checkpoint");
        auto ob = bass_oracle(B, 8);
        t.check(window(ib, ob.lo, ob.hi()).c == ob.c, "checkpoint oracle");
    }
    return t.outcome("14 formulas, " + std::to_string(fixtures) + " fixture runs over Q and F_10007, checkpoint");
}

Outcome growth_grid() {
    Tally t;
    std::set<std::tuple<std::string, int, int>> exceptions;
    auto grid = admissible_grid();
    for (const auto& e : grid) {
        const auto name = tuple_name(e.cls, e.inv);
        try {
            auto rep = growth_verdict(e.cls, e.inv, 12);
            if (rep.exception != ExceptionKind::none) {
                exceptions.insert({e.cls.name(), e.inv.l, e.inv.n});
                t.check(rep.mu[2] == rep.mu[1], name + " plateau");
            }
            t.check(rep.gamma_window > 1, name + " gamma_window " + rep.gamma_window.get_str());
        } catch (const GrowthViolation& ex) {
            t.check(false, name + ": " + ex.what());
        }
    }
    std::set<std::tuple<std::string, int, int>> want = {{"S", 1, 0}, {"H(2,1)", 2, 1}};
    t.check(exceptions == want, "exception set");
    return t.outcome(std::to_string(grid.size()) + " tuples, N = 12, exceptions {S l=1, H(2,1) l=2 n=1}");
}

Outcome structural() {
    Tally t;
    int algebras = 0;
    for (const auto& field : {Q, P}) {
        for (const auto& entry : cli::corpus()) {
            auto R = over(entry.ring, field);
            auto rep = classify(R);
            if (rep.inv.c == 3) {
                t.check(rep.m_eq_l_plus_n, entry.name + " m = l+n");
                t.check(rep.alternating_sum_zero, entry.name + " alternating sum");
            }
            auto A = koszul_homology(R).algebra;
            ++algebras;
            t.check(axiom_failures(A).empty(), entry.name + " axioms");
            auto mi = mult_invariants(A);
            for (std::uint64_t seed = 1; seed <= 5; ++seed) {
                auto A2 = random_basis_change(A, seed);
                t.check(axiom_failures(A2).empty(), entry.name + " axioms after base change");
                t.check(mult_invariants(A2) == mi, entry.name + " invariants after base change");
                t.check(classify(A2, rep.inv).cls == rep.cls, entry.name + " class after base change");
            }
        }
        for (const auto& e : full_grid()) {
            auto A = table_algebra(e.cls, e.inv, field);
            ++algebras;
            t.check(axiom_failures(A).empty(), tuple_name(e.cls, e.inv) + " axioms");
            auto mi = mult_invariants(A);
            if (e.cls.kind != ClassKind::S && e.cls.kind != ClassKind::C) t.check(mi.m == mi.l + mi.n, tuple_name(e.cls, e.inv) + " m = l+n");
            auto base = classify(A, e.inv);
            for (std::uint64_t seed = 1; seed <= 5; ++seed) {
                auto A2 = random_basis_change(A, seed);
                t.check(mult_invariants(A2) == mi, tuple_name(e.cls, e.inv) + " invariants after base change");
                t.check(classify(A2, e.inv).cls == base.cls, tuple_name(e.cls, e.inv) + " class after base change");
            }
        }
    }
    return t.outcome(std::to_string(algebras) + " algebras over Q and F_10007, 5 base changes each");
}

Outcome mode_sentinel() {
    Tally t;
    auto E = exterior(Q, {1});
    auto dg = dg_resolution(E, residue_field(E), 9).totals(9);
    RingPresentation R{Q, 1, {{Term{1, {2}}}}};
    auto ring_mode = ring_resolution(R, RingTarget::residue_field, 9, 14).totals(9);
    for (int i = 0; i <= 9; ++i) {
        t.check(dg[static_cast<std::size_t>(i)] == (i % 2 == 0 ? 1 : 0), "dg rank " + std::to_string(i));
        t.check(ring_mode[static_cast<std::size_t>(i)] == 1, "ring rank " + std::to_string(i));
    }
    return t.outcome("dg 1 0 1 0 ..., ring 1 1 1 ...");
}

Outcome three_routes() {
    Tally t;
    const int N = 12;
    int lemma1 = 0, lemma2 = 0;
    auto grid = admissible_grid();
    for (const auto& e : grid) {
        const auto name = tuple_name(e.cls, e.inv);
        const int l = e.inv.l;
        auto [f, g] = fg_polys(e.cls, e.inv);
        auto diffs = bass_diffs(bass_series(e.cls, e.inv), e.inv.d, N);
        auto dpoly = LaurentPoly::from_coeffs(diffs);

        auto a = coeffs_a(f, g, N);
        t.check(diffs[0] == a[0] + 1 && diffs[1] == a[1] - 1 && diffs[2] == a[2] + (l - 1) * a[0], name + " lemma (1) identities");
        bool a_nonneg = true;
        for (int i = 1; i <= N; ++i) a_nonneg = a_nonneg && a[static_cast<std::size_t>(i)] >= 0;
        if (l >= 1 && a_nonneg) {
            ++lemma1;
            t.check(dominates(dpoly, lemma_a_bound(a, l, N), N), name + " lemma (1) bound");
        }

        for (int s = 0; s <= e.inv.m - e.inv.p; ++s) {
            auto b = coeffs_b(f, s, N, e.inv.m - e.inv.p);
            t.check(diffs[0] == b[0] && diffs[1] == b[1] && diffs[2] == b[2] + (l - 2) * b[0],
                    name + " lemma (2) identities, s=" + std::to_string(s));
            bool b_nonneg = true;
            for (int i = 1; i <= N; ++i) b_nonneg = b_nonneg && b[static_cast<std::size_t>(i)] >= 0;
            if (l >= 2 && b_nonneg) {
                ++lemma2;
                t.check(dominates(dpoly, lemma_b_bound(b, l, N), N), name + " lemma (2) bound, s=" + std::to_string(s));
            }
        }
    }
    return t.outcome(std::to_string(grid.size()) + " tuples, " + std::to_string(lemma1) + " first-lemma bounds, " +
                     std::to_string(lemma2) + " second-lemma bounds");
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 class table vs resolution oracle", table_vs_oracle},
        {"2 sextuple corpus", corpus_sextuples},
        {"3 end-to-end Bass numbers", end_to_end_bass},
        {"4 appendix formulas vs oracle", appendix_suite},
        {"5 growth grid", growth_grid},
        {"6 structural invariants", structural},
        {"7 dg vs ring mode sentinel", mode_sentinel},
        {"8 three-route differences", three_routes},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& ex) {
            o = {false, std::string("exception: ") + ex.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::ostringstream os;
        os.setf(std::ios::fixed);
        os.precision(1);
        os << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << " (" << secs << "s)";
        std::cout << os.str() << std::endl;
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
