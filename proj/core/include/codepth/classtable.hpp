#pragma once

#include "codepth/powser.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace codepth {

enum class ClassKind { C, S, T, B, G, H };

// C(c) | S | T | B | G(r) | H(p,q)
struct ClassId {
    ClassKind kind = ClassKind::C;
    int c = 0;  // C only
    int r = 0;  // G only
    int p = 0;  // H only
    int q = 0;  // H only

    static ClassId ci(int c) { return {ClassKind::C, c, 0, 0, 0}; }
    static ClassId s() { return {ClassKind::S, 0, 0, 0, 0}; }
    static ClassId t() { return {ClassKind::T, 0, 0, 0, 0}; }
    static ClassId b() { return {ClassKind::B, 0, 0, 0, 0}; }
    static ClassId g(int r) { return {ClassKind::G, 0, r, 0, 0}; }
    static ClassId h(int p, int q) { return {ClassKind::H, 0, 0, p, q}; }

    // Codepth of the class: c for C(c), 2 for S, 3 otherwise.
    int codepth() const;
    std::string name() const;
    static std::optional<ClassId> parse(const std::string& s);

    friend bool operator==(const ClassId&, const ClassId&) = default;
};

struct RingInvariants {
    int e = 0, d = 0, c = 0, h = 0;
    int l = 0, m = 0, n = 0, p = 0, q = 0, r = 0;

    friend bool operator==(const RingInvariants&, const RingInvariants&) = default;
};

// Fills c = e - d and the (m,p,q,r) columns that the class row determines.
RingInvariants class_invariants(const ClassId& cls, int e, int d, int h, int l, int n);

struct Violation {
    std::string constraint;
    std::string witness;
};

struct AdmissibilityVerdict {
    bool ok = true;
    bool gorenstein = false;  // admissible as the Gorenstein member of G(r) or as C(c)
    std::vector<Violation> violations;
};

AdmissibilityVerdict admissible(const ClassId& cls, const RingInvariants& inv);

std::pair<LaurentPoly, LaurentPoly> fg_polys(const ClassId& cls, const RingInvariants& inv, bool force = false);

// t^d f/g
RationalSeries bass_series(const ClassId& cls, const RingInvariants& inv, bool force = false);
// (1+t)^{e-1}/g
RationalSeries poincare_series(const ClassId& cls, const RingInvariants& inv, bool force = false);

RationalSeries lift_poincare(const RationalSeries& pak, int e);
RationalSeries lift_bass(const RationalSeries& ia, int e);

struct CorReport {
    bool l_eq_q_plus_1 = false;      // (i)
    bool l_eq_p_and_n_eq_q = false;  // (ii)
    bool h_with_n_eq_p_minus_1 = false;  // (iii)
};

CorReport cor_class_report(const RingInvariants& inv, const ClassId& cls);

struct GridEntry {
    ClassId cls;
    RingInvariants inv;
};

// Every admissible non-complete-intersection tuple with e = c, d = 0,
// 1 <= l <= lmax, n <= nmax, r <= rmax, p,q <= pqmax and any h. The
// Gorenstein members of G(r) are included only on request.
std::vector<GridEntry> admissible_grid(int lmax = 5, int nmax = 5, int rmax = 4, int pqmax = 4,
                                       bool include_gorenstein = false);

} // namespace codepth
