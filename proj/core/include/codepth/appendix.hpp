#pragma once

#include "codepth/galg.hpp"
#include "codepth/powser.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace codepth {

// Closed-form Poincaré/Bass series for graded algebras with zero differential.
enum class Formula {
    shift,
    dual,
    maximalP,
    kunneth,
    nullP,
    nullI,
    exteriorP,
    exteriorI,
    trivialP,
    null2P,
    null2I,
    syzygyC,
    trivialI,
    truncatedI,
};

inline constexpr std::array<Formula, 14> all_formulas = {
    Formula::shift,   Formula::dual,    Formula::maximalP, Formula::kunneth,  Formula::nullP,
    Formula::nullI,   Formula::exteriorP, Formula::exteriorI, Formula::trivialP, Formula::null2P,
    Formula::null2I,  Formula::syzygyC, Formula::trivialI, Formula::truncatedI,
};

std::string to_string(Formula f);
std::optional<Formula> parse_formula(const std::string& s);

// Ingredients for appendix_series. Which fields are read depends on the formula:
//
//   shift      P_N (or I_N with bass), s          -> P(Σ^s N)   (I(Σ^s N))
//   dual       I_N (or P_N with bass)             -> P(N*)      (I(N*))
//   maximalP   P_M, module M                      -> P(N), N the first syzygy of M
//   kunneth    P_T, P_U (or I_T, I_U with bass)   -> P(T⊗U)     (I(T⊗U))
//   nullP      algebra B = k⋉W                    -> P_k
//   nullI      algebra B = k⋉W                    -> I_B
//   exteriorP  exterior degrees                   -> P_k
//   exteriorI  algebra B with Poincaré duality    -> I_B
//   trivialP   P^C_k, P^C_W                       -> P^B_k, B = C⋉W
//   null2P     H_W, s                             -> P^B_k, B = C⋉Σ^s C*, C = k⋉W
//   null2I     H_W, s                             -> I_B
//   syzygyC    P^B_k, I^B_{B+} (algebra B)        -> I_B
//   trivialI   P^B_k, P^C_k, I_C, H_W (C, W)      -> I_B
//   truncatedI P^B_k, s (E)                       -> I_B, B = E/E_{>=s}
//
// When an algebra or module is supplied its hypotheses are checked.
struct AppendixInputs {
    bool bass = false;
    int s = 0;
    std::vector<int> degrees;
    std::optional<LaurentPoly> h_w;

    std::optional<RationalSeries> p_n, i_n, p_m, p_t, p_u, i_t, i_u;
    std::optional<RationalSeries> p_bk, p_ck, p_cw, i_c, i_bplus;

    const GradedAlgebra* B = nullptr;
    const GradedAlgebra* C = nullptr;
    const GradedAlgebra* E = nullptr;
    const GradedModule* M = nullptr;
    const GradedModule* W = nullptr;
};

RationalSeries appendix_series(Formula f, const AppendixInputs& in);

// Hilbert series of M / B_+M.
LaurentPoly minimal_generators(const GradedModule& M);

} // namespace codepth
