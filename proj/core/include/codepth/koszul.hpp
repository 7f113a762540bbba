#pragma once

#include "codepth/classtable.hpp"
#include "codepth/galg.hpp"
#include "codepth/growth.hpp"
#include "codepth/ring.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace codepth {

// 2·(e + sum of generator degrees)
int default_window(const RingPresentation& R);

struct KoszulResult {
    GradedAlgebra algebra;                 // A_i = ⊕_j H_{i,j}, graded by i
    std::vector<std::vector<int>> ranks;   // ranks[i][j] = dim H_{i,j}, j = 0..D
    int D = 0;
    bool stabilized = true;                // no homology in internal degrees D-1, D
    std::vector<std::string> flags;
};

// Koszul homology of R on x_1..x_e with its induced multiplication, from
// internal degrees <= D (D < 0 selects default_window). Throws
// InternalInconsistency when the alternating rank sum fails.
KoszulResult koszul_homology(const RingPresentation& R, int D = -1);

// Discriminates T from H(3,0) when (p,q,r) = (3,0,0).
ClassId t_vs_h30(const GradedAlgebra& A);

struct DepthResult {
    int d = 0;
    int h = 0;
    int dim = 0;
    bool d_exact = true;
    bool dim_estimated = false;
    std::vector<std::string> flags;
};

DepthResult depth_and_h(const RingPresentation& R, int imax, int D);

struct ClassificationReport {
    ClassId cls;
    RingInvariants inv;
    bool gorenstein = false;
    std::array<int, 6> sextuple{};  // (h, l, n, p, q, r)
    bool m_eq_l_plus_n = true;
    bool alternating_sum_zero = true;
    bool stabilized = true;
    ExceptionKind exception = ExceptionKind::none;
    std::vector<std::string> flags;
};

// Decision tree on the multiplicative invariants of A. aux supplies e, d
// and h; without it e = c and d = h = 0 are assumed and flagged.
ClassificationReport classify(const GradedAlgebra& A, const std::optional<RingInvariants>& aux = std::nullopt);

// Koszul homology, depth and dimension, then the decision tree.
ClassificationReport classify(const RingPresentation& R, int D = -1);

} // namespace codepth
