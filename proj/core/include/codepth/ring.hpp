#pragma once

#include "codepth/field.hpp"
#include "codepth/powser.hpp"
#include "codepth/resolve.hpp"

#include <string>
#include <vector>

namespace codepth {

struct Term {
    Rational coeff;
    std::vector<int> exps;

    friend bool operator==(const Term&, const Term&) = default;
};

using Polynomial = std::vector<Term>;

int total_degree(const std::vector<int>& exps);

// k[x_1..x_e]/(gens), every variable of degree 1.
struct RingPresentation {
    FieldSpec field;
    int e = 0;
    std::vector<Polynomial> gens;

    // Throws InvalidInput on non-homogeneous generators, degree < 2, wrong
    // exponent lengths or zero generators.
    void validate() const;
    bool is_monomial() const;
    int max_gen_degree() const;
    int sum_gen_degrees() const;

    friend bool operator==(const RingPresentation&, const RingPresentation&) = default;
};

// Exponent vectors of an echelonized monomial basis of R_j (standard
// monomials for the descending-lex order), in descending lex order.
std::vector<std::vector<int>> degree_basis(const RingPresentation& R, int j);

// dim R_j for j = 0..D
std::vector<long> hilbert_function(const RingPresentation& R, int D);

struct DimensionResult {
    int dim = 0;
    bool estimated = false;
};

// Exact for monomial ideals and artinian rings; otherwise read off the
// growth of the Hilbert function up to D.
DimensionResult krull_dimension(const RingPresentation& R, int D);

enum class RingTarget { residue_field, dual_module };

// Minimal graded resolution over R, computed from R_{<=D}. Entry (i, j) is
// marked exact iff j <= D - max generator degree; row i carries the flag
// "row i possibly truncated" when the window cannot bound its generator degrees.
BettiTable ring_resolution(const RingPresentation& R, RingTarget target, int imax, int D);

struct BassNumbers {
    std::vector<BigInt> mu;      // mu^0 .. mu^imax
    std::vector<bool> exact;
    std::vector<std::string> flags;
};

// mu^i = dim Ext^i_R(k, R) from Hom into R of the minimal resolution of k.
BassNumbers bass_ring_oracle(const RingPresentation& R, int imax, int D);

} // namespace codepth
