#pragma once

#include "codepth/classtable.hpp"
#include "codepth/field.hpp"
#include "codepth/powser.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace codepth {

// Finite-dimensional graded-commutative algebra with A_0 = k, given by
// structure constants on a fixed ordered basis of each A_i.
class GradedAlgebra {
public:
    GradedAlgebra() : GradedAlgebra(FieldSpec{}, {1}) {}
    GradedAlgebra(FieldSpec field, std::vector<int> dims);

    const FieldSpec& field() const { return field_; }
    const std::vector<int>& dims() const { return dims_; }
    int top() const;  // highest degree with A_i != 0
    int dim(int i) const { return i < 0 || i >= static_cast<int>(dims_.size()) ? 0 : dims_[static_cast<std::size_t>(i)]; }
    int total_dim() const;
    int max_degree() const { return static_cast<int>(dims_.size()) - 1; }

    // Coefficient of basis c of A_{i+j} in (basis a of A_i)(basis b of A_j).
    const Rational& coeff(int i, int a, int j, int b, int c) const;
    void set(int i, int a, int j, int b, int c, const Rational& value);
    std::vector<Rational> product(int i, int a, int j, int b) const;

    friend bool operator==(const GradedAlgebra&, const GradedAlgebra&) = default;

private:
    std::size_t block(int i, int j) const { return static_cast<std::size_t>(i) * dims_.size() + static_cast<std::size_t>(j); }

    FieldSpec field_;
    std::vector<int> dims_;
    std::vector<std::vector<Rational>> blocks_;
};

// Graded left module over a GradedAlgebra; degrees lo .. lo+dims.size()-1.
class GradedModule {
public:
    GradedModule() = default;
    GradedModule(GradedAlgebra algebra, int lo, std::vector<int> dims);

    const GradedAlgebra& algebra() const { return algebra_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
    int dim(int j) const {
        int k = j - lo_;
        return k < 0 || k >= static_cast<int>(dims_.size()) ? 0 : dims_[static_cast<std::size_t>(k)];
    }
    const std::vector<int>& dims() const { return dims_; }
    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }

    // Coefficient of basis k of M_{i+j} in (basis a of A_i)(basis m of M_j).
    const Rational& coeff(int i, int a, int j, int m, int k) const;
    void set(int i, int a, int j, int m, int k, const Rational& value);
    std::vector<Rational> act(int i, int a, int j, int m) const;

    friend bool operator==(const GradedModule&, const GradedModule&) = default;

private:
    std::size_t block(int i, int j) const {
        return static_cast<std::size_t>(i) * dims_.size() + static_cast<std::size_t>(j - lo_);
    }

    GradedAlgebra algebra_;
    int lo_ = 0;
    std::vector<int> dims_;
    std::vector<std::vector<Rational>> blocks_;
};

struct MultInvariants {
    int l = 0, m = 0, n = 0, p = 0, q = 0, r = 0;
    bool beyond_degree_3 = false;  // A_i != 0 for some i > 3; only degrees 1..3 were used

    friend bool operator==(const MultInvariants& a, const MultInvariants& b) {
        return a.l == b.l && a.m == b.m && a.n == b.n && a.p == b.p && a.q == b.q && a.r == b.r;
    }
};

struct DualityResult {
    bool holds = false;
    int degree = -1;
};

// Constructions
GradedAlgebra ground_field(const FieldSpec& f);
GradedAlgebra exterior(const FieldSpec& f, const std::vector<int>& degrees);
GradedAlgebra trivial_ext(const GradedAlgebra& C, const GradedModule& W);
GradedAlgebra tensor(const GradedAlgebra& C, const GradedAlgebra& D);
GradedAlgebra truncate(const GradedAlgebra& E, int s);

GradedModule regular_module(const GradedAlgebra& A);
GradedModule trivial_module(const GradedAlgebra& A, int lo, const std::vector<int>& dims);
GradedModule residue_field(const GradedAlgebra& A);
GradedModule augmentation_ideal(const GradedAlgebra& A);
GradedModule suspend(const GradedModule& M, int s);
GradedModule dual(const GradedModule& M, int s);
GradedModule module_truncate(const GradedModule& M, int s);  // M / M_{>=s}
GradedModule module_from(const GradedModule& M, int s);      // M_{>=s}
GradedModule direct_sum(const GradedModule& M, const GradedModule& N);
// T over C, U over D, result over tensor(C, D)
GradedModule module_tensor(const GradedModule& T, const GradedModule& U);

// B part of the class row (the algebra before adjoining the trivial W).
GradedAlgebra table_b_algebra(const ClassId& cls, const FieldSpec& f);
// The class row's algebra B ⋉ W with W trivial in degrees 1..3.
GradedAlgebra table_algebra(const ClassId& cls, const RingInvariants& inv, const FieldSpec& f);
// dims of W solved from the targets; throws NegativeWDimension
std::vector<int> table_w_dims(const ClassId& cls, const RingInvariants& inv, const GradedAlgebra& B);

// Change of basis: new basis element a of A_i is sum_b mats[i][a][b] * old b.
// mats[0] must be the 1x1 identity.
GradedAlgebra change_basis(const GradedAlgebra& A, const std::vector<std::vector<std::vector<Rational>>>& mats);
GradedAlgebra random_basis_change(const GradedAlgebra& A, std::uint64_t seed);

LaurentPoly hilbert(const GradedAlgebra& A);
LaurentPoly hilbert(const GradedModule& M);

MultInvariants mult_invariants(const GradedAlgebra& A);
DualityResult poincare_duality(const GradedAlgebra& A);
bool products_of_positives_vanish(const GradedAlgebra& A);

// Empty when all structure-constant axioms hold; otherwise one message per failure.
std::vector<std::string> axiom_failures(const GradedAlgebra& A);
std::vector<std::string> module_axiom_failures(const GradedModule& M);

struct StructureConstant {
    int i, a, j, b, k;
    Rational value;
};
std::vector<StructureConstant> dump(const GradedAlgebra& A);

} // namespace codepth
