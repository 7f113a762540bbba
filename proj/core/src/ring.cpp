#include "codepth/ring.hpp"

#include "codepth/error.hpp"
#include "engine.hpp"
#include "ring_impl.hpp"

#include <algorithm>
#include <map>

namespace codepth {

int total_degree(const std::vector<int>& exps) {
    int d = 0;
    for (int x : exps) d += x;
    return d;
}

void RingPresentation::validate() const {
    if (e < 0) throw InvalidInput("ring: negative number of variables");
    for (std::size_t g = 0; g < gens.size(); ++g) {
        const auto& p = gens[g];
        const std::string where = "generator " + std::to_string(g + 1);
        if (p.empty()) throw InvalidInput(where + " is zero");
        int deg = -1;
        for (const auto& t : p) {
            if (static_cast<int>(t.exps.size()) != e) throw InvalidInput(where + ": exponent vector length differs from vars");
            for (int x : t.exps)
                if (x < 0) throw InvalidInput(where + ": negative exponent");
            if (sgn(t.coeff) == 0) throw InvalidInput(where + ": zero coefficient");
            const int d = total_degree(t.exps);
            if (deg >= 0 && d != deg) throw InvalidInput(where + " is not homogeneous");
            deg = d;
        }
        if (deg < 2) throw InvalidInput(where + " has degree < 2");
        if (!field.is_rational())
            for (const auto& t : p)
                if (t.coeff.get_den() % static_cast<unsigned long>(field.characteristic) == 0)
                    throw InvalidInput(where + ": coefficient denominator vanishes in the field");
    }
}

bool RingPresentation::is_monomial() const {
    return std::all_of(gens.begin(), gens.end(), [](const Polynomial& p) { return p.size() == 1; });
}

int RingPresentation::max_gen_degree() const {
    int d = 0;
    for (const auto& p : gens)
        if (!p.empty()) d = std::max(d, total_degree(p.front().exps));
    return d;
}

int RingPresentation::sum_gen_degrees() const {
    int d = 0;
    for (const auto& p : gens)
        if (!p.empty()) d += total_degree(p.front().exps);
    return d;
}

std::vector<std::vector<int>> degree_basis(const RingPresentation& R, int j) {
    if (j < 0) throw PreconditionViolation("degree_basis: negative degree");
    return with_field(R.field, [&](const auto& f) {
        auto rd = ringimpl::build_ring(f, R, j);
        return rd.basis[static_cast<std::size_t>(j)];
    });
}

std::vector<long> hilbert_function(const RingPresentation& R, int D) {
    return with_field(R.field, [&](const auto& f) {
        auto rd = ringimpl::build_ring(f, R, D);
        std::vector<long> h;
        for (int j = 0; j <= D; ++j) h.push_back(rd.dim(j));
        return h;
    });
}

namespace {

// max |S| such that no monomial of the list is supported inside S
int monomial_dimension(int e, const std::vector<std::vector<int>>& monos) {
    int best = 0;
    for (unsigned long S = 0; S < (1ul << e); ++S) {
        bool ok = true;
        for (const auto& m : monos) {
            bool inside = true;
            for (int k = 0; k < e; ++k)
                if (m[static_cast<std::size_t>(k)] > 0 && !(S >> k & 1ul)) inside = false;
            if (inside) {
                ok = false;
                break;
            }
        }
        if (ok) best = std::max(best, __builtin_popcountl(S));
    }
    return best;
}

} // namespace

DimensionResult krull_dimension(const RingPresentation& R, int D) {
    R.validate();
    if (R.e > 20) throw PreconditionViolation("krull_dimension: too many variables");
    if (R.is_monomial()) {
        std::vector<std::vector<int>> monos;
        for (const auto& g : R.gens) monos.push_back(g.front().exps);
        return {monomial_dimension(R.e, monos), false};
    }
    return with_field(R.field, [&](const auto& f) -> DimensionResult {
        auto rd = ringimpl::build_ring(f, R, D);
        if (rd.artinian()) return {0, false};
        // the initial ideal has the same Hilbert function; use its generators seen so far
        std::vector<std::vector<int>> lead;
        std::vector<std::vector<int>> all;
        for (int j = 0; j <= D; ++j) {
            ringimpl::monomials(R.e, j, all);
            for (const auto& m : all)
                if (!rd.index[static_cast<std::size_t>(j)].count(m)) lead.push_back(m);
        }
        return {monomial_dimension(R.e, lead), true};
    });
}

namespace {

// bound on internal degrees of the i-th module in the minimal resolution of k
int rate_bound(int i, int G) { return i == 0 ? 0 : 1 + (i - 1) * std::max(1, G - 1); }

template <class F>
engine::Module<F> residue_module(const engine::Algebra<F>& A) {
    auto k = engine::Module<F>::empty(A, 0, {1});
    k.graded = true;
    return k;
}

template <class F>
engine::Module<F> regular_module(const engine::Algebra<F>& A) {
    auto N = engine::Module<F>::empty(A, 0, A.dims);
    for (int i = 1; i <= A.top(); ++i)
        for (int j = 0; i + j <= A.top(); ++j)
            for (int a = 0; a < A.dim(i); ++a)
                for (int b = 0; b < A.dim(j); ++b) N.at_mut(A, i, a, j, b) = A.prod(i, a, j, b);
    N.graded = true;
    N.deg = A.deg;
    return N;
}

// Hom_k(R, k), basis dual to the monomial basis, in degrees -top..0
template <class F>
engine::Module<F> dual_module(const engine::Algebra<F>& A) {
    const int T = A.top();
    std::vector<int> dims;
    for (int j = -T; j <= 0; ++j) dims.push_back(A.dim(-j));
    auto N = engine::Module<F>::empty(A, -T, dims);
    for (int i = 1; i <= T; ++i)
        for (int j = -T; i + j <= 0; ++j)
            for (int a = 0; a < A.dim(i); ++a)
                for (int m = 0; m < A.dim(-j); ++m) {
                    // (a·m*)(m') = m*(a m') for m' of degree -j-i
                    auto& out = N.at_mut(A, i, a, j, m);
                    for (int mp = 0; mp < A.dim(-j - i); ++mp)
                        for (const auto& e : A.prod(i, a, -j - i, mp))
                            if (static_cast<int>(e.index) == m) out.push_back({static_cast<std::uint32_t>(mp), e.value});
                }
    N.graded = true;
    auto& G = *A.grading;
    for (int j = -T; j <= 0; ++j)
        for (int m = 0; m < A.dim(-j); ++m) N.mdeg_mut(j, m) = G.combine(0, A.mdeg(-j, m), -1);
    return N;
}

} // namespace

BettiTable ring_resolution(const RingPresentation& R, RingTarget target, int imax, int D) {
    if (imax < 0 || D < 0) throw PreconditionViolation("ring_resolution: imax and D must be nonnegative");
    return with_field(R.field, [&](const auto& f) {
        auto rd = ringimpl::build_ring(f, R, D);
        auto A = ringimpl::to_engine(rd, D);
        engine::Module<std::decay_t<decltype(f)>> M;
        if (target == RingTarget::residue_field) {
            M = residue_module(A);
        } else {
            if (!rd.artinian()) throw PreconditionViolation("ring_resolution: the dual module needs an artinian ring within the window");
            M = dual_module(A);
        }
        auto ch = engine::materialize(A, M, imax, [&](int) { return D; });
        BettiTable t;
        t.mode = BettiMode::ring;
        const int maxdeg = R.max_gen_degree();
        const bool certified = rd.monomial || rd.artinian();
        if (!certified) t.flags.push_back("initial ideal degree estimated from the window");
        for (int i = 0; i <= imax; ++i) {
            const auto& L = ch.levels[static_cast<std::size_t>(i)];
            for (int j = L.lo; j < L.lo + static_cast<int>(L.gens.size()); ++j)
                if (L.ngens(j) > 0) t.entries.push_back({i, j, BigInt(L.ngens(j)), j <= D - maxdeg});
            if (!certified && i >= 2) t.flags.push_back("row " + std::to_string(i) + " possibly truncated");
            else if (rate_bound(i, rd.groebner_degree) > D - maxdeg) t.flags.push_back("row " + std::to_string(i) + " possibly truncated");
        }
        return t;
    });
}

BassNumbers bass_ring_oracle(const RingPresentation& R, int imax, int D) {
    if (imax < 0 || D < 0) throw PreconditionViolation("bass_ring_oracle: imax and D must be nonnegative");
    return with_field(R.field, [&](const auto& f) {
        auto rd = ringimpl::build_ring(f, R, D);
        auto A = ringimpl::to_engine(rd, D);
        auto k = residue_module(A);
        auto ch = engine::materialize(A, k, imax + 1, [&](int) { return D; });
        auto N = regular_module(A);
        const int G = rd.groebner_degree;
        const bool certified = rd.monomial || rd.artinian();
        BassNumbers out;
        for (int i = 0; i <= imax; ++i) {
            const auto& L = ch.levels[static_cast<std::size_t>(i)];
            int tmin = D + 1, tmax = -1;
            for (int j = L.lo; j < L.lo + static_cast<int>(L.gens.size()); ++j)
                if (L.ngens(j) > 0) tmin = std::min(tmin, j), tmax = std::max(tmax, j);
            BigInt mu = 0;
            // keep the coboundary into level i+1 complete: j1 + delta <= D for all its generators
            const int next = rate_bound(i + 1, G);
            const int dhi = rd.artinian() ? rd.top - tmin : D - next;
            if (tmax >= 0)
                for (int delta = -tmax; delta <= dhi; ++delta) mu += engine::ext_dim(A, ch, N, i, delta);
            bool exact = certified && next <= D && rd.artinian() && rd.top <= D;
            out.mu.push_back(mu);
            out.exact.push_back(exact);
            if (!exact)
                out.flags.push_back("mu^" + std::to_string(i) + (rd.artinian() ? " possibly truncated" : " window-limited"));
        }
        return out;
    });
}

} // namespace codepth
