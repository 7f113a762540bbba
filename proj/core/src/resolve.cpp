#include "codepth/resolve.hpp"

#include "codepth/error.hpp"
#include "engine.hpp"

#include <algorithm>
#include <map>

namespace codepth {

BigInt BettiTable::total(int i) const {
    BigInt s = 0;
    for (const auto& e : entries)
        if (e.i == i) s += e.rank;
    return s;
}

bool BettiTable::total_exact(int i) const {
    for (const auto& e : entries)
        if (e.i == i && !e.exact) return false;
    return std::find(flags.begin(), flags.end(), "row " + std::to_string(i) + " possibly truncated") == flags.end();
}

std::vector<BigInt> BettiTable::totals(int imax) const {
    std::vector<BigInt> out;
    for (int i = 0; i <= imax; ++i) out.push_back(total(i));
    return out;
}

namespace {

template <class F>
GradedModule to_graded(const F& f, const GradedAlgebra& B, const engine::Algebra<F>& A, const engine::Module<F>& M) {
    GradedModule G(B, M.lo, M.dims.empty() ? std::vector<int>{0} : M.dims);
    for (int i = 1; i <= A.top(); ++i)
        for (int j = M.lo; i + j <= M.hi(); ++j)
            for (int a = 0; a < A.dim(i); ++a)
                for (int m = 0; m < M.dim(j); ++m)
                    for (const auto& e : M.at(A, i, a, j, m)) G.set(i, a, j, m, static_cast<int>(e.index), f.to_rational(e.value));
    return G;
}

} // namespace

BettiTable dg_resolution(const GradedAlgebra& B, const GradedModule& M, int bound) {
    if (bound < 0) throw PreconditionViolation("dg_resolution: bound must be nonnegative");
    return with_field(B.field(), [&](const auto& f) {
        BettiTable table;
        table.mode = BettiMode::dg;
        auto A = engine::from_graded(f, B);
        auto Mm = engine::from_graded(A, M, bound);
        const int levels = std::max(0, (bound - M.lo()) / 2);
        auto ch = engine::materialize(A, Mm, levels, [&](int m) { return bound - m; });

        std::map<int, BigInt> ranks;
        for (int m = 0; m <= levels; ++m) {
            const auto& L = ch.levels[static_cast<std::size_t>(m)];
            for (int j = L.lo; j < L.lo + static_cast<int>(L.gens.size()); ++j)
                if (L.ngens(j) > 0 && m + j <= bound) ranks[m + j] += L.ngens(j);
            // minimality: no differential entry with a unit coefficient
            for (std::size_t w = 0; w < L.embed.size(); ++w) {
                const int deg = L.lo + static_cast<int>(w);
                for (const auto& v : L.embed[w])
                    for (const auto& e : v)
                        if (L.decode(A, deg, static_cast<int>(e.index)).j == deg)
                            throw InternalInconsistency("dg_resolution: differential not minimal in degree " + std::to_string(deg));
            }
        }
        // Euler: sum_m (-1)^m dim (B⊗V_m)_w = dim M_w wherever every level is complete
        for (int w = M.lo(); 2 * w <= bound + M.lo(); ++w) {
            long chi = 0;
            for (int m = 0; m <= levels && m <= w - M.lo(); ++m) {
                const auto& L = ch.levels[static_cast<std::size_t>(m)];
                long d = L.free_dim(A, w);
                chi += (m % 2 == 0) ? d : -d;
            }
            if (chi != M.dim(w))
                throw InternalInconsistency("dg_resolution: Euler characteristic fails in internal degree " + std::to_string(w));
        }
        for (const auto& [i, r] : ranks)
            if (r != 0) table.entries.push_back({i, 0, r, true});
        return table;
    });
}

GradedModule first_syzygy(const GradedModule& M) {
    const auto& B = M.algebra();
    return with_field(B.field(), [&](const auto& f) {
        auto A = engine::from_graded(f, B);
        auto Mm = engine::from_graded(A, M, M.hi());
        auto S = engine::syzygy(A, Mm, M.hi() + A.top());
        return to_graded(f, B, A, S.omega);
    });
}

struct DgOracle::Impl {
    GradedAlgebra B;
    explicit Impl(const GradedAlgebra& b) : B(b) {}
    virtual ~Impl() = default;
    virtual SeriesWindow poincare(const GradedModule& M, int N) = 0;
    virtual SeriesWindow residue(int N) = 0;
    virtual std::size_t cached() const = 0;
};

namespace {

template <class F>
struct OracleImpl : DgOracle::Impl {
    engine::Splitter<F> sp;
    OracleImpl(const F& f, const GradedAlgebra& b) : Impl(b), sp(engine::from_graded(f, b)) {}

    SeriesWindow poincare(const GradedModule& M, int N) override {
        auto Mm = engine::from_graded(sp.algebra(), M, N);
        return sp.poincare(Mm, N);
    }
    SeriesWindow residue(int N) override {
        SeriesWindow w;
        w.c = sp.residue_series(N);
        return w;
    }
    std::size_t cached() const override { return sp.memo_size(); }
};

} // namespace

DgOracle::DgOracle(const GradedAlgebra& B) {
    impl_ = with_field(B.field(), [&](const auto& f) -> std::unique_ptr<Impl> {
        using F = std::decay_t<decltype(f)>;
        return std::make_unique<OracleImpl<F>>(f, B);
    });
}

DgOracle::~DgOracle() = default;
DgOracle::DgOracle(DgOracle&&) noexcept = default;
DgOracle& DgOracle::operator=(DgOracle&&) noexcept = default;

const GradedAlgebra& DgOracle::algebra() const { return impl_->B; }

SeriesWindow DgOracle::poincare(const GradedModule& M, int N) {
    if (!(M.algebra() == impl_->B)) throw InvalidInput("poincare: module over a different algebra");
    return impl_->poincare(M, N);
}

SeriesWindow DgOracle::residue(int N) { return impl_->residue(N); }

SeriesWindow DgOracle::bass(const GradedModule& N, int hi) { return poincare(dual(N, 0), hi); }

SeriesWindow DgOracle::bass(int hi) {
    auto w = bass(regular_module(impl_->B), hi);
    // the window always starts at -top
    const int lo = -impl_->B.top();
    while (w.lo < lo && !w.c.empty()) {
        if (w.c.front() != 0) throw InternalInconsistency("bass: nonzero coefficient below -top");
        w.c.erase(w.c.begin());
        ++w.lo;
    }
    while (w.lo > lo) {
        w.c.insert(w.c.begin(), BigInt(0));
        --w.lo;
    }
    return w;
}

std::size_t DgOracle::cached_modules() const { return impl_->cached(); }

SeriesWindow poincare_oracle(const GradedAlgebra& B, const GradedModule& M, int N) { return DgOracle(B).poincare(M, N); }

SeriesWindow poincare_oracle(const GradedAlgebra& B, int N) { return DgOracle(B).residue(N); }

SeriesWindow bass_oracle(const GradedAlgebra& B, int N) { return DgOracle(B).bass(N); }

SeriesWindow ext_oracle(const GradedAlgebra& B, const GradedModule& N, int lo, int hi) {
    if (lo > hi) throw PreconditionViolation("ext_oracle: empty window");
    return with_field(B.field(), [&](const auto& f) {
        auto A = engine::from_graded(f, B);
        auto Nm = engine::from_graded(A, N, N.hi());
        auto k = engine::from_graded(A, residue_field(B), 0);
        // i = m - delta; a cochain slot N_{deg g + delta} needs deg g >= m
        const int mmax = std::max(0, (N.hi() + hi) / 2);
        auto ch = engine::materialize(A, k, mmax + 1, [&](int m) { return N.hi() + hi - m + 1; });
        SeriesWindow w;
        w.lo = lo;
        w.c.assign(static_cast<std::size_t>(hi - lo + 1), 0);
        for (int m = 0; m <= mmax; ++m)
            for (int delta = m - hi; delta <= m - lo; ++delta) {
                long d = engine::ext_dim(A, ch, Nm, m, delta);
                if (d != 0) w.c[static_cast<std::size_t>(m - delta - lo)] += d;
            }
        return w;
    });
}

} // namespace codepth
