#pragma once

// Degreewise minimal resolutions over a finite-dimensional graded algebra,
// with field arithmetic in F. Used by both the DG oracle and ring mode.
//
// Besides the internal degree, every basis element carries a multidegree in
// the finest grading the structure constants admit. All linear algebra is
// done block by block in that grading.

#include "codepth/error.hpp"
#include "codepth/field.hpp"
#include "codepth/galg.hpp"
#include "codepth/linalg.hpp"
#include "codepth/powser.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

namespace codepth::engine {

// Interned integer vectors; id 0 is the zero vector.
class Grading {
public:
    explicit Grading(int rank = 0) : rank_(rank) { intern(std::vector<int>(static_cast<std::size_t>(rank), 0)); }

    int rank() const { return rank_; }
    int intern(const std::vector<int>& v) {
        auto [it, fresh] = index_.try_emplace(v, static_cast<int>(table_.size()));
        if (fresh) table_.push_back(v);
        return it->second;
    }
    const std::vector<int>& vec(int id) const { return table_[static_cast<std::size_t>(id)]; }
    // x + sign*y
    int combine(int x, int y, int sign = 1) {
        if (y == 0) return x;
        if (x == 0 && sign == 1) return y;
        const std::uint64_t key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 33) |
                                  (static_cast<std::uint64_t>(static_cast<std::uint32_t>(y)) << 1) | (sign < 0 ? 1u : 0u);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        std::vector<int> v = table_[static_cast<std::size_t>(x)];
        const auto& w = table_[static_cast<std::size_t>(y)];
        for (std::size_t k = 0; k < v.size(); ++k) v[k] += sign * w[k];
        int id = intern(v);
        cache_.emplace(key, id);
        return id;
    }

private:
    int rank_;
    std::vector<std::vector<int>> table_;
    std::map<std::vector<int>, int> index_;
    std::unordered_map<std::uint64_t, int> cache_;
};

template <class F>
struct Algebra {
    F f;
    std::vector<int> dims;
    std::vector<std::vector<SparseVec<F>>> mult;  // block i*(top+1)+j, entry a*dim(j)+b
    std::shared_ptr<Grading> grading = std::make_shared<Grading>();
    std::vector<std::vector<int>> deg;  // multidegree ids, deg[i][a]

    int top() const { return static_cast<int>(dims.size()) - 1; }
    int dim(int i) const { return i < 0 || i > top() ? 0 : dims[static_cast<std::size_t>(i)]; }
    const SparseVec<F>& prod(int i, int a, int j, int b) const {
        return mult[static_cast<std::size_t>(i * (top() + 1) + j)][static_cast<std::size_t>(a * dim(j) + b)];
    }
    SparseVec<F>& prod_mut(int i, int a, int j, int b) {
        return mult[static_cast<std::size_t>(i * (top() + 1) + j)][static_cast<std::size_t>(a * dim(j) + b)];
    }
    int mdeg(int i, int a) const { return deg[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)]; }

    static Algebra empty(const F& f, std::vector<int> dims) {
        Algebra A{f, std::move(dims), {}, std::make_shared<Grading>(), {}};
        const int T = A.top();
        A.mult.resize(static_cast<std::size_t>((T + 1) * (T + 1)));
        for (int i = 0; i <= T; ++i)
            for (int j = 0; i + j <= T; ++j)
                A.mult[static_cast<std::size_t>(i * (T + 1) + j)].resize(static_cast<std::size_t>(A.dim(i) * A.dim(j)));
        for (int i = 0; i <= T; ++i) A.deg.emplace_back(static_cast<std::size_t>(A.dim(i)), 0);
        return A;
    }
};

// Universal grading: Z^basis modulo deg(c) = deg(a) + deg(b) for every
// nonzero structure constant, computed over Q (torsion is dropped, which
// only coarsens it).
template <class F>
void assign_grading(Algebra<F>& A) {
    std::vector<int> start(A.dims.size() + 1, 0);
    for (std::size_t i = 0; i < A.dims.size(); ++i) start[i + 1] = start[i] + A.dims[i];
    const std::size_t n = static_cast<std::size_t>(start.back());
    RationalField q;
    Echelon<RationalField> rel(q, n);
    auto id = [&](int i, int a) { return static_cast<std::size_t>(start[static_cast<std::size_t>(i)] + a); };
    {
        Vec<RationalField> v(n, 0);
        v[id(0, 0)] = 1;
        rel.insert(std::move(v));
    }
    for (int i = 1; i <= A.top(); ++i)
        for (int j = i; i + j <= A.top(); ++j)
            for (int a = 0; a < A.dim(i); ++a)
                for (int b = 0; b < A.dim(j); ++b)
                    for (int side = 0; side < 2; ++side) {
                        const auto& sv = side == 0 ? A.prod(i, a, j, b) : A.prod(j, b, i, a);
                        for (const auto& e : sv) {
                            Vec<RationalField> v(n, 0);
                            v[id(i, a)] += 1;
                            v[id(j, b)] += 1;
                            v[id(i + j, static_cast<int>(e.index))] -= 1;
                            if (!rel.contains(v)) rel.insert(std::move(v));
                        }
                    }
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < n; ++c)
        if (!rel.is_pivot(c)) free.push_back(c);
    std::vector<Vec<RationalField>> forms;
    BigInt den = 1;
    for (std::size_t x = 0; x < n; ++x) {
        Vec<RationalField> v(n, 0);
        v[x] = 1;
        rel.reduce(v);
        for (auto c : free) den = lcm(den, BigInt(v[c].get_den()));
        forms.push_back(std::move(v));
    }
    A.grading = std::make_shared<Grading>(static_cast<int>(free.size()));
    for (int i = 0; i <= A.top(); ++i)
        for (int a = 0; a < A.dim(i); ++a) {
            std::vector<int> d;
            for (auto c : free) {
                Rational r = forms[id(i, a)][c] * den;
                d.push_back(static_cast<int>(r.get_num().get_si()));
            }
            A.deg[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] = A.grading->intern(d);
        }
}

template <class F>
Algebra<F> from_graded(const F& f, const GradedAlgebra& G) {
    std::vector<int> dims(G.dims());
    while (dims.size() > 1 && dims.back() == 0) dims.pop_back();
    auto A = Algebra<F>::empty(f, dims);
    for (int i = 0; i <= A.top(); ++i)
        for (int j = 0; i + j <= A.top(); ++j)
            for (int a = 0; a < A.dim(i); ++a)
                for (int b = 0; b < A.dim(j); ++b) {
                    auto& out = A.prod_mut(i, a, j, b);
                    for (int c = 0; c < A.dim(i + j); ++c) {
                        auto v = f.from(G.coeff(i, a, j, b, c));
                        if (!f.is_zero(v)) out.push_back({static_cast<std::uint32_t>(c), v});
                    }
                }
    assign_grading(A);
    return A;
}

// Left module in degrees lo..hi; act holds the positive-degree action only.
// When graded is false every multidegree is treated as zero.
template <class F>
struct Module {
    int lo = 0;
    std::vector<int> dims;
    int amax = 0;  // top degree of the algebra
    std::vector<std::vector<SparseVec<F>>> act;  // block (i-1)*n + (j-lo), entry a*dim(j)+m
    bool graded = false;
    std::vector<std::vector<int>> deg;  // deg[j-lo][m]

    int hi() const { return lo + static_cast<int>(dims.size()) - 1; }
    int dim(int j) const {
        int k = j - lo;
        return k < 0 || k >= static_cast<int>(dims.size()) ? 0 : dims[static_cast<std::size_t>(k)];
    }
    int total() const { return std::accumulate(dims.begin(), dims.end(), 0); }
    std::size_t block(int i, int j) const {
        return static_cast<std::size_t>(i - 1) * dims.size() + static_cast<std::size_t>(j - lo);
    }
    // requires 1 <= i <= amax and i + j <= hi
    const SparseVec<F>& at(const Algebra<F>&, int i, int a, int j, int m) const {
        return act[block(i, j)][static_cast<std::size_t>(a * dim(j) + m)];
    }
    SparseVec<F>& at_mut(const Algebra<F>&, int i, int a, int j, int m) {
        return act[block(i, j)][static_cast<std::size_t>(a * dim(j) + m)];
    }
    int mdeg(int j, int m) const { return graded ? deg[static_cast<std::size_t>(j - lo)][static_cast<std::size_t>(m)] : 0; }
    int& mdeg_mut(int j, int m) { return deg[static_cast<std::size_t>(j - lo)][static_cast<std::size_t>(m)]; }

    static Module empty(const Algebra<F>& A, int lo, std::vector<int> dims) {
        Module M;
        M.lo = lo;
        M.dims = std::move(dims);
        M.amax = A.top();
        M.act.resize(static_cast<std::size_t>(std::max(0, M.amax)) * M.dims.size());
        for (int i = 1; i <= M.amax; ++i)
            for (int j = M.lo; i + j <= M.hi(); ++j)
                M.act[M.block(i, j)].resize(static_cast<std::size_t>(A.dim(i) * M.dim(j)));
        for (int d : M.dims) M.deg.emplace_back(static_cast<std::size_t>(d), 0);
        return M;
    }

    // Copy restricted to degrees <= h.
    Module truncated(const Algebra<F>& A, int h) const {
        if (hi() <= h) return *this;
        auto T = empty(A, lo, std::vector<int>(dims.begin(), dims.begin() + std::max(0, h - lo + 1)));
        T.graded = graded;
        for (int j = T.lo; j <= T.hi(); ++j) T.deg[static_cast<std::size_t>(j - lo)] = deg[static_cast<std::size_t>(j - lo)];
        for (int i = 1; i <= A.top(); ++i)
            for (int j = T.lo; i + j <= T.hi(); ++j)
                for (int a = 0; a < A.dim(i); ++a)
                    for (int m = 0; m < T.dim(j); ++m) T.at_mut(A, i, a, j, m) = at(A, i, a, j, m);
        return T;
    }
};

// Propagates multidegrees along the action graph; falls back to the
// ungraded treatment when the action is not homogeneous for any choice.
template <class F>
void assign_grading(const Algebra<F>& A, Module<F>& M) {
    std::vector<int> start(M.dims.size() + 1, 0);
    for (std::size_t k = 0; k < M.dims.size(); ++k) start[k + 1] = start[k] + M.dims[k];
    const int n = start.back();
    // adjacency: (neighbour, algebra degree id, sign)
    struct Edge {
        int to, d, sign;
    };
    std::vector<std::vector<Edge>> adj(static_cast<std::size_t>(n));
    auto id = [&](int j, int m) { return start[static_cast<std::size_t>(j - M.lo)] + m; };
    for (int i = 1; i <= A.top(); ++i)
        for (int j = M.lo; i + j <= M.hi(); ++j)
            for (int a = 0; a < A.dim(i); ++a)
                for (int m = 0; m < M.dim(j); ++m)
                    for (const auto& e : M.at(A, i, a, j, m)) {
                        int x = id(j, m), y = id(i + j, static_cast<int>(e.index));
                        adj[static_cast<std::size_t>(x)].push_back({y, A.mdeg(i, a), 1});
                        adj[static_cast<std::size_t>(y)].push_back({x, A.mdeg(i, a), -1});
                    }
    auto& G = *A.grading;
    std::vector<int> d(static_cast<std::size_t>(n), -1);
    bool ok = true;
    for (int s = 0; s < n && ok; ++s) {
        if (d[static_cast<std::size_t>(s)] >= 0) continue;
        d[static_cast<std::size_t>(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty() && ok) {
            int x = stack.back();
            stack.pop_back();
            for (const auto& e : adj[static_cast<std::size_t>(x)]) {
                int want = G.combine(d[static_cast<std::size_t>(x)], e.d, e.sign);
                int& cur = d[static_cast<std::size_t>(e.to)];
                if (cur < 0) {
                    cur = want;
                    stack.push_back(e.to);
                } else if (cur != want) {
                    ok = false;
                    break;
                }
            }
        }
    }
    M.graded = ok;
    for (int j = M.lo; j <= M.hi(); ++j)
        for (int m = 0; m < M.dim(j); ++m) M.mdeg_mut(j, m) = ok ? d[static_cast<std::size_t>(id(j, m))] : 0;
}

template <class F>
Module<F> from_graded(const Algebra<F>& A, const GradedModule& G, int hi) {
    std::vector<int> dims;
    for (int j = G.lo(); j <= std::min(G.hi(), hi); ++j) dims.push_back(G.dim(j));
    if (dims.empty()) dims.push_back(0);
    auto M = Module<F>::empty(A, G.lo(), dims);
    for (int i = 1; i <= A.top(); ++i)
        for (int j = M.lo; i + j <= M.hi(); ++j)
            for (int a = 0; a < A.dim(i); ++a)
                for (int m = 0; m < M.dim(j); ++m) {
                    auto& out = M.at_mut(A, i, a, j, m);
                    for (int k = 0; k < M.dim(i + j); ++k) {
                        auto v = A.f.from(G.coeff(i, a, j, m, k));
                        if (!A.f.is_zero(v)) out.push_back({static_cast<std::uint32_t>(k), v});
                    }
                }
    assign_grading(A, M);
    return M;
}

// Generators V of M (a complement of A_+M, as coordinate vectors), the first
// syzygy Omega = ker(A⊗V -> M) and its embedding in A⊗V.
template <class F>
struct Syzygy {
    int lo = 0;                           // = M.lo
    std::vector<std::vector<int>> gens;   // gens[j-lo]: M-basis indices chosen as generators
    Module<F> omega;                      // same lo as M
    std::vector<std::vector<SparseVec<F>>> embed;  // embed[w-lo][k]: k-th basis vector of Omega_w in (A⊗V)_w

    int ngens(int j) const {
        int k = j - lo;
        return k < 0 || k >= static_cast<int>(gens.size()) ? 0 : static_cast<int>(gens[static_cast<std::size_t>(k)].size());
    }
    // offset of the (A_{w-j} ⊗ V_j) block inside (A⊗V)_w
    int offset(const Algebra<F>& A, int w, int j) const {
        int off = 0;
        for (int jj = lo; jj < j; ++jj) off += A.dim(w - jj) * ngens(jj);
        return off;
    }
    int free_dim(const Algebra<F>& A, int w) const { return offset(A, w, w + 1); }

    struct Coord {
        int j, a, x;
    };
    Coord decode(const Algebra<F>& A, int w, int col) const {
        for (int j = lo;; ++j) {
            const int ng = ngens(j), sz = A.dim(w - j) * ng;
            if (col < sz) return {j, col / ng, col % ng};
            col -= sz;
        }
    }
};

template <class F>
Syzygy<F> syzygy(const Algebra<F>& A, const Module<F>& M, int omega_hi) {
    const F& f = A.f;
    auto& G = *A.grading;
    const bool gr = M.graded;
    auto ad = [&](int i, int a) { return gr ? A.mdeg(i, a) : 0; };
    Syzygy<F> S;
    S.lo = M.lo;
    S.gens.resize(M.dims.size());

    // M_j split by multidegree: local position of each basis element
    std::vector<std::vector<int>> local(M.dims.size());
    std::vector<std::map<int, int>> bsize(M.dims.size());
    for (int j = M.lo; j <= M.hi(); ++j) {
        auto& loc = local[static_cast<std::size_t>(j - M.lo)];
        auto& bs = bsize[static_cast<std::size_t>(j - M.lo)];
        for (int m = 0; m < M.dim(j); ++m) loc.push_back(bs[M.mdeg(j, m)]++);
    }

    for (int j = M.lo; j <= M.hi(); ++j) {
        const auto& loc = local[static_cast<std::size_t>(j - M.lo)];
        std::map<int, Echelon<F>> image;
        for (const auto& [d, sz] : bsize[static_cast<std::size_t>(j - M.lo)])
            image.emplace(d, Echelon<F>(f, static_cast<std::size_t>(sz)));
        for (int i = 1; i <= A.top() && j - i >= M.lo; ++i)
            for (int a = 0; a < A.dim(i); ++a)
                for (int m = 0; m < M.dim(j - i); ++m) {
                    const auto& sv = M.at(A, i, a, j - i, m);
                    if (sv.empty()) continue;
                    auto& E = image.at(G.combine(ad(i, a), M.mdeg(j - i, m)));
                    Vec<F> v(E.ambient(), f.zero());
                    for (const auto& e : sv) v[static_cast<std::size_t>(loc[e.index])] = e.value;
                    E.insert(std::move(v));
                }
        for (int c = 0; c < M.dim(j); ++c)
            if (!image.at(M.mdeg(j, c)).is_pivot(static_cast<std::size_t>(loc[static_cast<std::size_t>(c)])))
                S.gens[static_cast<std::size_t>(j - M.lo)].push_back(c);
    }

    const int hi = std::min(omega_hi, M.hi() + A.top());
    std::vector<int> odims;
    std::vector<std::vector<int>> odeg;
    std::vector<std::vector<long>> freepos;  // freepos[w-lo][col] = omega index or -1
    for (int w = M.lo; w <= hi; ++w) {
        const int cols = S.free_dim(A, w);
        // columns by multidegree
        std::map<int, std::vector<int>> cblocks;
        for (int j = M.lo, col = 0; j <= w && j <= M.hi(); ++j) {
            const auto& g = S.gens[static_cast<std::size_t>(j - M.lo)];
            const int i = w - j;
            for (int a = 0; a < A.dim(i); ++a)
                for (int gx : g) cblocks[G.combine(ad(i, a), M.mdeg(j, gx))].push_back(col++);
        }
        std::vector<long> pos(static_cast<std::size_t>(cols), -1);
        std::vector<SparseVec<F>> basis;
        std::vector<int> bdeg;
        const bool inside = w <= M.hi();
        for (const auto& [d, cl] : cblocks) {
            int rows = 0;
            if (inside) {
                auto it = bsize[static_cast<std::size_t>(w - M.lo)].find(d);
                rows = it == bsize[static_cast<std::size_t>(w - M.lo)].end() ? 0 : it->second;
            }
            Matrix<F> mat(f, static_cast<std::size_t>(rows), cl.size());
            if (rows > 0) {
                const auto& loc = local[static_cast<std::size_t>(w - M.lo)];
                for (std::size_t k = 0; k < cl.size(); ++k) {
                    auto c = S.decode(A, w, cl[k]);
                    const int gm = S.gens[static_cast<std::size_t>(c.j - M.lo)][static_cast<std::size_t>(c.x)];
                    if (c.j == w) {
                        mat.at(static_cast<std::size_t>(loc[static_cast<std::size_t>(gm)]), k) = f.one();
                    } else {
                        for (const auto& e : M.at(A, w - c.j, c.a, c.j, gm)) {
                            if (M.mdeg(w, static_cast<int>(e.index)) != d)
                                throw InternalInconsistency("engine: module action is not homogeneous");
                            mat.at(static_cast<std::size_t>(loc[e.index]), k) = e.value;
                        }
                    }
                }
            }
            auto pivots = rref(f, mat);
            std::vector<char> is_pivot(cl.size(), 0);
            for (auto c : pivots) is_pivot[c] = 1;
            for (std::size_t c = 0; c < cl.size(); ++c) {
                if (is_pivot[c]) continue;
                SparseVec<F> v;
                for (std::size_t r = 0; r < pivots.size(); ++r) {
                    const auto& x = mat.at(r, c);
                    if (!f.is_zero(x)) v.push_back({static_cast<std::uint32_t>(cl[pivots[r]]), f.neg(x)});
                }
                v.push_back({static_cast<std::uint32_t>(cl[c]), f.one()});
                std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.index < y.index; });
                pos[static_cast<std::size_t>(cl[c])] = static_cast<long>(basis.size());
                basis.push_back(std::move(v));
                bdeg.push_back(d);
            }
        }
        odims.push_back(static_cast<int>(basis.size()));
        odeg.push_back(std::move(bdeg));
        S.embed.push_back(std::move(basis));
        freepos.push_back(std::move(pos));
    }
    if (odims.empty()) odims.push_back(0), odeg.emplace_back(), S.embed.emplace_back(), freepos.emplace_back();

    S.omega = Module<F>::empty(A, M.lo, odims);
    auto& O = S.omega;
    O.graded = gr;
    O.deg = std::move(odeg);
    // action on Omega: b·(a⊗g) = (ba)⊗g, read back through the free columns
    std::vector<typename F::value_type> acc;
    std::vector<std::uint32_t> touched;
    acc.assign(static_cast<std::size_t>(*std::max_element(O.dims.begin(), O.dims.end())), f.zero());
    for (int w = O.lo; w <= O.hi(); ++w)
        for (int x = 0; x < O.dim(w); ++x) {
            const auto& v = S.embed[static_cast<std::size_t>(w - O.lo)][static_cast<std::size_t>(x)];
            std::vector<typename Syzygy<F>::Coord> coords;
            coords.reserve(v.size());
            for (const auto& e : v) coords.push_back(S.decode(A, w, static_cast<int>(e.index)));
            for (int i = 1; i <= A.top() && w + i <= O.hi(); ++i) {
                const auto& pos = freepos[static_cast<std::size_t>(w + i - O.lo)];
                for (int b = 0; b < A.dim(i); ++b) {
                    touched.clear();
                    for (std::size_t k = 0; k < v.size(); ++k) {
                        const auto& c = coords[k];
                        const int ai = w - c.j;
                        if (ai + i > A.top()) continue;
                        const int ng = S.ngens(c.j), off2 = S.offset(A, w + i, c.j);
                        for (const auto& e : A.prod(i, b, ai, c.a)) {
                            long p = pos[static_cast<std::size_t>(off2 + static_cast<int>(e.index) * ng + c.x)];
                            if (p < 0) continue;
                            auto& slot = acc[static_cast<std::size_t>(p)];
                            if (f.is_zero(slot)) touched.push_back(static_cast<std::uint32_t>(p));
                            slot = f.add(slot, f.mul(v[k].value, e.value));
                        }
                    }
                    std::sort(touched.begin(), touched.end());
                    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
                    auto& out = O.at_mut(A, i, b, w, x);
                    for (auto p : touched) {
                        auto& slot = acc[p];
                        if (!f.is_zero(slot)) out.push_back({p, slot});
                        slot = f.zero();
                    }
                }
            }
        }
    return S;
}

// Split M along the connected components of its action graph.
template <class F>
std::vector<Module<F>> components(const Algebra<F>& A, const Module<F>& M) {
    std::vector<int> start(M.dims.size() + 1, 0);
    for (std::size_t k = 0; k < M.dims.size(); ++k) start[k + 1] = start[k] + M.dims[k];
    const int n = start.back();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto id = [&](int j, int m) { return start[static_cast<std::size_t>(j - M.lo)] + m; };
    for (int i = 1; i <= A.top(); ++i)
        for (int j = M.lo; i + j <= M.hi(); ++j)
            for (int a = 0; a < A.dim(i); ++a)
                for (int m = 0; m < M.dim(j); ++m)
                    for (const auto& e : M.at(A, i, a, j, m)) {
                        int x = find(id(j, m)), y = find(id(i + j, static_cast<int>(e.index)));
                        if (x != y) parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
                    }
    // component -> list of (degree, index), in basis order
    std::vector<int> comp_of(static_cast<std::size_t>(n), -1);
    std::vector<int> roots;
    for (int x = 0; x < n; ++x) {
        int r = find(x);
        if (comp_of[static_cast<std::size_t>(r)] < 0) {
            comp_of[static_cast<std::size_t>(r)] = static_cast<int>(roots.size());
            roots.push_back(r);
        }
        comp_of[static_cast<std::size_t>(x)] = comp_of[static_cast<std::size_t>(r)];
    }
    const int nc = static_cast<int>(roots.size());
    if (nc == 0) return {M};
    std::vector<int> newidx(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> cdims(static_cast<std::size_t>(nc), std::vector<int>(M.dims.size(), 0));
    for (int j = M.lo; j <= M.hi(); ++j)
        for (int m = 0; m < M.dim(j); ++m) {
            int x = id(j, m), c = comp_of[static_cast<std::size_t>(x)];
            newidx[static_cast<std::size_t>(x)] = cdims[static_cast<std::size_t>(c)][static_cast<std::size_t>(j - M.lo)]++;
        }
    std::vector<Module<F>> out;
    std::vector<int> shift(static_cast<std::size_t>(nc));
    for (int c = 0; c < nc; ++c) {
        auto& d = cdims[static_cast<std::size_t>(c)];
        std::size_t first = 0, last = d.size();
        while (first < d.size() && d[first] == 0) ++first;
        while (last > first && d[last - 1] == 0) --last;
        shift[static_cast<std::size_t>(c)] = static_cast<int>(first);
        out.push_back(Module<F>::empty(A, M.lo + static_cast<int>(first),
                                       std::vector<int>(d.begin() + static_cast<long>(first), d.begin() + static_cast<long>(last))));
        out.back().graded = M.graded;
    }
    for (int j = M.lo; j <= M.hi(); ++j)
        for (int m = 0; m < M.dim(j); ++m) {
            int x = id(j, m);
            auto& C = out[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(x)])];
            C.mdeg_mut(j, newidx[static_cast<std::size_t>(x)]) = M.mdeg(j, m);
        }
    for (int i = 1; i <= A.top(); ++i)
        for (int j = M.lo; i + j <= M.hi(); ++j)
            for (int a = 0; a < A.dim(i); ++a)
                for (int m = 0; m < M.dim(j); ++m) {
                    const auto& sv = M.at(A, i, a, j, m);
                    if (sv.empty()) continue;
                    int x = id(j, m), c = comp_of[static_cast<std::size_t>(x)];
                    auto& C = out[static_cast<std::size_t>(c)];
                    auto& dst = C.at_mut(A, i, a, j, newidx[static_cast<std::size_t>(x)]);
                    for (const auto& e : sv)
                        dst.push_back({static_cast<std::uint32_t>(newidx[static_cast<std::size_t>(id(i + j, static_cast<int>(e.index)))]), e.value});
                }
    return out;
}

template <class F>
std::string canonical_key(const Algebra<F>& A, const Module<F>& M) {
    std::string key;
    key.reserve(64);
    for (int d : M.dims) {
        key += std::to_string(d);
        key += ',';
    }
    key += '|';
    for (int i = 1; i <= A.top(); ++i)
        for (int j = M.lo; i + j <= M.hi(); ++j)
            for (int a = 0; a < A.dim(i); ++a)
                for (int m = 0; m < M.dim(j); ++m) {
                    const auto& sv = M.at(A, i, a, j, m);
                    if (sv.empty()) continue;
                    key += std::to_string(i) + ':' + std::to_string(a) + ':' + std::to_string(j - M.lo) + ':' + std::to_string(m) + '>';
                    for (const auto& e : sv) {
                        key += std::to_string(e.index);
                        key += '=';
                        A.f.append_key(e.value, key);
                    }
                    key += ';';
                }
    return key;
}

// Truncated P_M = t^lo (X + T·P_k), coefficient vectors relative to lo.
struct SplitSeries {
    std::vector<BigInt> x, t;
};

// Poincaré series by iterated syzygies, splitting into connected components
// and memoizing them. Degrees are total (homological + internal).
template <class F>
class Splitter {
public:
    explicit Splitter(Algebra<F> A) : A_(std::move(A)) {}

    const Algebra<F>& algebra() const { return A_; }

    // R = number of coefficients beyond lo; M is truncated at lo + R.
    SplitSeries resolve(const Module<F>& M, int R) {
        SplitSeries out{std::vector<BigInt>(static_cast<std::size_t>(R + 1)), std::vector<BigInt>(static_cast<std::size_t>(R + 1))};
        if (R < 0) return out;
        for (const auto& C : components(A_, M)) {
            if (C.total() == 0) continue;
            const int off = C.lo - M.lo;
            if (off > R) continue;
            auto s = resolve_connected(C, R - off);
            for (int k = 0; off + k <= R; ++k) {
                out.x[static_cast<std::size_t>(off + k)] += s.x[static_cast<std::size_t>(k)];
                out.t[static_cast<std::size_t>(off + k)] += s.t[static_cast<std::size_t>(k)];
            }
        }
        return out;
    }

    // P_k through t^N.
    std::vector<BigInt> residue_series(int N) {
        if (static_cast<int>(pk_.size()) > N) return {pk_.begin(), pk_.begin() + N + 1};
        std::vector<BigInt> pk(static_cast<std::size_t>(N + 1));
        pk[0] = 1;
        if (A_.top() >= 1 && N >= 2) {
            // k = 1 + t·A_+, A_+ starts in degree 1
            std::vector<int> dims;
            for (int i = 1; i <= std::min(A_.top(), N); ++i) dims.push_back(A_.dim(i));
            auto Ap = Module<F>::empty(A_, 1, dims);
            for (int i = 1; i <= A_.top(); ++i)
                for (int j = 1; i + j <= Ap.hi(); ++j)
                    for (int a = 0; a < A_.dim(i); ++a)
                        for (int b = 0; b < A_.dim(j); ++b) Ap.at_mut(A_, i, a, j, b) = A_.prod(i, a, j, b);
            Ap.graded = true;
            for (int j = 1; j <= Ap.hi(); ++j)
                for (int b = 0; b < A_.dim(j); ++b) Ap.mdeg_mut(j, b) = A_.mdeg(j, b);
            auto s = resolve(Ap, N - 2);
            // P_k (1 - t^2 T) = 1 + t^2 X
            for (int k = 2; k <= N; ++k) {
                BigInt v = s.x[static_cast<std::size_t>(k - 2)];
                for (int u = 0; u <= k - 2; ++u) v += s.t[static_cast<std::size_t>(u)] * pk[static_cast<std::size_t>(k - 2 - u)];
                pk[static_cast<std::size_t>(k)] = v;
            }
        }
        pk_ = pk;
        return pk;
    }

    // Absolute coefficients of P_M on [M.lo, N].
    SeriesWindow poincare(const Module<F>& M, int N) {
        SeriesWindow w;
        w.lo = M.lo;
        const int R = N - M.lo;
        if (R < 0) return w;
        auto s = resolve(M, R);
        auto pk = residue_series(R);
        w.c.assign(static_cast<std::size_t>(R + 1), 0);
        for (int k = 0; k <= R; ++k) {
            BigInt v = s.x[static_cast<std::size_t>(k)];
            for (int u = 0; u <= k; ++u) v += s.t[static_cast<std::size_t>(u)] * pk[static_cast<std::size_t>(k - u)];
            w.c[static_cast<std::size_t>(k)] = v;
        }
        return w;
    }

    std::size_t memo_size() const { return memo_.size(); }

private:
    struct Entry {
        int R;
        SplitSeries s;
    };

    SplitSeries resolve_connected(const Module<F>& C, int R) {
        SplitSeries out{std::vector<BigInt>(static_cast<std::size_t>(R + 1)), std::vector<BigInt>(static_cast<std::size_t>(R + 1))};
        if (C.total() == 1) {
            out.t[0] = 1;
            return out;
        }
        std::string key = canonical_key(A_, C);
        if (auto it = memo_.find(key); it != memo_.end() && it->second.R >= R) {
            for (int k = 0; k <= R; ++k) {
                out.x[static_cast<std::size_t>(k)] = it->second.s.x[static_cast<std::size_t>(k)];
                out.t[static_cast<std::size_t>(k)] = it->second.s.t[static_cast<std::size_t>(k)];
            }
            return out;
        }
        Module<F> Ct = C.truncated(A_, C.lo + R);
        auto S = syzygy(A_, Ct, C.lo + R - 1);
        for (int j = C.lo; j <= std::min(Ct.hi(), C.lo + R); ++j) out.x[static_cast<std::size_t>(j - C.lo)] += S.ngens(j);
        if (R >= 1) {
            auto sub = resolve(S.omega, R - 1);  // omega.lo == C.lo
            for (int k = 0; k + 1 <= R; ++k) {
                out.x[static_cast<std::size_t>(k + 1)] += sub.x[static_cast<std::size_t>(k)];
                out.t[static_cast<std::size_t>(k + 1)] += sub.t[static_cast<std::size_t>(k)];
            }
        }
        memo_[key] = Entry{R, out};
        return out;
    }

    Algebra<F> A_;
    std::unordered_map<std::string, Entry> memo_;
    std::vector<BigInt> pk_;
};

// Materialized minimal resolution: level m has generators V_m and the
// differential of each generator of V_{m+1} as a vector in (A⊗V_m).
template <class F>
struct Chain {
    std::vector<Syzygy<F>> levels;  // levels[m]: generators of F_m and embedding of F_{m+1}'s generators
    std::vector<Module<F>> modules;  // modules[m]: the module resolved at level m (M, Omega, ...)
};

// hi(m) bounds the internal degrees kept at level m.
template <class F, class Hi>
Chain<F> materialize(const Algebra<F>& A, const Module<F>& M, int levels, Hi hi) {
    Chain<F> ch;
    Module<F> cur = M;
    for (int m = 0; m <= levels; ++m) {
        cur = cur.truncated(A, hi(m));
        auto S = syzygy(A, cur, m < levels ? hi(m + 1) : cur.lo - 1);
        ch.modules.push_back(cur);
        cur = S.omega;
        ch.levels.push_back(std::move(S));
    }
    return ch;
}

// Dimension of the cochain space Hom_A(F_m, N) in internal degree delta.
template <class F>
int cochain_dim(const Chain<F>& ch, const Module<F>& N, int m, int delta) {
    const auto& L = ch.levels[static_cast<std::size_t>(m)];
    int n = 0;
    for (int j = L.lo; j < L.lo + static_cast<int>(L.gens.size()); ++j) n += L.ngens(j) * N.dim(j + delta);
    return n;
}

// Rank of the coboundary Hom_A(F_m, N)_delta -> Hom_A(F_{m+1}, N)_delta,
// split by multidegree (deg n - deg g) when everything is graded.
template <class F>
std::size_t coboundary_rank(const Algebra<F>& A, const Chain<F>& ch, const Module<F>& N, int m, int delta) {
    const F& f = A.f;
    if (m + 1 >= static_cast<int>(ch.levels.size())) throw InternalInconsistency("coboundary beyond the computed resolution");
    const auto& L = ch.levels[static_cast<std::size_t>(m)];
    const auto& L1 = ch.levels[static_cast<std::size_t>(m + 1)];
    const auto& M0 = ch.modules[static_cast<std::size_t>(m)];
    const auto& M1 = ch.modules[static_cast<std::size_t>(m + 1)];
    const bool gr = N.graded && M0.graded && M1.graded;
    auto& G = *A.grading;
    if (cochain_dim(ch, N, m, delta) == 0 || cochain_dim(ch, N, m + 1, delta) == 0) return 0;

    // local indices of cochain coordinates within their block
    std::map<int, std::pair<int, int>> shape;  // block -> (rows, cols)
    auto key = [&](const Module<F>& Mx, int j, int gm, int n) {
        return gr ? G.combine(N.mdeg(j + delta, n), Mx.mdeg(j, gm), -1) : 0;
    };
    std::vector<std::vector<int>> col_local(L.gens.size()), col_key(L.gens.size());
    for (int j = L.lo; j < L.lo + static_cast<int>(L.gens.size()); ++j) {
        const int nc = N.dim(j + delta);
        for (int gm : L.gens[static_cast<std::size_t>(j - L.lo)])
            for (int n = 0; n < nc; ++n) {
                int k = key(M0, j, gm, n);
                col_key[static_cast<std::size_t>(j - L.lo)].push_back(k);
                col_local[static_cast<std::size_t>(j - L.lo)].push_back(shape[k].second++);
            }
    }
    std::vector<std::vector<int>> row_local(L1.gens.size()), row_key(L1.gens.size());
    for (int j = L1.lo; j < L1.lo + static_cast<int>(L1.gens.size()); ++j) {
        const int nr = N.dim(j + delta);
        for (int gm : L1.gens[static_cast<std::size_t>(j - L1.lo)])
            for (int n = 0; n < nr; ++n) {
                int k = key(M1, j, gm, n);
                row_key[static_cast<std::size_t>(j - L1.lo)].push_back(k);
                row_local[static_cast<std::size_t>(j - L1.lo)].push_back(shape[k].first++);
            }
    }
    std::map<int, Matrix<F>> mats;
    for (const auto& [k, rc] : shape)
        if (rc.first > 0 && rc.second > 0) mats.emplace(k, Matrix<F>(f, static_cast<std::size_t>(rc.first), static_cast<std::size_t>(rc.second)));

    for (int j1 = L1.lo; j1 < L1.lo + static_cast<int>(L1.gens.size()); ++j1) {
        const int nr = N.dim(j1 + delta);
        if (nr == 0) continue;
        const auto& g1 = L1.gens[static_cast<std::size_t>(j1 - L1.lo)];
        for (std::size_t y = 0; y < g1.size(); ++y) {
            const auto& vec = L.embed[static_cast<std::size_t>(j1 - L.lo)][static_cast<std::size_t>(g1[y])];
            const std::size_t rbase = y * static_cast<std::size_t>(nr);
            const auto& rl = row_local[static_cast<std::size_t>(j1 - L1.lo)];
            const auto& rk = row_key[static_cast<std::size_t>(j1 - L1.lo)];
            for (const auto& ent : vec) {
                auto c = L.decode(A, j1, static_cast<int>(ent.index));
                const int nc = N.dim(c.j + delta), i = j1 - c.j;
                const std::size_t cbase = static_cast<std::size_t>(c.x) * static_cast<std::size_t>(nc);
                const auto& cl = col_local[static_cast<std::size_t>(c.j - L.lo)];
                const auto& ck = col_key[static_cast<std::size_t>(c.j - L.lo)];
                auto add = [&](int n, int n1, const typename F::value_type& v) {
                    const std::size_t cc = cbase + static_cast<std::size_t>(n), rr = rbase + static_cast<std::size_t>(n1);
                    if (ck[cc] != rk[rr]) throw InternalInconsistency("engine: coboundary is not homogeneous");
                    auto& cell = mats.at(ck[cc]).at(static_cast<std::size_t>(rl[rr]), static_cast<std::size_t>(cl[cc]));
                    cell = f.add(cell, v);
                };
                for (int n = 0; n < nc; ++n) {
                    if (i == 0) {
                        add(n, n, ent.value);
                        continue;
                    }
                    for (const auto& e : N.at(A, i, c.a, c.j + delta, n)) add(n, static_cast<int>(e.index), f.mul(ent.value, e.value));
                }
            }
        }
    }
    std::size_t r = 0;
    for (auto& [k, mat] : mats) r += rank(f, std::move(mat));
    return r;
}

template <class F>
long ext_dim(const Algebra<F>& A, const Chain<F>& ch, const Module<F>& N, int m, int delta) {
    long d = cochain_dim(ch, N, m, delta);
    if (d == 0) return 0;
    d -= static_cast<long>(coboundary_rank(A, ch, N, m, delta));
    if (m > 0) d -= static_cast<long>(coboundary_rank(A, ch, N, m - 1, delta));
    return d;
}

} // namespace codepth::engine
