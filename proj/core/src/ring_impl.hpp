#pragma once

// Degreewise model of R = k[x_1..x_e]/I up to a fixed internal degree.

#include "codepth/error.hpp"
#include "codepth/field.hpp"
#include "codepth/linalg.hpp"
#include "codepth/ring.hpp"
#include "engine.hpp"

#include <map>
#include <vector>

namespace codepth::ringimpl {

// All exponent vectors of total degree j in e variables, descending lex.
inline void monomials(int e, int j, std::vector<std::vector<int>>& out) {
    out.clear();
    if (e == 0) {
        if (j == 0) out.emplace_back();
        return;
    }
    std::vector<int> cur(static_cast<std::size_t>(e), 0);
    auto rec = [&](auto&& self, int k, int left) -> void {
        if (k == e - 1) {
            cur[static_cast<std::size_t>(k)] = left;
            out.push_back(cur);
            return;
        }
        for (int a = left; a >= 0; --a) {
            cur[static_cast<std::size_t>(k)] = a;
            self(self, k + 1, left - a);
        }
    };
    rec(rec, 0, j);
}

inline bool divides(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

template <class F>
struct RingData {
    explicit RingData(const F& field) : f(field) {}

    F f;
    int e = 0;
    int D = 0;
    bool monomial = true;
    int top = -1;  // highest nonzero degree once some R_j = 0 was seen, else -1
    int groebner_degree = 0;  // max degree of minimal generators of the initial ideal seen
    std::vector<std::vector<int>> gen_monos;  // monomial case
    std::vector<std::vector<std::vector<int>>> basis;
    std::vector<std::map<std::vector<int>, int>> index;
    std::vector<std::map<std::vector<int>, SparseVec<F>>> reduce_lead;  // non-standard monomials

    bool artinian() const { return top >= 0; }
    int dim(int j) const {
        return j < 0 || j > D ? 0 : static_cast<int>(basis[static_cast<std::size_t>(j)].size());
    }

    // Coordinates of a monomial in the basis of R_{|m|}.
    SparseVec<F> normal_form(const std::vector<int>& m) const {
        const int j = total_degree(m);
        if (j > D) throw InternalInconsistency("ring: degree beyond the computed window");
        const auto& idx = index[static_cast<std::size_t>(j)];
        if (auto it = idx.find(m); it != idx.end()) return {{static_cast<std::uint32_t>(it->second), f.one()}};
        if (monomial) return {};
        const auto& rl = reduce_lead[static_cast<std::size_t>(j)];
        if (auto it = rl.find(m); it != rl.end()) return it->second;
        return {};  // R_j = 0
    }

    std::vector<int> sum(const std::vector<int>& a, const std::vector<int>& b) const {
        std::vector<int> c(a);
        for (std::size_t k = 0; k < c.size(); ++k) c[k] += b[k];
        return c;
    }
};

template <class F>
RingData<F> build_ring(const F& f, const RingPresentation& R, int D) {
    R.validate();
    RingData<F> rd(f);
    rd.e = R.e;
    rd.D = D;
    rd.monomial = R.is_monomial();
    rd.basis.resize(static_cast<std::size_t>(D + 1));
    rd.index.resize(static_cast<std::size_t>(D + 1));
    rd.reduce_lead.resize(static_cast<std::size_t>(D + 1));
    if (rd.monomial) {
        for (const auto& g : R.gens) rd.gen_monos.push_back(g.front().exps);
        rd.groebner_degree = R.max_gen_degree();
    }
    std::vector<std::vector<int>> all;
    std::vector<std::map<std::vector<int>, bool>> lead(static_cast<std::size_t>(D + 1));
    for (int j = 0; j <= D; ++j) {
        if (rd.top >= 0) break;
        monomials(R.e, j, all);
        auto& B = rd.basis[static_cast<std::size_t>(j)];
        if (rd.monomial) {
            for (const auto& m : all) {
                bool in = false;
                for (const auto& g : rd.gen_monos)
                    if (divides(g, m)) {
                        in = true;
                        break;
                    }
                if (!in) B.push_back(m);
            }
        } else {
            std::map<std::vector<int>, std::size_t> col;
            for (std::size_t c = 0; c < all.size(); ++c) col[all[c]] = c;
            Echelon<F> ideal(f, all.size());
            std::vector<std::vector<int>> mult;
            for (const auto& g : R.gens) {
                const int dg = total_degree(g.front().exps);
                if (dg > j) continue;
                monomials(R.e, j - dg, mult);
                for (const auto& u : mult) {
                    Vec<F> v(all.size(), f.zero());
                    for (const auto& t : g) {
                        auto& slot = v[col.at(rd.sum(u, t.exps))];
                        slot = f.add(slot, f.from(t.coeff));
                    }
                    ideal.insert(std::move(v));
                }
            }
            for (std::size_t c = 0; c < all.size(); ++c) {
                if (!ideal.is_pivot(c)) {
                    B.push_back(all[c]);
                    continue;
                }
                lead[static_cast<std::size_t>(j)][all[c]] = true;
                bool minimal = true;
                for (int k = 0; k < R.e && minimal; ++k) {
                    if (all[c][static_cast<std::size_t>(k)] == 0) continue;
                    auto m = all[c];
                    --m[static_cast<std::size_t>(k)];
                    if (lead[static_cast<std::size_t>(j - 1)].count(m)) minimal = false;
                }
                if (minimal) rd.groebner_degree = std::max(rd.groebner_degree, j);
            }
            for (std::size_t k = 0; k < B.size(); ++k) rd.index[static_cast<std::size_t>(j)][B[k]] = static_cast<int>(k);
            for (std::size_t c = 0; c < all.size(); ++c) {
                if (!ideal.is_pivot(c)) continue;
                const auto& row = ideal.row(static_cast<std::size_t>(ideal.pivot_row(c)));
                SparseVec<F> nf;
                for (std::size_t k = 0; k < all.size(); ++k)
                    if (k != c && !f.is_zero(row[k]))
                        nf.push_back({static_cast<std::uint32_t>(rd.index[static_cast<std::size_t>(j)].at(all[k])), f.neg(row[k])});
                std::sort(nf.begin(), nf.end(), [](const auto& x, const auto& y) { return x.index < y.index; });
                rd.reduce_lead[static_cast<std::size_t>(j)][all[c]] = std::move(nf);
            }
        }
        if (rd.monomial)
            for (std::size_t k = 0; k < B.size(); ++k) rd.index[static_cast<std::size_t>(j)][B[k]] = static_cast<int>(k);
        if (B.empty()) rd.top = j - 1;
    }
    return rd;
}

// R_{<=hi} as an engine algebra; monomial rings get the Z^e grading.
template <class F>
engine::Algebra<F> to_engine(const RingData<F>& rd, int hi) {
    std::vector<int> dims;
    for (int j = 0; j <= std::min(hi, rd.D); ++j) dims.push_back(rd.dim(j));
    while (dims.size() > 1 && dims.back() == 0) dims.pop_back();
    auto A = engine::Algebra<F>::empty(rd.f, dims);
    for (int i = 0; i <= A.top(); ++i)
        for (int j = 0; i + j <= A.top(); ++j)
            for (int a = 0; a < A.dim(i); ++a)
                for (int b = 0; b < A.dim(j); ++b)
                    A.prod_mut(i, a, j, b) = rd.normal_form(rd.sum(rd.basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)],
                                                                  rd.basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(b)]));
    if (rd.monomial) {
        A.grading = std::make_shared<engine::Grading>(rd.e);
        for (int i = 0; i <= A.top(); ++i)
            for (int a = 0; a < A.dim(i); ++a)
                A.deg[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] =
                    A.grading->intern(rd.basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)]);
    }
    return A;
}

} // namespace codepth::ringimpl
