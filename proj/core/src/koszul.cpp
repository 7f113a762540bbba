#include "codepth/koszul.hpp"

#include "codepth/error.hpp"
#include "codepth/linalg.hpp"
#include "ring_impl.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace codepth {

int default_window(const RingPresentation& R) { return 2 * (R.e + R.sum_gen_degrees()); }

namespace {

using Elem = std::pair<unsigned, int>;  // (subset of variables, basis index in R_{j-i})

template <class F>
struct Piece {
    int i = 0, j = 0;
    std::vector<Elem> elems;
    std::map<Elem, int> pos;
    Echelon<F> ech;
    std::vector<std::size_t> rep_ids;
    std::vector<Vec<F>> reps;
    int first = 0;  // index of the first representative in the basis of A_i

    Piece(const F& f, std::size_t n) : ech(f, n, true) {}
};

int popcount(unsigned x) { return std::popcount(x); }

// sign of e_S ∧ e_T as a permutation of the union
bool wedge_negative(unsigned S, unsigned T) {
    int inv = 0;
    for (unsigned t = T; t; t &= t - 1) {
        const int k = std::countr_zero(t);
        inv += popcount(S >> (k + 1));
    }
    return inv % 2 == 1;
}

template <class F>
KoszulResult koszul_impl(const F& f, const RingPresentation& R, int D) {
    const int e = R.e;
    auto rd = ringimpl::build_ring(f, R, D);
    KoszulResult out;
    out.D = D;
    out.ranks.assign(static_cast<std::size_t>(e + 1), std::vector<int>(static_cast<std::size_t>(D + 1), 0));

    // pieces keyed by (i, j, block)
    std::map<std::tuple<int, int, std::vector<int>>, Piece<F>> pieces;
    std::vector<int> count(static_cast<std::size_t>(e + 1), 0);
    std::vector<std::vector<int>> blocks;
    std::vector<unsigned> masks_by_size[32];
    for (unsigned S = 0; S < (1u << e); ++S) masks_by_size[popcount(S)].push_back(S);

    for (int j = 0; j <= D; ++j) {
        if (rd.monomial)
            ringimpl::monomials(e, j, blocks);
        else
            blocks.assign(1, {});
        for (const auto& alpha : blocks) {
            // K_i in this block
            std::vector<std::vector<Elem>> K(static_cast<std::size_t>(e + 2));
            std::vector<std::map<Elem, int>> P(static_cast<std::size_t>(e + 2));
            bool any = false;
            for (int i = 0; i <= std::min(e, j); ++i) {
                for (unsigned S : masks_by_size[i]) {
                    if (rd.monomial) {
                        std::vector<int> m = alpha;
                        bool ok = true;
                        for (int k = 0; k < e; ++k)
                            if (S >> k & 1u) {
                                if (--m[static_cast<std::size_t>(k)] < 0) ok = false;
                            }
                        if (!ok) continue;
                        const auto& idx = rd.index[static_cast<std::size_t>(j - i)];
                        auto it = idx.find(m);
                        if (it == idx.end()) continue;
                        K[static_cast<std::size_t>(i)].push_back({S, it->second});
                    } else {
                        for (int b = 0; b < rd.dim(j - i); ++b) K[static_cast<std::size_t>(i)].push_back({S, b});
                    }
                }
                for (std::size_t x = 0; x < K[static_cast<std::size_t>(i)].size(); ++x)
                    P[static_cast<std::size_t>(i)][K[static_cast<std::size_t>(i)][x]] = static_cast<int>(x);
                any = any || !K[static_cast<std::size_t>(i)].empty();
            }
            if (!any) continue;
            // d_i : K_i -> K_{i-1}
            auto diff = [&](int i) {
                const auto& src = K[static_cast<std::size_t>(i)];
                const auto& dst = K[static_cast<std::size_t>(i - 1)];
                Matrix<F> d(f, dst.size(), src.size());
                for (std::size_t c = 0; c < src.size(); ++c) {
                    const auto [S, b] = src[c];
                    const auto& mono = rd.basis[static_cast<std::size_t>(j - i)][static_cast<std::size_t>(b)];
                    int before = 0;
                    for (int k = 0; k < e; ++k) {
                        if (!(S >> k & 1u)) continue;
                        std::vector<int> xm = mono;
                        ++xm[static_cast<std::size_t>(k)];
                        for (const auto& ent : rd.normal_form(xm)) {
                            const int r = P[static_cast<std::size_t>(i - 1)].at({S & ~(1u << k), static_cast<int>(ent.index)});
                            auto v = before % 2 ? f.neg(ent.value) : ent.value;
                            d.at(static_cast<std::size_t>(r), c) = f.add(d.at(static_cast<std::size_t>(r), c), v);
                        }
                        ++before;
                    }
                }
                return d;
            };
            for (int i = 0; i <= std::min(e, j); ++i) {
                const auto& Ki = K[static_cast<std::size_t>(i)];
                if (Ki.empty()) continue;
                std::vector<Vec<F>> cycles;
                if (i == 0 || K[static_cast<std::size_t>(i - 1)].empty()) {
                    for (std::size_t x = 0; x < Ki.size(); ++x) {
                        Vec<F> v(Ki.size(), f.zero());
                        v[x] = f.one();
                        cycles.push_back(std::move(v));
                    }
                } else {
                    cycles = kernel(f, diff(i));
                }
                if (cycles.empty()) continue;
                Piece<F> pc(f, Ki.size());
                pc.i = i;
                pc.j = j;
                pc.elems = Ki;
                pc.pos = P[static_cast<std::size_t>(i)];
                std::size_t inserted = 0;
                if (i + 1 <= std::min(e, j) && !K[static_cast<std::size_t>(i + 1)].empty()) {
                    auto d = diff(i + 1);
                    for (std::size_t c = 0; c < d.cols; ++c) {
                        Vec<F> v(d.rows);
                        for (std::size_t r = 0; r < d.rows; ++r) v[r] = d.at(r, c);
                        pc.ech.insert(std::move(v));
                        ++inserted;
                    }
                }
                for (auto& z : cycles) {
                    Vec<F> copy = z;
                    if (pc.ech.insert(std::move(copy))) {
                        pc.rep_ids.push_back(inserted);
                        pc.reps.push_back(std::move(z));
                    }
                    ++inserted;
                }
                if (pc.reps.empty()) continue;
                pc.first = count[static_cast<std::size_t>(i)];
                count[static_cast<std::size_t>(i)] += static_cast<int>(pc.reps.size());
                out.ranks[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += static_cast<int>(pc.reps.size());
                pieces.emplace(std::make_tuple(i, j, alpha), std::move(pc));
            }
        }
    }

    for (int i = 0; i <= e; ++i)
        for (int j = std::max(0, D - 1); j <= D; ++j)
            if (out.ranks[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) out.stabilized = false;
    if (!out.stabilized) out.flags.push_back("StabilizationUncertain: homology in internal degree D-1 or D");

    std::vector<int> dims(count);
    while (dims.size() > 1 && dims.back() == 0) dims.pop_back();
    GradedAlgebra A(R.field, dims);
    const int top = static_cast<int>(dims.size()) - 1;
    bool beyond = false;
    for (const auto& [k1, p1] : pieces) {
        if (p1.i == 0) continue;
        for (const auto& [k2, p2] : pieces) {
            if (p2.i == 0 || p1.i + p2.i > top) continue;
            const int jj = p1.j + p2.j, ii = p1.i + p2.i;
            if (jj > D) {
                beyond = true;
                continue;
            }
            std::vector<int> alpha = std::get<2>(k1);
            for (std::size_t k = 0; k < alpha.size(); ++k) alpha[k] += std::get<2>(k2)[k];
            auto it = pieces.find(std::make_tuple(ii, jj, alpha));
            if (it == pieces.end()) continue;  // the product is a boundary
            const auto& tgt = it->second;
            for (std::size_t a = 0; a < p1.reps.size(); ++a)
                for (std::size_t b = 0; b < p2.reps.size(); ++b) {
                    Vec<F> v(tgt.elems.size(), f.zero());
                    for (std::size_t x = 0; x < p1.elems.size(); ++x) {
                        const auto& c1 = p1.reps[a][x];
                        if (f.is_zero(c1)) continue;
                        const auto [S, b1] = p1.elems[x];
                        for (std::size_t y = 0; y < p2.elems.size(); ++y) {
                            const auto& c2 = p2.reps[b][y];
                            if (f.is_zero(c2)) continue;
                            const auto [T, b2] = p2.elems[y];
                            if (S & T) continue;
                            auto c = f.mul(c1, c2);
                            if (wedge_negative(S, T)) c = f.neg(c);
                            auto m = rd.sum(rd.basis[static_cast<std::size_t>(p1.j - p1.i)][static_cast<std::size_t>(b1)],
                                            rd.basis[static_cast<std::size_t>(p2.j - p2.i)][static_cast<std::size_t>(b2)]);
                            for (const auto& ent : rd.normal_form(m)) {
                                auto pit = tgt.pos.find({S | T, static_cast<int>(ent.index)});
                                if (pit == tgt.pos.end()) throw InternalInconsistency("koszul: product outside the target block");
                                auto& slot = v[static_cast<std::size_t>(pit->second)];
                                slot = f.add(slot, f.mul(c, ent.value));
                            }
                        }
                    }
                    Vec<F> coeffs;
                    tgt.ech.reduce(v, &coeffs);
                    for (const auto& x : v)
                        if (!f.is_zero(x)) throw InternalInconsistency("koszul: product of cycles is not a cycle");
                    coeffs.resize(std::max(coeffs.size(), tgt.rep_ids.empty() ? 0 : tgt.rep_ids.back() + 1), f.zero());
                    for (std::size_t r = 0; r < tgt.rep_ids.size(); ++r) {
                        const auto& c = coeffs[tgt.rep_ids[r]];
                        if (!f.is_zero(c))
                            A.set(p1.i, p1.first + static_cast<int>(a), p2.i, p2.first + static_cast<int>(b), tgt.first + static_cast<int>(r),
                                  f.to_rational(c));
                    }
                }
        }
    }
    if (beyond) out.flags.push_back("products landing beyond internal degree D were taken as zero");

    if (!R.gens.empty()) {
        long alt = 0;
        for (int i = 0; i <= top; ++i) alt += (i % 2 ? -1 : 1) * A.dim(i);
        if (alt != 0) {
            if (out.stabilized) throw InternalInconsistency("koszul: alternating sum of ranks is " + std::to_string(alt));
            out.flags.push_back("alternating sum of ranks is nonzero");
        }
    }
    out.algebra = std::move(A);
    return out;
}

} // namespace

KoszulResult koszul_homology(const RingPresentation& R, int D) {
    R.validate();
    if (R.e > 16) throw PreconditionViolation("koszul_homology: too many variables");
    if (D < 0) D = default_window(R);
    if (D < R.e + R.max_gen_degree()) throw PreconditionViolation("koszul_homology: window below e + max generator degree");
    return with_field(R.field, [&](const auto& f) { return koszul_impl(f, R, D); });
}

ClassId t_vs_h30(const GradedAlgebra& A) {
    auto mi = mult_invariants(A);
    if (A.top() != 3 || mi.p != 3 || mi.q != 0 || mi.r != 0)
        throw PreconditionViolation("t_vs_h30: needs c = 3 and (p,q,r) = (3,0,0)");
    return with_field(A.field(), [&](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        const int L = A.dim(1);
        const std::size_t n2 = static_cast<std::size_t>(A.dim(2));
        Echelon<F> image(f, n2);
        std::vector<std::vector<Vec<F>>> prod(static_cast<std::size_t>(L));
        for (int a = 0; a < L; ++a)
            for (int b = 0; b < L; ++b) {
                Vec<F> v;
                for (const auto& q : A.product(1, a, 1, b)) v.push_back(f.from(q));
                image.insert(v);
                prod[static_cast<std::size_t>(a)].push_back(std::move(v));
            }
        const auto& piv = image.pivots();
        // lin[b][k][a]: coefficient of x_a in the k-th coordinate of x·y_b
        std::vector<std::vector<Vec<F>>> lin(static_cast<std::size_t>(L), std::vector<Vec<F>>(3, Vec<F>(static_cast<std::size_t>(L), f.zero())));
        for (int b = 0; b < L; ++b)
            for (int k = 0; k < 3; ++k)
                for (int a = 0; a < L; ++a) {
                    // coordinates of v in the echelon basis are its values at the pivots after reduction-free reading
                    Vec<F> v = prod[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                    lin[static_cast<std::size_t>(b)][static_cast<std::size_t>(k)][static_cast<std::size_t>(a)] = v[piv[static_cast<std::size_t>(k)]];
                }
        const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        const bool odd[6] = {false, true, true, false, false, true};
        for (int r0 = 0; r0 < L; ++r0)
            for (int r1 = r0 + 1; r1 < L; ++r1)
                for (int r2 = r1 + 1; r2 < L; ++r2) {
                    const int rows[3] = {r0, r1, r2};
                    std::map<std::array<int, 3>, typename F::value_type> poly;
                    for (int s = 0; s < 6; ++s)
                        for (int a0 = 0; a0 < L; ++a0)
                            for (int a1 = 0; a1 < L; ++a1)
                                for (int a2 = 0; a2 < L; ++a2) {
                                    auto c = f.mul(f.mul(lin[static_cast<std::size_t>(rows[0])][static_cast<std::size_t>(perms[s][0])][static_cast<std::size_t>(a0)],
                                                         lin[static_cast<std::size_t>(rows[1])][static_cast<std::size_t>(perms[s][1])][static_cast<std::size_t>(a1)]),
                                                   lin[static_cast<std::size_t>(rows[2])][static_cast<std::size_t>(perms[s][2])][static_cast<std::size_t>(a2)]);
                                    if (f.is_zero(c)) continue;
                                    std::array<int, 3> mono{a0, a1, a2};
                                    std::sort(mono.begin(), mono.end());
                                    auto& slot = poly.try_emplace(mono, f.zero()).first->second;
                                    slot = odd[s] ? f.sub(slot, c) : f.add(slot, c);
                                }
                    for (const auto& [mono, c] : poly)
                        if (!f.is_zero(c)) return ClassId::h(3, 0);
                }
        return ClassId::t();
    });
}

DepthResult depth_and_h(const RingPresentation& R, int imax, int D) {
    DepthResult out;
    auto dim = krull_dimension(R, D);
    out.dim = dim.dim;
    out.dim_estimated = dim.estimated;
    if (dim.estimated) out.flags.push_back("DimensionEstimated");
    auto bass = bass_ring_oracle(R, imax, D);
    out.d = -1;
    bool exact_before = true;
    for (int i = 0; i <= imax; ++i) {
        if (bass.mu[static_cast<std::size_t>(i)] != 0) {
            out.d = i;
            break;
        }
        exact_before = exact_before && bass.exact[static_cast<std::size_t>(i)];
    }
    if (out.d < 0) {
        out.d = imax + 1;
        out.d_exact = false;
        out.flags.push_back("WindowTooSmall: no nonzero Bass number up to " + std::to_string(imax));
    } else if (!exact_before) {
        out.d_exact = false;
        out.flags.push_back("WindowTooSmall: Bass numbers below the depth are window-limited");
    }
    out.h = out.dim - out.d;
    return out;
}

ClassificationReport classify(const GradedAlgebra& A, const std::optional<RingInvariants>& aux) {
    ClassificationReport rep;
    const int c = A.top();
    const auto mi = mult_invariants(A);
    RingInvariants inv;
    if (aux) {
        inv = *aux;
    } else {
        inv.e = c;
        rep.flags.push_back("e, d, h not supplied; assumed e = c, d = h = 0");
    }
    inv.c = c;
    inv.l = mi.l;
    inv.m = mi.m;
    inv.n = mi.n;
    inv.p = mi.p;
    inv.q = mi.q;
    inv.r = mi.r;
    auto tuple = [&] {
        return "(c,l,m,n,p,q,r) = (" + std::to_string(c) + "," + std::to_string(mi.l) + "," + std::to_string(mi.m) + "," +
               std::to_string(mi.n) + "," + std::to_string(mi.p) + "," + std::to_string(mi.q) + "," + std::to_string(mi.r) + ")";
    };
    if (c > 3) throw Unclassifiable("codepth exceeds 3: " + tuple());
    if (c >= 1) {
        long alt = 0;
        for (int i = 0; i <= c; ++i) alt += (i % 2 ? -1 : 1) * A.dim(i);
        rep.alternating_sum_zero = alt == 0;
        if (!rep.alternating_sum_zero) rep.flags.push_back("alternating sum of ranks is " + std::to_string(alt));
    }
    // l + 1 >= c - h with equality exactly for complete intersections
    if (mi.l + 1 == c - inv.h || c <= 1) {
        rep.cls = ClassId::ci(c);
        rep.gorenstein = true;
    } else if (c == 2) {
        rep.cls = ClassId::s();
    } else {
        rep.m_eq_l_plus_n = mi.m == mi.l + mi.n;
        if (!rep.m_eq_l_plus_n) throw InternalInconsistency("m != l + n: " + tuple());
        if (mi.n == 1 && poincare_duality(A).holds) {
            rep.cls = ClassId::g(mi.l + 1);
            rep.gorenstein = true;
            if (mi.r != mi.l + 1) throw Unclassifiable("Gorenstein with r != l + 1: " + tuple());
        } else if (mi.p == 1 && mi.q == 1 && mi.r == 2) {
            rep.cls = ClassId::b();
        } else if (mi.p == 0 && mi.q == 1 && mi.r >= 2) {
            rep.cls = ClassId::g(mi.r);
        } else if (mi.p == 3 && mi.q == 0) {
            if (mi.r != 0) throw Unclassifiable("p = 3, q = 0 with r != 0: " + tuple());
            rep.cls = t_vs_h30(A);
        } else {
            if (mi.r != mi.q) throw Unclassifiable("no class row matches " + tuple());
            rep.cls = ClassId::h(mi.p, mi.q);
        }
    }
    rep.inv = inv;
    rep.sextuple = {inv.h, inv.l, inv.n, inv.p, inv.q, inv.r};
    rep.exception = exception_kind(rep.cls, inv);
    return rep;
}

ClassificationReport classify(const RingPresentation& R, int D) {
    if (D < 0) D = default_window(R);
    auto K = koszul_homology(R, D);
    const int c = K.algebra.top();
    // the Bass cross-check only needs a few internal degrees; large windows blow up for non-artinian rings
    auto dh = depth_and_h(R, R.e, std::min(D, 2 * (R.e + R.max_gen_degree())));
    RingInvariants aux;
    aux.e = R.e;
    aux.d = R.e - c;
    aux.h = dh.dim - aux.d;
    auto rep = classify(K.algebra, aux);
    rep.stabilized = K.stabilized;
    for (const auto& fl : K.flags) rep.flags.push_back(fl);
    if (dh.dim_estimated) rep.flags.push_back("DimensionEstimated");
    if (dh.d != aux.d) rep.flags.push_back("depth from Bass numbers (" + std::to_string(dh.d) + ") differs from e - c");
    return rep;
}

} // namespace codepth
