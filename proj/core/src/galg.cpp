#include "codepth/galg.hpp"

#include "codepth/error.hpp"
#include "codepth/linalg.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <tuple>

namespace codepth {

// ---------------------------------------------------------------- fields

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (p == 2) throw InvalidInput("characteristic 2 is not supported");
    if (p >= (1u << 31) || !is_prime(p)) throw InvalidInput(std::to_string(p) + " is not an odd prime below 2^31");
    return {p};
}

std::string FieldSpec::name() const { return is_rational() ? "Q" : "F_" + std::to_string(characteristic); }

PrimeField::value_type PrimeField::inv(value_type a) const {
    if (a == 0) throw InternalInconsistency("inverse of zero in F_" + std::to_string(p_));
    std::int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (t < 0) t += p_;
    return static_cast<value_type>(t);
}

PrimeField::value_type PrimeField::from(const Rational& q) const {
    BigInt pn(static_cast<unsigned long>(p_));
    BigInt num = q.get_num() % pn, den = q.get_den() % pn;
    if (num < 0) num += pn;
    if (den == 0) throw FieldMismatch("denominator of " + q.get_str() + " vanishes in F_" + std::to_string(p_));
    return mul(static_cast<value_type>(num.get_ui()), inv(static_cast<value_type>(den.get_ui())));
}

Rational normalize_scalar(const FieldSpec& f, const Rational& q) {
    if (f.is_rational()) return q;
    PrimeField F(f.characteristic);
    return F.to_rational(F.from(q));
}

namespace {

const Rational& zero_rational() {
    static const Rational z(0);
    return z;
}

std::size_t cube(int a, int b, int c, int x, int y, int z) {
    (void)a;
    return (static_cast<std::size_t>(x) * static_cast<std::size_t>(b) + static_cast<std::size_t>(y)) *
               static_cast<std::size_t>(c) +
           static_cast<std::size_t>(z);
}

int sign(long e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace

// ---------------------------------------------------------------- algebra

GradedAlgebra::GradedAlgebra(FieldSpec field, std::vector<int> dims) : field_(field), dims_(std::move(dims)) {
    if (dims_.empty() || dims_[0] != 1) throw InvalidInput("graded algebra needs A_0 = k");
    for (int d : dims_)
        if (d < 0) throw InvalidInput("negative dimension");
    const int T = max_degree();
    blocks_.resize(dims_.size() * dims_.size());
    for (int i = 0; i <= T; ++i)
        for (int j = 0; i + j <= T; ++j)
            blocks_[block(i, j)].assign(static_cast<std::size_t>(dim(i) * dim(j) * dim(i + j)), Rational(0));
    for (int j = 0; j <= T; ++j)
        for (int b = 0; b < dim(j); ++b) {
            set(0, 0, j, b, b, 1);
            set(j, b, 0, 0, b, 1);
        }
}

int GradedAlgebra::top() const {
    for (int i = max_degree(); i >= 0; --i)
        if (dim(i) > 0) return i;
    return 0;
}

int GradedAlgebra::total_dim() const {
    int s = 0;
    for (int d : dims_) s += d;
    return s;
}

const Rational& GradedAlgebra::coeff(int i, int a, int j, int b, int c) const {
    if (i < 0 || j < 0 || i + j > max_degree()) return zero_rational();
    return blocks_[block(i, j)][cube(dim(i), dim(j), dim(i + j), a, b, c)];
}

void GradedAlgebra::set(int i, int a, int j, int b, int c, const Rational& value) {
    if (i + j > max_degree()) {
        if (value != 0) throw InvalidInput("product lands above the top degree");
        return;
    }
    blocks_[block(i, j)][cube(dim(i), dim(j), dim(i + j), a, b, c)] = normalize_scalar(field_, value);
}

std::vector<Rational> GradedAlgebra::product(int i, int a, int j, int b) const {
    std::vector<Rational> out(static_cast<std::size_t>(dim(i + j)));
    if (i + j > max_degree()) return out;
    for (int c = 0; c < dim(i + j); ++c) out[static_cast<std::size_t>(c)] = coeff(i, a, j, b, c);
    return out;
}

// ---------------------------------------------------------------- module

GradedModule::GradedModule(GradedAlgebra algebra, int lo, std::vector<int> dims)
    : algebra_(std::move(algebra)), lo_(lo), dims_(std::move(dims)) {
    for (int d : dims_)
        if (d < 0) throw InvalidInput("negative dimension");
    const int T = algebra_.max_degree();
    blocks_.resize(static_cast<std::size_t>(T + 1) * dims_.size());
    for (int i = 0; i <= T; ++i)
        for (int j = lo_; j + i <= hi(); ++j)
            blocks_[block(i, j)].assign(static_cast<std::size_t>(algebra_.dim(i) * dim(j) * dim(i + j)), Rational(0));
    for (int j = lo_; j <= hi(); ++j)
        for (int m = 0; m < dim(j); ++m) set(0, 0, j, m, m, 1);
}

int GradedModule::total_dim() const {
    int s = 0;
    for (int d : dims_) s += d;
    return s;
}

const Rational& GradedModule::coeff(int i, int a, int j, int m, int k) const {
    if (i < 0 || i > algebra_.max_degree() || j < lo_ || i + j > hi()) return zero_rational();
    return blocks_[block(i, j)][cube(algebra_.dim(i), dim(j), dim(i + j), a, m, k)];
}

void GradedModule::set(int i, int a, int j, int m, int k, const Rational& value) {
    if (i > algebra_.max_degree() || i + j > hi()) {
        if (value != 0) throw InvalidInput("action lands outside the module");
        return;
    }
    blocks_[block(i, j)][cube(algebra_.dim(i), dim(j), dim(i + j), a, m, k)] =
        normalize_scalar(algebra_.field(), value);
}

std::vector<Rational> GradedModule::act(int i, int a, int j, int m) const {
    std::vector<Rational> out(static_cast<std::size_t>(dim(i + j)));
    for (int k = 0; k < dim(i + j); ++k) out[static_cast<std::size_t>(k)] = coeff(i, a, j, m, k);
    return out;
}

// ---------------------------------------------------------------- constructions

GradedAlgebra ground_field(const FieldSpec& f) { return GradedAlgebra(f, {1}); }

GradedAlgebra exterior(const FieldSpec& f, const std::vector<int>& degrees) {
    for (int d : degrees)
        if (d <= 0 || d % 2 == 0) throw EvenGenerator("exterior generators must have odd positive degree, got " + std::to_string(d));
    const int k = static_cast<int>(degrees.size());
    if (k > 16) throw InvalidInput("too many exterior generators");
    struct Elem {
        int deg;
        std::vector<int> idx;
        unsigned mask;
    };
    std::vector<Elem> elems;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        Elem e{0, {}, mask};
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) {
                e.deg += degrees[static_cast<std::size_t>(i)];
                e.idx.push_back(i);
            }
        elems.push_back(e);
    }
    std::sort(elems.begin(), elems.end(), [](const Elem& a, const Elem& b) {
        return std::tie(a.deg, a.idx) < std::tie(b.deg, b.idx);
    });
    int top = 0;
    for (const auto& e : elems) top = std::max(top, e.deg);
    std::vector<int> dims(static_cast<std::size_t>(top + 1), 0);
    std::map<unsigned, std::pair<int, int>> where;  // mask -> (degree, index)
    for (const auto& e : elems) where[e.mask] = {e.deg, dims[static_cast<std::size_t>(e.deg)]++};
    GradedAlgebra A(f, dims);
    for (const auto& x : elems)
        for (const auto& y : elems) {
            if (x.mask & y.mask) continue;
            if (x.mask == 0 || y.mask == 0) continue;
            int inversions = 0;
            for (int s : x.idx)
                for (int t : y.idx)
                    if (t < s) ++inversions;
            auto [dx, ix] = where[x.mask];
            auto [dy, iy] = where[y.mask];
            auto [dz, iz] = where[x.mask | y.mask];
            (void)dz;
            A.set(dx, ix, dy, iy, iz, sign(inversions));
        }
    return A;
}

GradedAlgebra trivial_ext(const GradedAlgebra& C, const GradedModule& W) {
    if (!(W.algebra() == C)) throw InvalidInput("trivial_ext: module is over a different algebra");
    if (!W.is_zero() && W.lo() < 1) {
        for (int j = W.lo(); j <= std::min(0, W.hi()); ++j)
            if (W.dim(j) != 0) throw InvalidInput("trivial_ext: module must live in positive degrees");
    }
    const int top = std::max(C.max_degree(), W.is_zero() ? 0 : W.hi());
    std::vector<int> dims(static_cast<std::size_t>(top + 1));
    for (int i = 0; i <= top; ++i) dims[static_cast<std::size_t>(i)] = C.dim(i) + (i >= 1 ? W.dim(i) : 0);
    GradedAlgebra B(C.field(), dims);
    for (int i = 1; i <= top; ++i)
        for (int j = 1; i + j <= top; ++j) {
            const int ci = C.dim(i), cj = C.dim(j), ck = C.dim(i + j);
            for (int a = 0; a < ci; ++a)
                for (int b = 0; b < cj; ++b)
                    for (int c = 0; c < ck; ++c) B.set(i, a, j, b, c, C.coeff(i, a, j, b, c));
            // c * w
            for (int a = 0; a < ci; ++a)
                for (int w = 0; w < W.dim(j); ++w)
                    for (int k = 0; k < W.dim(i + j); ++k) {
                        const Rational& v = W.coeff(i, a, j, w, k);
                        if (v != 0) B.set(i, a, j, cj + w, ck + k, v);
                    }
            // w * c = (-1)^{ij} c * w
            for (int w = 0; w < W.dim(i); ++w)
                for (int b = 0; b < cj; ++b)
                    for (int k = 0; k < W.dim(i + j); ++k) {
                        const Rational& v = W.coeff(j, b, i, w, k);
                        if (v != 0) B.set(i, ci + w, j, b, ck + k, sign(static_cast<long>(i) * j) * v);
                    }
        }
    return B;
}

namespace {

// basis of (X ⊗ Y)_n as (degree in X, index in X, index in Y)
struct TensorBasis {
    std::vector<std::vector<std::tuple<int, int, int>>> elems;  // by degree - lo
    std::map<std::tuple<int, int, int, int>, int> index;  // (n, i, a, b)
    int lo = 0;

    int dim(int n) const {
        int k = n - lo;
        return k < 0 || k >= static_cast<int>(elems.size()) ? 0 : static_cast<int>(elems[static_cast<std::size_t>(k)].size());
    }
};

template <class DX, class DY>
TensorBasis tensor_basis(int xlo, int xhi, DX dimx, int ylo, int yhi, DY dimy) {
    TensorBasis tb;
    tb.lo = xlo + ylo;
    tb.elems.resize(static_cast<std::size_t>(std::max(0, xhi + yhi - tb.lo + 1)));
    for (int n = tb.lo; n <= xhi + yhi; ++n) {
        auto& v = tb.elems[static_cast<std::size_t>(n - tb.lo)];
        for (int i = xlo; i <= xhi; ++i) {
            int j = n - i;
            if (j < ylo || j > yhi) continue;
            for (int a = 0; a < dimx(i); ++a)
                for (int b = 0; b < dimy(j); ++b) {
                    tb.index[{n, i, a, b}] = static_cast<int>(v.size());
                    v.emplace_back(i, a, b);
                }
        }
    }
    return tb;
}

} // namespace

GradedAlgebra tensor(const GradedAlgebra& C, const GradedAlgebra& D) {
    if (!(C.field() == D.field())) throw FieldMismatch("tensor: " + C.field().name() + " vs " + D.field().name());
    const int tc = C.max_degree(), td = D.max_degree();
    auto tb = tensor_basis(0, tc, [&](int i) { return C.dim(i); }, 0, td, [&](int j) { return D.dim(j); });
    std::vector<int> dims;
    for (int n = 0; n <= tc + td; ++n) dims.push_back(tb.dim(n));
    GradedAlgebra A(C.field(), dims);
    for (int n1 = 1; n1 <= tc + td; ++n1)
        for (int n2 = 1; n1 + n2 <= tc + td; ++n2)
            for (int x = 0; x < tb.dim(n1); ++x)
                for (int y = 0; y < tb.dim(n2); ++y) {
                    auto [i1, a1, b1] = tb.elems[static_cast<std::size_t>(n1)][static_cast<std::size_t>(x)];
                    auto [i2, a2, b2] = tb.elems[static_cast<std::size_t>(n2)][static_cast<std::size_t>(y)];
                    const int j1 = n1 - i1, j2 = n2 - i2;
                    const int s = sign(static_cast<long>(j1) * i2);
                    auto cc = C.product(i1, a1, i2, a2);
                    auto dd = D.product(j1, b1, j2, b2);
                    for (std::size_t u = 0; u < cc.size(); ++u) {
                        if (cc[u] == 0) continue;
                        for (std::size_t v = 0; v < dd.size(); ++v) {
                            if (dd[v] == 0) continue;
                            int k = tb.index.at({n1 + n2, i1 + i2, static_cast<int>(u), static_cast<int>(v)});
                            A.set(n1, x, n2, y, k, A.coeff(n1, x, n2, y, k) + s * cc[u] * dd[v]);
                        }
                    }
                }
    return A;
}

GradedAlgebra truncate(const GradedAlgebra& E, int s) {
    if (s < 1) throw PreconditionViolation("truncate: s must be at least 1");
    const int top = std::min(E.max_degree(), s - 1);
    std::vector<int> dims(E.dims().begin(), E.dims().begin() + top + 1);
    GradedAlgebra A(E.field(), dims);
    for (int i = 1; i <= top; ++i)
        for (int j = 1; i + j <= top; ++j)
            for (int a = 0; a < A.dim(i); ++a)
                for (int b = 0; b < A.dim(j); ++b)
                    for (int c = 0; c < A.dim(i + j); ++c) A.set(i, a, j, b, c, E.coeff(i, a, j, b, c));
    return A;
}

GradedModule regular_module(const GradedAlgebra& A) {
    GradedModule M(A, 0, A.dims());
    for (int i = 1; i <= A.max_degree(); ++i)
        for (int j = 0; i + j <= A.max_degree(); ++j)
            for (int a = 0; a < A.dim(i); ++a)
                for (int b = 0; b < A.dim(j); ++b)
                    for (int c = 0; c < A.dim(i + j); ++c) {
                        const Rational& v = A.coeff(i, a, j, b, c);
                        if (v != 0) M.set(i, a, j, b, c, v);
                    }
    return M;
}

GradedModule trivial_module(const GradedAlgebra& A, int lo, const std::vector<int>& dims) {
    return GradedModule(A, lo, dims);
}

GradedModule residue_field(const GradedAlgebra& A) { return GradedModule(A, 0, {1}); }

GradedModule augmentation_ideal(const GradedAlgebra& A) { return module_from(regular_module(A), 1); }

namespace {

// Copy of M restricted to degrees [lo, hi] (a quotient or submodule, caller's responsibility).
GradedModule restrict_degrees(const GradedModule& M, int lo, int hi) {
    std::vector<int> dims;
    for (int j = lo; j <= hi; ++j) dims.push_back(M.dim(j));
    if (dims.empty()) return GradedModule(M.algebra(), lo, {});
    GradedModule N(M.algebra(), lo, dims);
    const auto& A = M.algebra();
    for (int i = 1; i <= A.max_degree(); ++i)
        for (int j = lo; i + j <= hi; ++j)
            for (int a = 0; a < A.dim(i); ++a)
                for (int m = 0; m < M.dim(j); ++m)
                    for (int k = 0; k < M.dim(i + j); ++k) {
                        const Rational& v = M.coeff(i, a, j, m, k);
                        if (v != 0) N.set(i, a, j, m, k, v);
                    }
    return N;
}

} // namespace

GradedModule suspend(const GradedModule& M, int s) {
    GradedModule N(M.algebra(), M.lo() + s, M.dims());
    const auto& A = M.algebra();
    for (int i = 1; i <= A.max_degree(); ++i)
        for (int j = M.lo(); i + j <= M.hi(); ++j)
            for (int a = 0; a < A.dim(i); ++a)
                for (int m = 0; m < M.dim(j); ++m)
                    for (int k = 0; k < M.dim(i + j); ++k) {
                        const Rational& v = M.coeff(i, a, j, m, k);
                        if (v != 0) N.set(i, a, j + s, m, k, sign(static_cast<long>(i) * s) * v);
                    }
    return N;
}

GradedModule dual(const GradedModule& M, int s) {
    // (M*)_j = (M_{s-j})^*
    std::vector<int> dims;
    const int lo = s - M.hi(), hi = s - M.lo();
    for (int j = lo; j <= hi; ++j) dims.push_back(M.dim(s - j));
    GradedModule N(M.algebra(), lo, dims);
    const auto& A = M.algebra();
    for (int i = 1; i <= A.max_degree(); ++i)
        for (int j = lo; i + j <= hi; ++j)
            for (int a = 0; a < A.dim(i); ++a)
                for (int k = 0; k < N.dim(j); ++k)          // e_k^* with e_k in M_{s-j}
                    for (int l = 0; l < N.dim(i + j); ++l) {  // e_l in M_{s-j-i}
                        const Rational& v = M.coeff(i, a, s - j - i, l, k);
                        if (v != 0) N.set(i, a, j, k, l, sign(static_cast<long>(i) * j) * v);
                    }
    return N;
}

GradedModule module_truncate(const GradedModule& M, int s) {
    return restrict_degrees(M, M.lo(), std::min(M.hi(), s - 1));
}

GradedModule module_from(const GradedModule& M, int s) {
    return restrict_degrees(M, std::max(M.lo(), s), M.hi());
}

GradedModule direct_sum(const GradedModule& M, const GradedModule& N) {
    if (!(M.algebra() == N.algebra())) throw InvalidInput("direct_sum: different algebras");
    const int lo = std::min(M.lo(), N.lo()), hi = std::max(M.hi(), N.hi());
    std::vector<int> dims;
    for (int j = lo; j <= hi; ++j) dims.push_back(M.dim(j) + N.dim(j));
    GradedModule S(M.algebra(), lo, dims);
    const auto& A = M.algebra();
    for (int i = 1; i <= A.max_degree(); ++i)
        for (int j = lo; i + j <= hi; ++j)
            for (int a = 0; a < A.dim(i); ++a) {
                for (int m = 0; m < M.dim(j); ++m)
                    for (int k = 0; k < M.dim(i + j); ++k) {
                        const Rational& v = M.coeff(i, a, j, m, k);
                        if (v != 0) S.set(i, a, j, m, k, v);
                    }
                for (int m = 0; m < N.dim(j); ++m)
                    for (int k = 0; k < N.dim(i + j); ++k) {
                        const Rational& v = N.coeff(i, a, j, m, k);
                        if (v != 0) S.set(i, a, j, M.dim(j) + m, M.dim(i + j) + k, v);
                    }
            }
    return S;
}

GradedModule module_tensor(const GradedModule& T, const GradedModule& U) {
    const auto& C = T.algebra();
    const auto& D = U.algebra();
    GradedAlgebra CD = tensor(C, D);
    auto ab = tensor_basis(0, C.max_degree(), [&](int i) { return C.dim(i); }, 0, D.max_degree(),
                           [&](int j) { return D.dim(j); });
    auto tu = tensor_basis(T.lo(), T.hi(), [&](int i) { return T.dim(i); }, U.lo(), U.hi(),
                           [&](int j) { return U.dim(j); });
    std::vector<int> dims;
    for (int n = tu.lo; n <= T.hi() + U.hi(); ++n) dims.push_back(tu.dim(n));
    GradedModule M(CD, tu.lo, dims);
    for (int k = 1; k <= CD.max_degree(); ++k)
        for (int n = tu.lo; n + k <= M.hi(); ++n)
            for (int x = 0; x < ab.dim(k); ++x)
                for (int y = 0; y < tu.dim(n); ++y) {
                    auto [i, a, b] = ab.elems[static_cast<std::size_t>(k)][static_cast<std::size_t>(x)];
                    auto [j, t, u] = tu.elems[static_cast<std::size_t>(n - tu.lo)][static_cast<std::size_t>(y)];
                    const int bi = k - i, uj = n - j;
                    const int s = sign(static_cast<long>(bi) * j);
                    auto at = T.act(i, a, j, t);
                    auto bu = U.act(bi, b, uj, u);
                    for (std::size_t p = 0; p < at.size(); ++p) {
                        if (at[p] == 0) continue;
                        for (std::size_t q = 0; q < bu.size(); ++q) {
                            if (bu[q] == 0) continue;
                            int z = tu.index.at({k + n, i + j, static_cast<int>(p), static_cast<int>(q)});
                            M.set(k, x, n, y, z, M.coeff(k, x, n, y, z) + s * at[p] * bu[q]);
                        }
                    }
                }
    return M;
}

// ---------------------------------------------------------------- table algebras

GradedAlgebra table_b_algebra(const ClassId& cls, const FieldSpec& f) {
    const GradedAlgebra k = ground_field(f);
    switch (cls.kind) {
    case ClassKind::C: return exterior(f, std::vector<int>(static_cast<std::size_t>(cls.c), 1));
    case ClassKind::S: return k;
    case ClassKind::T: {
        GradedAlgebra C = exterior(f, {1, 1});
        return trivial_ext(C, suspend(module_truncate(regular_module(C), 2), 1));
    }
    case ClassKind::B: {
        GradedAlgebra C = exterior(f, {1, 1});
        return trivial_ext(C, suspend(augmentation_ideal(C), 1));
    }
    case ClassKind::G: {
        GradedAlgebra C = trivial_ext(k, trivial_module(k, 1, {cls.r}));
        return trivial_ext(C, dual(regular_module(C), 3));
    }
    case ClassKind::H: {
        GradedAlgebra C = trivial_ext(k, trivial_module(k, 1, {cls.p, cls.q}));
        return tensor(C, exterior(f, {1}));
    }
    }
    throw InvalidInput("unknown class");
}

std::vector<int> table_w_dims(const ClassId& cls, const RingInvariants& inv, const GradedAlgebra& B) {
    if (cls.kind == ClassKind::C) return {0, 0, 0};
    std::vector<int> target = {inv.l + 1, inv.l + inv.n, inv.n};
    if (cls.kind == ClassKind::S) target = {inv.l + 1, inv.l, 0};
    std::vector<int> w(3);
    for (int i = 1; i <= 3; ++i) {
        w[static_cast<std::size_t>(i - 1)] = target[static_cast<std::size_t>(i - 1)] - B.dim(i);
        if (w[static_cast<std::size_t>(i - 1)] < 0)
            throw NegativeWDimension(cls.name() + ": dim W_" + std::to_string(i) + " = " +
                                     std::to_string(w[static_cast<std::size_t>(i - 1)]));
    }
    if (B.max_degree() > 3)
        for (int i = 4; i <= B.max_degree(); ++i)
            if (B.dim(i) != 0) throw NegativeWDimension(cls.name() + ": B has degree " + std::to_string(i));
    return w;
}

GradedAlgebra table_algebra(const ClassId& cls, const RingInvariants& inv, const FieldSpec& f) {
    auto verdict = admissible(cls, inv);
    if (!verdict.ok) {
        std::string msg = cls.name() + " inadmissible:";
        for (const auto& v : verdict.violations) msg += " [" + v.constraint + ": " + v.witness + "]";
        throw InadmissibleInvariants(msg);
    }
    GradedAlgebra B = table_b_algebra(cls, f);
    if (cls.kind == ClassKind::C) return B;
    auto w = table_w_dims(cls, inv, B);
    if (w[0] == 0 && w[1] == 0 && w[2] == 0) return B;
    return trivial_ext(B, trivial_module(B, 1, w));
}

// ---------------------------------------------------------------- invariants

namespace {

template <class F>
std::size_t rank_of(const F& f, const std::vector<Vec<F>>& vs, std::size_t n) {
    if (n == 0 || vs.empty()) return 0;
    Matrix<F> m(f, vs.size(), n);
    for (std::size_t r = 0; r < vs.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) m.at(r, c) = vs[r][c];
    return rank(f, std::move(m));
}

template <class F>
Vec<F> to_field(const F& f, const std::vector<Rational>& v) {
    Vec<F> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(f.from(x));
    return out;
}

} // namespace

MultInvariants mult_invariants(const GradedAlgebra& A) {
    return with_field(A.field(), [&](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        MultInvariants mi;
        mi.l = A.dim(1) - 1;
        mi.m = A.dim(2);
        mi.n = A.dim(3);
        mi.beyond_degree_3 = A.top() > 3;
        std::vector<Vec<F>> v11, v12;
        for (int a = 0; a < A.dim(1); ++a)
            for (int b = 0; b < A.dim(1); ++b) v11.push_back(to_field(f, A.product(1, a, 1, b)));
        for (int a = 0; a < A.dim(1); ++a)
            for (int b = 0; b < A.dim(2); ++b) v12.push_back(to_field(f, A.product(1, a, 2, b)));
        mi.p = static_cast<int>(rank_of(f, v11, static_cast<std::size_t>(A.dim(2))));
        mi.q = static_cast<int>(rank_of(f, v12, static_cast<std::size_t>(A.dim(3))));
        std::vector<Vec<F>> delta;
        for (int x = 0; x < A.dim(2); ++x) {
            Vec<F> row;
            for (int y = 0; y < A.dim(1); ++y)
                for (int z = 0; z < A.dim(3); ++z) row.push_back(f.from(A.coeff(2, x, 1, y, z)));
            delta.push_back(std::move(row));
        }
        mi.r = static_cast<int>(rank_of(f, delta, static_cast<std::size_t>(A.dim(1) * A.dim(3))));
        return mi;
    });
}

DualityResult poincare_duality(const GradedAlgebra& A) {
    const int s = A.top();
    if (A.dim(s) != 1) return {false, -1};
    bool ok = with_field(A.field(), [&](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        for (int i = 0; i <= s; ++i) {
            if (A.dim(i) != A.dim(s - i)) return false;
            if (A.dim(i) == 0) continue;
            std::vector<Vec<F>> rows;
            for (int a = 0; a < A.dim(i); ++a) {
                Vec<F> row;
                for (int b = 0; b < A.dim(s - i); ++b) row.push_back(f.from(A.coeff(i, a, s - i, b, 0)));
                rows.push_back(std::move(row));
            }
            if (rank_of(f, rows, static_cast<std::size_t>(A.dim(s - i))) != static_cast<std::size_t>(A.dim(i)))
                return false;
        }
        return true;
    });
    return ok ? DualityResult{true, s} : DualityResult{false, -1};
}

bool products_of_positives_vanish(const GradedAlgebra& A) {
    for (int i = 1; i <= A.max_degree(); ++i)
        for (int j = 1; i + j <= A.max_degree(); ++j)
            for (int a = 0; a < A.dim(i); ++a)
                for (int b = 0; b < A.dim(j); ++b)
                    for (int c = 0; c < A.dim(i + j); ++c)
                        if (A.coeff(i, a, j, b, c) != 0) return false;
    return true;
}

LaurentPoly hilbert(const GradedAlgebra& A) {
    LaurentPoly p;
    for (int i = 0; i <= A.max_degree(); ++i) p.add_term(i, A.dim(i));
    return p;
}

LaurentPoly hilbert(const GradedModule& M) {
    LaurentPoly p;
    for (int j = M.lo(); j <= M.hi(); ++j) p.add_term(j, M.dim(j));
    return p;
}

// ---------------------------------------------------------------- axioms

namespace {

std::string at(int i, int a) { return "(" + std::to_string(i) + "," + std::to_string(a) + ")"; }

} // namespace

std::vector<std::string> axiom_failures(const GradedAlgebra& A) {
    return with_field(A.field(), [&](const auto& f) {
        std::vector<std::string> out;
        const int T = A.max_degree();
        for (int i = 0; i <= T; ++i)
            for (int j = 0; i + j <= T; ++j)
                for (int a = 0; a < A.dim(i); ++a)
                    for (int b = 0; b < A.dim(j); ++b) {
                        for (int c = 0; c < A.dim(i + j); ++c) {
                            auto x = f.from(A.coeff(i, a, j, b, c));
                            auto y = f.from(A.coeff(j, b, i, a, c));
                            if (sign(static_cast<long>(i) * j) < 0) y = f.neg(y);
                            if (x != y) {
                                out.push_back("graded commutativity fails for " + at(i, a) + at(j, b));
                                break;
                            }
                        }
                        if (i == j && a == b && i % 2 == 1)
                            for (int c = 0; c < A.dim(2 * i); ++c)
                                if (!f.is_zero(f.from(A.coeff(i, a, i, a, c)))) {
                                    out.push_back("odd square nonzero for " + at(i, a));
                                    break;
                                }
                    }
        for (int j = 0; j <= T; ++j)
            for (int b = 0; b < A.dim(j); ++b)
                for (int c = 0; c < A.dim(j); ++c) {
                    auto want = c == b ? f.one() : f.zero();
                    if (f.from(A.coeff(0, 0, j, b, c)) != want || f.from(A.coeff(j, b, 0, 0, c)) != want)
                        out.push_back("unit fails on " + at(j, b));
                }
        for (int i = 1; i <= T; ++i)
            for (int j = 1; i + j <= T; ++j)
                for (int k = 1; i + j + k <= T; ++k)
                    for (int a = 0; a < A.dim(i); ++a)
                        for (int b = 0; b < A.dim(j); ++b)
                            for (int c = 0; c < A.dim(k); ++c)
                                for (int z = 0; z < A.dim(i + j + k); ++z) {
                                    auto lhs = f.zero(), rhs = f.zero();
                                    for (int u = 0; u < A.dim(i + j); ++u)
                                        lhs = f.add(lhs, f.mul(f.from(A.coeff(i, a, j, b, u)),
                                                               f.from(A.coeff(i + j, u, k, c, z))));
                                    for (int u = 0; u < A.dim(j + k); ++u)
                                        rhs = f.add(rhs, f.mul(f.from(A.coeff(j, b, k, c, u)),
                                                               f.from(A.coeff(i, a, j + k, u, z))));
                                    if (lhs != rhs) {
                                        out.push_back("associativity fails for " + at(i, a) + at(j, b) + at(k, c));
                                        z = A.dim(i + j + k);
                                    }
                                }
        return out;
    });
}

std::vector<std::string> module_axiom_failures(const GradedModule& M) {
    const auto& A = M.algebra();
    return with_field(A.field(), [&](const auto& f) {
        std::vector<std::string> out;
        for (int j = M.lo(); j <= M.hi(); ++j)
            for (int m = 0; m < M.dim(j); ++m)
                for (int k = 0; k < M.dim(j); ++k)
                    if (f.from(M.coeff(0, 0, j, m, k)) != (k == m ? f.one() : f.zero()))
                        out.push_back("unit fails on " + at(j, m));
        for (int i = 1; i <= A.max_degree(); ++i)
            for (int i2 = 1; i + i2 <= A.max_degree(); ++i2)
                for (int j = M.lo(); j + i + i2 <= M.hi(); ++j)
                    for (int a = 0; a < A.dim(i); ++a)
                        for (int b = 0; b < A.dim(i2); ++b)
                            for (int m = 0; m < M.dim(j); ++m)
                                for (int z = 0; z < M.dim(i + i2 + j); ++z) {
                                    auto lhs = f.zero(), rhs = f.zero();
                                    // a(bm)
                                    for (int u = 0; u < M.dim(i2 + j); ++u)
                                        lhs = f.add(lhs, f.mul(f.from(M.coeff(i2, b, j, m, u)),
                                                               f.from(M.coeff(i, a, i2 + j, u, z))));
                                    // (ab)m
                                    for (int u = 0; u < A.dim(i + i2); ++u)
                                        rhs = f.add(rhs, f.mul(f.from(A.coeff(i, a, i2, b, u)),
                                                               f.from(M.coeff(i + i2, u, j, m, z))));
                                    if (lhs != rhs) {
                                        out.push_back("module associativity fails for " + at(i, a) + at(i2, b) +
                                                      at(j, m));
                                        z = M.dim(i + i2 + j);
                                    }
                                }
        return out;
    });
}

std::vector<StructureConstant> dump(const GradedAlgebra& A) {
    std::vector<StructureConstant> out;
    for (int i = 0; i <= A.max_degree(); ++i)
        for (int j = 0; i + j <= A.max_degree(); ++j)
            for (int a = 0; a < A.dim(i); ++a)
                for (int b = 0; b < A.dim(j); ++b)
                    for (int c = 0; c < A.dim(i + j); ++c) {
                        const Rational& v = A.coeff(i, a, j, b, c);
                        if (v != 0) out.push_back({i, a, j, b, c, v});
                    }
    return out;
}

// ---------------------------------------------------------------- basis change

namespace {

template <class F>
std::optional<std::vector<Vec<F>>> invert(const F& f, const std::vector<Vec<F>>& P) {
    const std::size_t n = P.size();
    Matrix<F> m(f, n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m.at(r, c) = P[r][c];
        m.at(r, n + r) = f.one();
    }
    auto piv = rref(f, m);
    if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) return std::nullopt;
    std::vector<Vec<F>> Q(n, Vec<F>(n, f.zero()));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) Q[r][c] = m.at(r, n + c);
    return Q;
}

} // namespace

GradedAlgebra change_basis(const GradedAlgebra& A, const std::vector<std::vector<std::vector<Rational>>>& mats) {
    return with_field(A.field(), [&](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        const int T = A.max_degree();
        if (static_cast<int>(mats.size()) != T + 1) throw InvalidInput("change_basis: one matrix per degree");
        std::vector<std::vector<Vec<F>>> P(static_cast<std::size_t>(T + 1)), Q(static_cast<std::size_t>(T + 1));
        for (int i = 0; i <= T; ++i) {
            const auto& Mi = mats[static_cast<std::size_t>(i)];
            if (static_cast<int>(Mi.size()) != A.dim(i)) throw InvalidInput("change_basis: wrong matrix size");
            for (const auto& row : Mi) P[static_cast<std::size_t>(i)].push_back(to_field(f, row));
            auto inv = invert(f, P[static_cast<std::size_t>(i)]);
            if (!inv) throw InvalidInput("change_basis: singular matrix in degree " + std::to_string(i));
            Q[static_cast<std::size_t>(i)] = *inv;
        }
        if (A.dim(0) != 1 || !f.is_one(P[0][0][0])) throw InvalidInput("change_basis: degree 0 must stay fixed");
        GradedAlgebra B(A.field(), A.dims());
        for (int i = 1; i <= T; ++i)
            for (int j = 1; i + j <= T; ++j) {
                const auto& Pi = P[static_cast<std::size_t>(i)];
                const auto& Pj = P[static_cast<std::size_t>(j)];
                const auto& Qk = Q[static_cast<std::size_t>(i + j)];
                for (int a = 0; a < A.dim(i); ++a)
                    for (int b = 0; b < A.dim(j); ++b) {
                        Vec<F> old(static_cast<std::size_t>(A.dim(i + j)), f.zero());
                        for (int x = 0; x < A.dim(i); ++x) {
                            if (f.is_zero(Pi[a][x])) continue;
                            for (int y = 0; y < A.dim(j); ++y) {
                                if (f.is_zero(Pj[b][y])) continue;
                                auto w = f.mul(Pi[a][x], Pj[b][y]);
                                for (int z = 0; z < A.dim(i + j); ++z)
                                    old[z] = f.add(old[z], f.mul(w, f.from(A.coeff(i, x, j, y, z))));
                            }
                        }
                        for (int c = 0; c < A.dim(i + j); ++c) {
                            auto v = f.zero();
                            for (int z = 0; z < A.dim(i + j); ++z) v = f.add(v, f.mul(old[z], Qk[z][c]));
                            B.set(i, a, j, b, c, f.to_rational(v));
                        }
                    }
            }
        return B;
    });
}

GradedAlgebra random_basis_change(const GradedAlgebra& A, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-3, 3);
    std::vector<std::vector<std::vector<Rational>>> mats;
    for (int i = 0; i <= A.max_degree(); ++i) {
        const int n = A.dim(i);
        if (i == 0) {
            mats.push_back({{Rational(1)}});
            continue;
        }
        for (;;) {
            std::vector<std::vector<Rational>> M(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
            for (auto& row : M)
                for (auto& x : row) x = dist(rng);
            bool ok = with_field(A.field(), [&](const auto& f) {
                using F = std::decay_t<decltype(f)>;
                std::vector<Vec<F>> P;
                for (const auto& row : M) P.push_back(to_field(f, row));
                return invert(f, P).has_value();
            });
            if (ok) {
                mats.push_back(std::move(M));
                break;
            }
        }
    }
    return change_basis(A, mats);
}

} // namespace codepth
