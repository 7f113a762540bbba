#include "codepth/powser.hpp"

#include "codepth/error.hpp"

#include <algorithm>
#include <sstream>

namespace codepth {

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_.emplace(0, BigInt(c));
}

LaurentPoly::LaurentPoly(const BigInt& c) {
    if (c != 0) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(const BigInt& c, int exponent) {
    LaurentPoly p;
    p.add_term(exponent, c);
    return p;
}

LaurentPoly LaurentPoly::from_coeffs(const std::vector<long>& coeffs, int lo) {
    LaurentPoly p;
    for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(lo + static_cast<int>(i), BigInt(coeffs[i]));
    return p;
}

LaurentPoly LaurentPoly::from_coeffs(const std::vector<BigInt>& coeffs, int lo) {
    LaurentPoly p;
    for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(lo + static_cast<int>(i), coeffs[i]);
    return p;
}

BigInt LaurentPoly::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(int exponent, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int LaurentPoly::low() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPoly::high() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), e + k, c);
    return p;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly result(1), base = *this;
    while (k) {
        if (k & 1u) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

LaurentPoly LaurentPoly::eval_at_neg_t() const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, (e % 2 == 0) ? c : BigInt(-c));
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    terms_ = std::move(r.terms_);
    return *this;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << "*";
        os << "t";
        if (e != 1) os << "^" << (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    }
    return os.str();
}

LaurentPoly substitute_inverse(const LaurentPoly& p) {
    LaurentPoly r;
    for (const auto& [e, c] : p.terms()) r.add_term(-e, c);
    return r;
}

namespace {

void require_unit_low(const LaurentPoly& den, const char* what) {
    if (den.is_zero()) throw NonUnitDenominator(std::string(what) + " is zero");
    const BigInt& c = den.terms().begin()->second;
    if (c != 1 && c != -1)
        throw NonUnitDenominator(std::string(what) + " has lowest coefficient " + c.get_str() + ", not a unit");
}

} // namespace

RationalSeries::RationalSeries(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    require_unit_low(den_, "denominator");
}

std::optional<int> RationalSeries::order() const {
    if (num_.is_zero()) return std::nullopt;
    return num_.low() - den_.low();
}

RationalSeries RationalSeries::inverse() const { return RationalSeries(den_, num_); }

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) {
    if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalSeries operator/(const RationalSeries& a, const RationalSeries& b) {
    require_unit_low(b.num_, "divisor numerator");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

RationalSeries operator-(const RationalSeries& a) { return {-a.num_, a.den_}; }

bool operator==(const RationalSeries& a, const RationalSeries& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RationalSeries::str() const {
    if (den_ == LaurentPoly(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RationalSeries series(const LaurentPoly& num, const LaurentPoly& den) { return RationalSeries(num, den); }

std::vector<BigInt> taylor(const RationalSeries& s, int lo, int hi) {
    if (lo > hi) throw PreconditionViolation("taylor: lo > hi");
    std::vector<BigInt> out(static_cast<std::size_t>(hi - lo + 1));
    if (s.num().is_zero()) return out;
    // s = t^{-k} num / D with D(0) = u = ±1
    const int k = s.den().low();
    const LaurentPoly D = s.den().shifted(-k);
    const BigInt u = D.coeff(0);
    const int start = s.num().low();  // exponent of first term of num/D
    const int last = hi + k;          // last exponent of num/D needed
    if (last < start) return out;
    std::vector<BigInt> q(static_cast<std::size_t>(last - start + 1));
    std::vector<std::pair<int, BigInt>> dterms(D.terms().begin(), D.terms().end());
    for (int j = start; j <= last; ++j) {
        BigInt acc = s.num().coeff(j);
        for (std::size_t t = 1; t < dterms.size(); ++t) {
            int i = dterms[t].first;
            if (j - i < start) break;
            acc -= dterms[t].second * q[static_cast<std::size_t>(j - i - start)];
        }
        q[static_cast<std::size_t>(j - start)] = acc * u;
    }
    for (int e = lo; e <= hi; ++e) {
        int j = e + k;
        if (j >= start) out[static_cast<std::size_t>(e - lo)] = q[static_cast<std::size_t>(j - start)];
    }
    return out;
}

bool dominates(const RationalSeries& s1, const RationalSeries& s2, int N) {
    if (N < 0) throw PreconditionViolation("dominates: N < 0");
    RationalSeries d = s1 - s2;
    auto ord = d.order();
    if (!ord || *ord > N) return true;
    for (const BigInt& c : taylor(d, *ord, N))
        if (c < 0) return false;
    return true;
}

BigInt SeriesWindow::at(int exponent) const {
    if (exponent < lo || exponent > hi()) return 0;
    return c[static_cast<std::size_t>(exponent - lo)];
}

SeriesWindow window(const RationalSeries& s, int lo, int hi) { return {lo, taylor(s, lo, hi)}; }

std::vector<BigInt> cauchy_product(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> r(std::min(a.size(), b.size()));
    for (std::size_t n = 0; n < r.size(); ++n)
        for (std::size_t i = 0; i <= n; ++i) r[n] += a[i] * b[n - i];
    return r;
}

namespace {

// Solves M x = rhs over Q; returns nullopt when inconsistent. Free variables are set to 0.
std::optional<std::vector<Rational>> solve_rational(std::vector<std::vector<Rational>> M, std::vector<Rational> rhs,
                                                    std::size_t nvars) {
    std::size_t rows = M.size(), r = 0;
    std::vector<std::size_t> pivcol;
    for (std::size_t c = 0; c < nvars && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && M[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(M[p], M[r]);
        std::swap(rhs[p], rhs[r]);
        Rational inv = 1 / M[r][c];
        for (auto& x : M[r]) x *= inv;
        rhs[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || M[i][c] == 0) continue;
            Rational f = M[i][c];
            for (std::size_t k = 0; k < nvars; ++k) M[i][k] -= f * M[r][k];
            rhs[i] -= f * rhs[r];
        }
        pivcol.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (rhs[i] != 0) return std::nullopt;
    std::vector<Rational> x(nvars);
    for (std::size_t i = 0; i < r; ++i) x[pivcol[i]] = rhs[i];
    return x;
}

} // namespace

std::optional<RationalSeries> reconstruct(const SeriesWindow& w, int max_deg) {
    const int L = static_cast<int>(w.c.size());
    const int a = max_deg;
    auto s = [&](int j) -> Rational { return j < 0 ? Rational(0) : Rational(w.c[static_cast<std::size_t>(j)]); };
    for (int b = 0; b <= max_deg && a + 1 + b <= L; ++b) {
        std::vector<std::vector<Rational>> M;
        std::vector<Rational> rhs;
        for (int j = a + 1; j < L; ++j) {
            std::vector<Rational> row(static_cast<std::size_t>(b));
            for (int i = 1; i <= b; ++i) row[static_cast<std::size_t>(i - 1)] = s(j - i);
            M.push_back(std::move(row));
            rhs.push_back(-s(j));
        }
        auto sol = solve_rational(M, rhs, static_cast<std::size_t>(b));
        if (!sol) continue;
        LaurentPoly den(1);
        bool integral = true;
        for (int i = 1; i <= b; ++i) {
            const Rational& d = (*sol)[static_cast<std::size_t>(i - 1)];
            if (d.get_den() != 1) integral = false;
            den.add_term(i, d.get_num());
        }
        if (!integral) continue;
        LaurentPoly num;
        for (int j = 0; j <= std::min(a, L - 1); ++j) {
            Rational acc = s(j);
            for (int i = 1; i <= b; ++i) acc += Rational(den.coeff(i)) * s(j - i);
            num.add_term(j, acc.get_num());
        }
        RationalSeries r(num.shifted(w.lo), den);
        if (taylor(r, w.lo, w.hi()) == w.c) return r;
    }
    return std::nullopt;
}

} // namespace codepth
