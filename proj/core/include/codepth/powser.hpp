#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace codepth {

using BigInt = mpz_class;
using Rational = mpq_class;

// Integer Laurent polynomial; only nonzero coefficients are stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c);
    LaurentPoly(const BigInt& c);

    static LaurentPoly monomial(const BigInt& c, int exponent);
    static LaurentPoly t(int exponent = 1) { return monomial(1, exponent); }
    // coeffs[i] is the coefficient of t^(lo+i)
    static LaurentPoly from_coeffs(const std::vector<long>& coeffs, int lo = 0);
    static LaurentPoly from_coeffs(const std::vector<BigInt>& coeffs, int lo = 0);

    const std::map<int, BigInt>& terms() const { return terms_; }
    BigInt coeff(int exponent) const;
    void add_term(int exponent, const BigInt& c);

    bool is_zero() const { return terms_.empty(); }
    int low() const;   // lowest exponent; 0 for the zero polynomial
    int high() const;  // highest exponent; 0 for the zero polynomial

    LaurentPoly shifted(int k) const;  // t^k * this
    LaurentPoly pow(unsigned k) const;
    LaurentPoly eval_at_neg_t() const;  // t -> -t

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly{} - a; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    std::string str() const;

private:
    std::map<int, BigInt> terms_;
};

// t -> t^{-1}
LaurentPoly substitute_inverse(const LaurentPoly& p);

// num/den with den's lowest coefficient a unit, so the Laurent expansion has
// integer coefficients. Equality is cross-multiplication.
class RationalSeries {
public:
    RationalSeries() : den_(1) {}
    RationalSeries(const LaurentPoly& num) : num_(num), den_(1) {}
    RationalSeries(long c) : num_(c), den_(1) {}
    RationalSeries(const LaurentPoly& num, const LaurentPoly& den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    // Exponent of the first nonzero Laurent coefficient; nullopt for zero.
    std::optional<int> order() const;

    RationalSeries shifted(int k) const { return {num_.shifted(k), den_}; }
    RationalSeries inverse() const;

    friend RationalSeries operator+(const RationalSeries& a, const RationalSeries& b);
    friend RationalSeries operator-(const RationalSeries& a, const RationalSeries& b);
    friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
    friend RationalSeries operator/(const RationalSeries& a, const RationalSeries& b);
    friend RationalSeries operator-(const RationalSeries& a);
    friend bool operator==(const RationalSeries& a, const RationalSeries& b);
    friend bool operator!=(const RationalSeries& a, const RationalSeries& b) { return !(a == b); }

    std::string str() const;

private:
    LaurentPoly num_;
    LaurentPoly den_;
};

RationalSeries series(const LaurentPoly& num, const LaurentPoly& den);

// Laurent coefficients of t^lo .. t^hi.
std::vector<BigInt> taylor(const RationalSeries& s, int lo, int hi);

// True iff every coefficient of s1 - s2 in exponents <= N is nonnegative.
bool dominates(const RationalSeries& s1, const RationalSeries& s2, int N);

// A finite window of Laurent coefficients, c[i] belongs to t^(lo+i).
struct SeriesWindow {
    int lo = 0;
    std::vector<BigInt> c;

    int hi() const { return lo + static_cast<int>(c.size()) - 1; }
    BigInt at(int exponent) const;
    LaurentPoly poly() const { return LaurentPoly::from_coeffs(c, lo); }
    friend bool operator==(const SeriesWindow& a, const SeriesWindow& b) = default;
};

SeriesWindow window(const RationalSeries& s, int lo, int hi);

// Smallest-degree rational function matching every coefficient of w, with
// numerator and denominator degrees bounded by max_deg (relative to w.lo).
// Returns nullopt when no such function with integer coefficients exists.
std::optional<RationalSeries> reconstruct(const SeriesWindow& w, int max_deg);

std::vector<BigInt> cauchy_product(const std::vector<BigInt>& a, const std::vector<BigInt>& b);

} // namespace codepth
