#pragma once

#include "codepth/classtable.hpp"
#include "codepth/powser.hpp"

#include <string>
#include <vector>

namespace codepth {

enum class ExceptionKind { none, wxwy, wxwyz };

std::string to_string(ExceptionKind k);

struct GrowthReport {
    int N = 0;
    int d = 0;
    std::vector<BigInt> mu;          // mu^d .. mu^{d+N}
    std::vector<bool> strict;        // strict[i]: mu^{d+i} >= mu^{d+i-1} + 1, for i = 1..N (strict[0] unused)
    ExceptionKind exception = ExceptionKind::none;
    Rational gamma_window;           // window bound, min ratio mu^{d+i}/mu^{d+i-1}
    int gamma_index = 0;             // an i attaining gamma_window
};

// mu^{d+i} - mu^{d+i-1}, i = 0..N, from (1-t) s / t^d.
std::vector<BigInt> bass_diffs(const RationalSeries& s, int d, int N);

// Taylor coefficients of (f-g)/(1-t^2).
std::vector<BigInt> coeffs_a(const LaurentPoly& f, const LaurentPoly& g, int N);

// Taylor coefficients of f (1+t^3)^s / (1-t^2)^2, with 0 <= s <= s_max (= m-p).
std::vector<BigInt> coeffs_b(const LaurentPoly& f, int s, int N, int s_max);

// a_0 + (a_1 - 1) t + sum_{i>=2} (a_i + (l-1) a_{i-2}) t^i, truncated at t^N.
LaurentPoly lemma_a_bound(const std::vector<BigInt>& a, int l, int N);
// b_0 + b_1 t + sum_{i>=2} (b_i + (l-2) b_{i-2}) t^i, truncated at t^N.
LaurentPoly lemma_b_bound(const std::vector<BigInt>& b, int l, int N);

ExceptionKind exception_kind(const ClassId& cls, const RingInvariants& inv);

GrowthReport growth_verdict(const ClassId& cls, const RingInvariants& inv, int N = 12);

} // namespace codepth
