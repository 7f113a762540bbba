#pragma once

#include "codepth/powser.hpp"

#include <vector>

namespace codepth::testing {

// Power series coefficients of num/den by the plain recurrence
// den_0 c_i = num_i - sum_{k>=1} den_k c_{i-k}; den_0 must be +-1.
inline std::vector<BigInt> expand(const std::vector<long>& num, const std::vector<long>& den, int N) {
    std::vector<BigInt> c(static_cast<std::size_t>(N + 1));
    for (int i = 0; i <= N; ++i) {
        BigInt x = i < static_cast<int>(num.size()) ? BigInt(num[static_cast<std::size_t>(i)]) : BigInt(0);
        for (int k = 1; k <= i && k < static_cast<int>(den.size()); ++k)
            x -= den[static_cast<std::size_t>(k)] * c[static_cast<std::size_t>(i - k)];
        c[static_cast<std::size_t>(i)] = x * den[0];
    }
    return c;
}

inline std::vector<BigInt> ints(std::initializer_list<long> xs) {
    std::vector<BigInt> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline LaurentPoly poly(std::initializer_list<long> coeffs, int lo = 0) {
    return LaurentPoly::from_coeffs(std::vector<long>(coeffs), lo);
}

} // namespace codepth::testing
