#pragma once

#include "codepth/galg.hpp"
#include "codepth/powser.hpp"

#include <memory>
#include <string>
#include <vector>

namespace codepth {

enum class BettiMode { dg, ring };

// dg mode: i is the total degree and j is unused (0).
// ring mode: i is homological, j internal.
struct BettiEntry {
    int i = 0;
    int j = 0;
    BigInt rank;
    bool exact = true;

    friend bool operator==(const BettiEntry&, const BettiEntry&) = default;
};

struct BettiTable {
    BettiMode mode = BettiMode::dg;
    std::vector<BettiEntry> entries;  // sorted by (i, j), zero ranks omitted
    std::vector<std::string> flags;

    // Sum over j of the entries with homological (dg: total) degree i.
    BigInt total(int i) const;
    bool total_exact(int i) const;
    std::vector<BigInt> totals(int imax) const;
};

// Minimal semifree resolution of M over B (zero differentials), all
// generators of total degree <= bound. Throws InternalInconsistency when the
// minimality or Euler checks fail.
BettiTable dg_resolution(const GradedAlgebra& B, const GradedModule& M, int bound);

// First syzygy of M: kernel of B⊗(M/B_+M) -> M for a chosen lift of generators.
GradedModule first_syzygy(const GradedModule& M);

// Poincaré and Bass series over one algebra; results are cached between calls.
class DgOracle {
public:
    explicit DgOracle(const GradedAlgebra& B);
    ~DgOracle();
    DgOracle(DgOracle&&) noexcept;
    DgOracle& operator=(DgOracle&&) noexcept;

    const GradedAlgebra& algebra() const;

    // P^B_M on [M.lo, N]
    SeriesWindow poincare(const GradedModule& M, int N);
    // P^B_k on [0, N]
    SeriesWindow residue(int N);
    // I^B_N = P^B_{N*} on [-N.hi, hi]
    SeriesWindow bass(const GradedModule& N, int hi);
    // I_B on [-top B, hi]
    SeriesWindow bass(int hi);

    std::size_t cached_modules() const;

    struct Impl;

private:
    std::unique_ptr<Impl> impl_;
};

SeriesWindow poincare_oracle(const GradedAlgebra& B, const GradedModule& M, int N);
SeriesWindow poincare_oracle(const GradedAlgebra& B, int N);  // M = k
SeriesWindow bass_oracle(const GradedAlgebra& B, int N);

// I^B_N computed directly as ranks of Ext_B(k, N) (cochains on the minimal
// resolution of k), independent of the P_{N*} route. Window [lo, hi].
SeriesWindow ext_oracle(const GradedAlgebra& B, const GradedModule& N, int lo, int hi);

} // namespace codepth
