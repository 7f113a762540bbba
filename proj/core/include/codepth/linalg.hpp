#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace codepth {

template <class F>
using Vec = std::vector<typename F::value_type>;

template <class F>
struct SparseEntry {
    std::uint32_t index;
    typename F::value_type value;
};

template <class F>
using SparseVec = std::vector<SparseEntry<F>>;

// Dense row-major matrix.
template <class F>
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<typename F::value_type> data;

    Matrix() = default;
    Matrix(const F& f, std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, f.zero()) {}

    typename F::value_type& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const typename F::value_type& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

// In-place reduced row echelon form; returns the pivot column of each nonzero row.
template <class F>
std::vector<std::size_t> rref(const F& f, Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t p = r;
        while (p < m.rows && f.is_zero(m.at(p, c))) ++p;
        if (p == m.rows) continue;
        if (p != r)
            for (std::size_t k = 0; k < m.cols; ++k) std::swap(m.at(p, k), m.at(r, k));
        auto inv = f.inv(m.at(r, c));
        for (std::size_t k = c; k < m.cols; ++k) m.at(r, k) = f.mul(m.at(r, k), inv);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || f.is_zero(m.at(i, c))) continue;
            auto factor = m.at(i, c);
            for (std::size_t k = c; k < m.cols; ++k)
                if (!f.is_zero(m.at(r, k))) m.at(i, k) = f.sub(m.at(i, k), f.mul(factor, m.at(r, k)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
std::size_t rank(const F& f, Matrix<F> m) {
    return rref(f, m).size();
}

// Basis of the null space {x : m x = 0}, one vector per free column.
template <class F>
std::vector<Vec<F>> kernel(const F& f, Matrix<F> m) {
    auto pivots = rref(f, m);
    std::vector<char> is_pivot(m.cols, 0);
    for (auto c : pivots) is_pivot[c] = 1;
    std::vector<Vec<F>> out;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        Vec<F> v(m.cols, f.zero());
        v[free] = f.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(m.at(r, free));
        out.push_back(std::move(v));
    }
    return out;
}

// Incrementally maintained reduced echelon basis of a subspace of F^n.
// Optionally tracks, for each basis row, its expression in the inserted vectors.
template <class F>
class Echelon {
public:
    Echelon(const F& f, std::size_t n, bool track = false) : f_(f), n_(n), track_(track), pivot_row_(n, -1) {}

    std::size_t size() const { return rows_.size(); }
    std::size_t ambient() const { return n_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    bool is_pivot(std::size_t c) const { return pivot_row_[c] >= 0; }

    // Reduces v against the basis in place; coeffs (if given) accumulates the
    // combination of inserted vectors that was subtracted.
    void reduce(Vec<F>& v, Vec<F>* coeffs = nullptr) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            auto c = v[pivots_[r]];
            if (f_.is_zero(c)) continue;
            const auto& row = rows_[r];
            for (std::size_t k = 0; k < n_; ++k)
                if (!f_.is_zero(row[k])) v[k] = f_.sub(v[k], f_.mul(c, row[k]));
            if (coeffs && track_) {
                const auto& comb = combos_[r];
                if (coeffs->size() < comb.size()) coeffs->resize(comb.size(), f_.zero());
                for (std::size_t k = 0; k < comb.size(); ++k)
                    if (!f_.is_zero(comb[k])) (*coeffs)[k] = f_.add((*coeffs)[k], f_.mul(c, comb[k]));
            }
        }
    }

    // Row r of the basis expressed in the inserted vectors (tracking only).
    const Vec<F>& combination(std::size_t r) const { return combos_[r]; }
    const Vec<F>& row(std::size_t r) const { return rows_[r]; }
    long pivot_row(std::size_t c) const { return pivot_row_[c]; }

    bool contains(Vec<F> v) const {
        reduce(v);
        for (const auto& x : v)
            if (!f_.is_zero(x)) return false;
        return true;
    }

    // Inserts v; returns true iff it was independent. Every inserted vector
    // (independent or not) gets the next tracking index.
    bool insert(Vec<F> v) {
        std::size_t id = inserted_++;
        Vec<F> comb;
        if (track_) {
            comb.assign(inserted_, f_.zero());
            Vec<F> sub;
            reduce(v, &sub);
            for (std::size_t k = 0; k < sub.size(); ++k) comb[k] = f_.neg(sub[k]);
            comb[id] = f_.one();
        } else {
            reduce(v);
        }
        std::size_t p = 0;
        while (p < n_ && f_.is_zero(v[p])) ++p;
        if (p == n_) return false;
        auto inv = f_.inv(v[p]);
        for (auto& x : v) x = f_.mul(x, inv);
        for (auto& x : comb) x = f_.mul(x, inv);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            auto c = rows_[r][p];
            if (f_.is_zero(c)) continue;
            for (std::size_t k = 0; k < n_; ++k)
                if (!f_.is_zero(v[k])) rows_[r][k] = f_.sub(rows_[r][k], f_.mul(c, v[k]));
            if (!track_) continue;
            auto& cr = combos_[r];
            cr.resize(inserted_, f_.zero());
            for (std::size_t k = 0; k < comb.size(); ++k)
                if (!f_.is_zero(comb[k])) cr[k] = f_.sub(cr[k], f_.mul(c, comb[k]));
        }
        pivot_row_[p] = static_cast<long>(rows_.size());
        pivots_.push_back(p);
        rows_.push_back(std::move(v));
        combos_.push_back(std::move(comb));
        return true;
    }

private:
    F f_;
    std::size_t n_;
    bool track_;
    std::size_t inserted_ = 0;
    std::vector<long> pivot_row_;
    std::vector<std::size_t> pivots_;
    std::vector<Vec<F>> rows_;
    std::vector<Vec<F>> combos_;
};

} // namespace codepth
