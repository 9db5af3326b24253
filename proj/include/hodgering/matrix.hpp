#ifndef HODGERING_MATRIX_HPP
#define HODGERING_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hodgering/rational.hpp"

namespace hodgering {

enum class Storage { Auto, Dense, Sparse };

// Matrix of exact rationals. Entry storage is dense; Storage selects the
// elimination path (Auto switches to the sparse path below 25% density).
class RationalMatrix {
public:
    RationalMatrix(int rows, int cols, Storage storage = Storage::Auto)
        : rows_(rows), cols_(cols), storage_(storage),
          data_(static_cast<size_t>(rows) * cols, Rational(0)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Storage storage() const { return storage_; }
    void set_storage(Storage s) { storage_ = s; }

    const Rational& at(int i, int j) const { return data_[index(i, j)]; }
    void set(int i, int j, const Rational& v) { data_[index(i, j)] = v; }

    size_t nonzero_count() const {
        size_t n = 0;
        for (const auto& v : data_)
            if (v != 0) ++n;
        return n;
    }

    RationalMatrix transposed() const {
        RationalMatrix t(cols_, rows_, storage_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (at(i, j) != 0) t.set(j, i, at(i, j));
        return t;
    }

private:
    size_t index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::out_of_range("matrix index out of bounds");
        return static_cast<size_t>(i) * cols_ + j;
    }

    int rows_, cols_;
    Storage storage_;
    std::vector<Rational> data_;
};

struct RankKernel {
    int rank = 0;
    int kernel_dim = 0;
    std::vector<std::vector<Rational>> kernel_basis;
};

namespace detail {

// Shared echelon data produced by both elimination paths: pivot rows in
// the order they were chosen, with their final (fraction-free) content.
struct Echelon {
    std::vector<std::pair<int, int>> pivots;  // (column, original row)
    std::vector<int> free_cols;
    // Final state of each pivot row, sparse (col, value), sorted by col.
    std::vector<std::vector<std::pair<int, Integer>>> pivot_rows;
};

inline size_t bit_length(const Integer& v) {
    return mpz_sizeinbase(v.get_mpz_t(), 2);
}

// Clears denominators row by row; scaling a row changes neither rank nor
// kernel.
inline std::vector<std::vector<Integer>> integer_rows(const RationalMatrix& m) {
    std::vector<std::vector<Integer>> rows(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        Integer scale = 1;
        for (int j = 0; j < m.cols(); ++j) {
            const Rational& q = m.at(i, j);
            if (q != 0) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den().get_mpz_t());
        }
        rows[i].resize(m.cols());
        for (int j = 0; j < m.cols(); ++j) {
            const Rational& q = m.at(i, j);
            if (q != 0) rows[i][j] = q.get_num() * (scale / q.get_den());
        }
    }
    return rows;
}

// Bareiss elimination, dense rows. Pivot rule: columns processed left to
// right; within a column the active row whose entry has the smallest bit
// length wins, lowest row index breaking ties.
inline Echelon bareiss_dense(std::vector<std::vector<Integer>> rows, int ncols) {
    Echelon ech;
    std::vector<char> active(rows.size(), 1);
    Integer prev = 1;
    for (int c = 0; c < ncols; ++c) {
        int piv_row = -1;
        size_t piv_bits = 0;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (!active[i] || rows[i][c] == 0) continue;
            size_t bits = bit_length(rows[i][c]);
            if (piv_row < 0 || bits < piv_bits) {
                piv_row = static_cast<int>(i);
                piv_bits = bits;
            }
        }
        if (piv_row < 0) {
            ech.free_cols.push_back(c);
            continue;
        }
        active[piv_row] = 0;
        const Integer piv = rows[piv_row][c];
        for (size_t i = 0; i < rows.size(); ++i) {
            if (!active[i]) continue;
            const Integer t = rows[i][c];
            for (int j = c; j < ncols; ++j) {
                Integer v = piv * rows[i][j];
                if (t != 0 && rows[piv_row][j] != 0) v -= t * rows[piv_row][j];
                if (v != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                rows[i][j] = std::move(v);
            }
        }
        prev = piv;
        ech.pivots.emplace_back(c, piv_row);
        std::vector<std::pair<int, Integer>> stored;
        for (int j = c; j < ncols; ++j)
            if (rows[piv_row][j] != 0) stored.emplace_back(j, rows[piv_row][j]);
        ech.pivot_rows.push_back(std::move(stored));
    }
    return ech;
}

// Same elimination on sparse rows (sorted (col, value) pairs). Pivot rule
// and arithmetic are identical to the dense path; results must agree
// bit for bit.
inline Echelon bareiss_sparse(const std::vector<std::vector<Integer>>& dense_rows, int ncols) {
    using SparseRow = std::vector<std::pair<int, Integer>>;
    std::vector<SparseRow> rows(dense_rows.size());
    for (size_t i = 0; i < dense_rows.size(); ++i)
        for (int j = 0; j < ncols; ++j)
            if (dense_rows[i][j] != 0) rows[i].emplace_back(j, dense_rows[i][j]);

    auto entry_at = [](const SparseRow& r, int c) -> const Integer* {
        auto it = std::lower_bound(r.begin(), r.end(), c,
                                   [](const auto& p, int col) { return p.first < col; });
        return (it != r.end() && it->first == c) ? &it->second : nullptr;
    };

    Echelon ech;
    std::vector<char> active(rows.size(), 1);
    Integer prev = 1;
    for (int c = 0; c < ncols; ++c) {
        int piv_row = -1;
        size_t piv_bits = 0;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (!active[i]) continue;
            const Integer* e = entry_at(rows[i], c);
            if (!e) continue;
            size_t bits = bit_length(*e);
            if (piv_row < 0 || bits < piv_bits) {
                piv_row = static_cast<int>(i);
                piv_bits = bits;
            }
        }
        if (piv_row < 0) {
            ech.free_cols.push_back(c);
            continue;
        }
        active[piv_row] = 0;
        const Integer piv = *entry_at(rows[piv_row], c);
        const SparseRow& prow = rows[piv_row];
        for (size_t i = 0; i < rows.size(); ++i) {
            if (!active[i]) continue;
            const Integer* tp = entry_at(rows[i], c);
            Integer t = tp ? *tp : Integer(0);
            SparseRow merged;
            merged.reserve(rows[i].size() + prow.size());
            auto a = rows[i].begin(), ae = rows[i].end();
            auto b = prow.begin(), be = prow.end();
            while (a != ae || b != be) {
                int ca = (a != ae) ? a->first : ncols;
                int cb = (b != be) ? b->first : ncols;
                int col = std::min(ca, cb);
                Integer v = 0;
                if (ca == col) v += piv * a->second, ++a;
                if (cb == col && t != 0) v -= t * b->second;
                if (cb == col) ++b;
                if (v != 0) {
                    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                    merged.emplace_back(col, std::move(v));
                }
            }
            rows[i] = std::move(merged);
        }
        prev = piv;
        ech.pivots.emplace_back(c, piv_row);
        ech.pivot_rows.push_back(prow);
    }
    return ech;
}

inline Echelon eliminate(const RationalMatrix& m) {
    auto rows = integer_rows(m);
    Storage mode = m.storage();
    if (mode == Storage::Auto) {
        size_t cells = static_cast<size_t>(m.rows()) * m.cols();
        mode = (cells > 0 && 4 * m.nonzero_count() < cells) ? Storage::Sparse : Storage::Dense;
    }
    return mode == Storage::Sparse ? bareiss_sparse(rows, m.cols())
                                   : bareiss_dense(std::move(rows), m.cols());
}

// Normalizes to a primitive integer vector with positive leading entry.
inline void normalize_kernel_vector(std::vector<Rational>& v) {
    Integer den_lcm = 1, num_gcd = 0;
    for (const auto& q : v) {
        if (q == 0) continue;
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    }
    for (auto& q : v) q *= Rational(den_lcm);
    for (const auto& q : v)
        if (q != 0) mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
    if (num_gcd == 0) return;
    for (auto& q : v) q /= Rational(num_gcd);
    for (const auto& q : v) {
        if (q == 0) continue;
        if (q < 0)
            for (auto& w : v) w = -w;
        break;
    }
}

}  // namespace detail

inline int rank(const RationalMatrix& m) {
    return static_cast<int>(detail::eliminate(m).pivots.size());
}

// rank + kernel_dim = cols; every basis vector v satisfies Mv = 0.
inline RankKernel rank_and_kernel(const RationalMatrix& m) {
    detail::Echelon ech = detail::eliminate(m);
    RankKernel rk;
    rk.rank = static_cast<int>(ech.pivots.size());
    rk.kernel_dim = m.cols() - rk.rank;

    for (int fc : ech.free_cols) {
        std::vector<Rational> v(m.cols(), Rational(0));
        v[fc] = 1;
        // Pivot rows in reverse pick off the pivot variables one by one.
        for (size_t k = ech.pivots.size(); k-- > 0;) {
            int pc = ech.pivots[k].first;
            Rational sum = 0;
            Rational diag = 0;
            for (const auto& [col, val] : ech.pivot_rows[k]) {
                if (col == pc)
                    diag = Rational(val);
                else if (v[col] != 0)
                    sum += Rational(val) * v[col];
            }
            v[pc] = -sum / diag;
        }
        detail::normalize_kernel_vector(v);
        rk.kernel_basis.push_back(std::move(v));
    }
    return rk;
}

inline int kernel_dim(const RationalMatrix& m) { return m.cols() - rank(m); }

inline int cokernel_dim(const RationalMatrix& m) { return m.rows() - rank(m); }

}  // namespace hodgering

#endif
