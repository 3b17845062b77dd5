#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"

namespace izclose2 {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

/// Incremental exact row-space reducer over Q. Rows are kept normalized with
/// a leading 1 at their pivot; membership queries reduce against the stored
/// rows.
class RowSpace {
public:
    explicit RowSpace(std::size_t ncols) : ncols_(ncols) {}

    std::size_t ncols() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }

    /// Reduces `v` against the stored rows in place; afterwards every stored
    /// pivot position of `v` is zero.
    void reduce(QVec& v) const {
        for (const auto& row : rows_) {
            const Rat& c = v[row.pivot];
            if (c == 0) continue;
            Rat factor = c;
            for (std::size_t j = row.pivot; j < ncols_; ++j)
                if (row.data[j] != 0) v[j] -= factor * row.data[j];
        }
    }

    bool contains(QVec v) const {
        reduce(v);
        for (const auto& c : v)
            if (c != 0) return false;
        return true;
    }

    /// Adds a vector to the space. Returns true when the rank grew.
    bool add(QVec v) {
        reduce(v);
        std::size_t pivot = ncols_;
        for (std::size_t j = 0; j < ncols_; ++j)
            if (v[j] != 0) { pivot = j; break; }
        if (pivot == ncols_) return false;
        Rat lead = v[pivot];
        for (std::size_t j = pivot; j < ncols_; ++j)
            if (v[j] != 0) v[j] /= lead;
        rows_.push_back({pivot, std::move(v)});
        return true;
    }

private:
    struct Row {
        std::size_t pivot;
        QVec data;
    };
    std::size_t ncols_;
    std::vector<Row> rows_;
};

/// Reduced row echelon form in place; returns the pivot column of each
/// surviving nonzero row.
inline std::vector<std::size_t> rref(QMat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t ncols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t sel = m.size();
        for (std::size_t r = row; r < m.size(); ++r)
            if (m[r][col] != 0) { sel = r; break; }
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        Rat lead = m[row][col];
        for (std::size_t j = col; j < ncols; ++j)
            if (m[row][j] != 0) m[row][j] /= lead;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rat factor = m[r][col];
            for (std::size_t j = col; j < ncols; ++j)
                if (m[row][j] != 0) m[r][j] -= factor * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// Basis of the right null space of an nrows x ncols matrix.
inline std::vector<QVec> nullspace(QMat m, std::size_t ncols) {
    std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<QVec> basis;
    for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        QVec v(ncols, Rat(0));
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Particular solution of A x = b (free variables set to 0), or nullopt when
/// the system is inconsistent.
inline std::optional<QVec> solve_linear(QMat a, const QVec& b) {
    std::size_t ncols = a.empty() ? 0 : a[0].size();
    for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
    std::vector<std::size_t> pivots = rref(a);
    if (!pivots.empty() && pivots.back() == ncols) return std::nullopt; // pivot in b
    QVec x(ncols, Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][ncols];
    return x;
}

} // namespace izclose2
