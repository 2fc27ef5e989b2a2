#include "cm/linear_system.hpp"

namespace cm {

void LinearSystemQ::add_row(const std::vector<std::pair<int, Rational>>& coeffs, Rational rhs) {
    std::vector<Rational> row(cols_);
    for (const auto& [j, v] : coeffs) {
        if (j < 0 || j >= cols_) throw error("column index out of range");
        row[j] += v;
    }
    rows_.push_back(std::move(row));
    rhs_.push_back(std::move(rhs));
}

LinearSystemQ::Result LinearSystemQ::eliminate(bool with_rhs) const {
    std::vector<std::vector<Rational>> a = rows_;
    std::vector<Rational> b = rhs_;
    const int m = static_cast<int>(a.size());

    Result res;
    std::vector<int> pivot_col_of_row;
    int next_row = 0;
    for (int c = 0; c < cols_ && next_row < m; ++c) {
        int p = -1;
        for (int r = next_row; r < m; ++r)
            if (!a[r][c].is_zero()) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(a[p], a[next_row]);
        if (with_rhs) std::swap(b[p], b[next_row]);
        const Rational inv = a[next_row][c].inverse();
        for (int j = c; j < cols_; ++j) a[next_row][j] *= inv;
        if (with_rhs) b[next_row] *= inv;
        for (int r = 0; r < m; ++r) {
            if (r == next_row || a[r][c].is_zero()) continue;
            const Rational f = a[r][c];
            for (int j = c; j < cols_; ++j) a[r][j] -= f * a[next_row][j];
            if (with_rhs) b[r] -= f * b[next_row];
        }
        pivot_col_of_row.push_back(c);
        ++next_row;
    }
    res.rank = next_row;

    if (with_rhs) {
        for (int r = res.rank; r < m; ++r)
            if (!b[r].is_zero()) {
                res.consistent = false;
                break;
            }
        res.unique = res.consistent && res.rank == cols_;
        if (res.unique) {
            res.solution.assign(cols_, Rational(0));
            for (int r = 0; r < res.rank; ++r) res.solution[pivot_col_of_row[r]] = b[r];
        }
    }
    return res;
}

LinearSystemQ::Result LinearSystemQ::solve() const { return eliminate(true); }

int LinearSystemQ::rank() const { return eliminate(false).rank; }

std::vector<std::vector<Rational>> LinearSystemQ::nullspace() const {
    std::vector<std::vector<Rational>> a = rows_;
    const int m = static_cast<int>(a.size());
    std::vector<int> pivot_col_of_row;
    std::vector<bool> is_pivot(cols_, false);
    int next_row = 0;
    for (int c = 0; c < cols_ && next_row < m; ++c) {
        int p = -1;
        for (int r = next_row; r < m; ++r)
            if (!a[r][c].is_zero()) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(a[p], a[next_row]);
        const Rational inv = a[next_row][c].inverse();
        for (int j = c; j < cols_; ++j) a[next_row][j] *= inv;
        for (int r = 0; r < m; ++r) {
            if (r == next_row || a[r][c].is_zero()) continue;
            const Rational f = a[r][c];
            for (int j = c; j < cols_; ++j) a[r][j] -= f * a[next_row][j];
        }
        pivot_col_of_row.push_back(c);
        is_pivot[c] = true;
        ++next_row;
    }
    std::vector<std::vector<Rational>> basis;
    for (int c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rational> v(cols_, Rational(0));
        v[c] = Rational(1);
        for (size_t r = 0; r < pivot_col_of_row.size(); ++r) v[pivot_col_of_row[r]] = -a[r][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace cm
