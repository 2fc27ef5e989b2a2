#pragma once

#include "cm/errors.hpp"
#include "cm/rational.hpp"

#include <utility>
#include <vector>

namespace cm {

/// Exact linear system over Q.  Rows are added sparsely; elimination is
/// Gauss-Jordan with the first nonzero entry in canonical column order as
/// pivot, so results are deterministic.
class LinearSystemQ {
public:
    explicit LinearSystemQ(int cols) : cols_(cols) {}

    int cols() const { return cols_; }
    int rows() const { return static_cast<int>(rows_.size()); }

    void add_row(const std::vector<std::pair<int, Rational>>& coeffs, Rational rhs);

    struct Result {
        int rank = 0;
        bool consistent = true;
        bool unique = false;
        std::vector<Rational> solution;  // meaningful when unique
    };

    /// Eliminates a copy of the system.
    Result solve() const;

    /// Rank of the coefficient matrix (right-hand sides ignored).
    int rank() const;

    int kernel_dimension() const { return cols_ - rank(); }

    /// Basis of the nullspace of the coefficient matrix, one vector per free
    /// column of the reduced echelon form.
    std::vector<std::vector<Rational>> nullspace() const;

private:
    Result eliminate(bool with_rhs) const;

    int cols_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> rhs_;
};

} // namespace cm
