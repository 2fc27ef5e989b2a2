#pragma once

// Shared internals of the transform / normalization solvers: monomial
// enumeration in canonical order, real/imaginary parts of series, and the
// unknown-column builders for the weight-by-weight linear solves.

#include "cm/hermitian.hpp"
#include "cm/holo_series.hpp"
#include "cm/matrix.hpp"
#include "cm/series.hpp"

#include <vector>

namespace cm::engine {

/// All exponent vectors of length n with the given total, ascending lex.
std::vector<Exponents> exponent_lists(int n, int total);

/// Holomorphic monomials of exact weight, canonical order.
std::vector<HoloMonomial> holo_monomials(int n, int weight);

/// Real monomials of exact weight, canonical order.
std::vector<RealMonomial> real_monomials(int n, int weight);

/// Conjugation-class representatives (mono <= conj(mono)) of exact weight.
std::vector<RealMonomial> real_class_reps(int n, int weight);

bool is_class_rep(const RealMonomial& m);

SeriesC re_part(const SeriesC& s);
SeriesC im_part(const SeriesC& s);

/// (Cz)_a as weight-1 series for a matrix C.
std::vector<SeriesC> linear_z_series(const GMatrix& C, int trunc);

/// One real unknown of the weight-m solves.
struct Unknown {
    enum class Kind { F, G, FStar };
    Kind kind;
    int comp = -1;       // f component index
    HoloMonomial hm;     // for F / G
    RealMonomial rm;     // class representative for FStar
    bool imag = false;   // which real part of the complex coefficient
    int block = 0;       // |s - t| class, used to split the solve
};

/// Geometric context the columns are built against: the weight-1 part of
/// the transformed z, the weight-2 parts of w = u + i F2 and of u*.
struct ColumnContext {
    Signature sig;
    std::vector<SeriesC> z1;      // n series of weight 1
    std::vector<SeriesC> z1conj;  // conjugates
    SeriesC w2;                   // u + i F2(z, zbar, u)
    SeriesC u2;                   // weight-2 part of Re g(z, u + i F)
};

ColumnContext make_context(const Signature& sig, const GMatrix& C, const Rational& rho, int m);

/// Contribution of a unit unknown to the identity residual
///   Im g(z, u+iF) - Fout(f(z,u+iF), conj, Re g(z,u+iF)),
/// restricted to weight m.
SeriesC residual_column(const Unknown& u, const ColumnContext& ctx, int m);

/// Trace image of an FStar unknown: Delta^order applied to its real-series
/// contribution, where order is 1, 2, 3 for bidegree classes (2,2),
/// (2,3)/(3,2), (3,3) and 0 (empty series) otherwise.
SeriesC trace_column(const Unknown& u, const Signature& sig, int m);

/// The real-series increment this unknown contributes per unit value
/// (rep + conj for FStar; used to write solved values back).
SeriesC fstar_increment(const Unknown& u, int n, int trunc);

/// Identity residual for explicit data, truncated at trunc:
///   Im g(z, u+iF) - Fout(f(z,u+iF), conj(...), Re g(z,u+iF)).
SeriesC identity_residual(const std::vector<HoloSeries>& f, const HoloSeries& g, const SeriesC& F,
                          const SeriesC& Fout, int trunc);

int unknown_block(const Unknown& u);

/// Unknowns of a weight-m solve.  with_fg adds the map coefficients;
/// fstar_normal keeps only surface bidegrees with min(s,t) >= 2.
std::vector<Unknown> enumerate_unknowns(int n, int m, bool with_fg, bool fstar_normal);

struct PinRow {
    size_t unknown;
    Rational value;
};

struct WeightSolveResult {
    std::vector<Rational> values;
    int equations = 0;
    int rank = 0;
};

/// Solve  known + sum_j x_j col_j = 0  over the weight-m coefficient classes,
/// plus trace rows (= 0) and pin rows.  When split_blocks is set the system
/// is decomposed into independent |s-t| classes (valid whenever every column
/// preserves the class, which holds when the u-substitution argument has no
/// (2,0)/(0,2) part).  The solution must exist and be unique.
WeightSolveResult solve_weight_system(int m, const Signature& sig,
                                      const std::vector<Unknown>& unknowns,
                                      const std::vector<SeriesC>& cols,
                                      const std::vector<SeriesC>& trace_cols,
                                      const SeriesC& known, const std::vector<PinRow>& pins,
                                      bool split_blocks);

} // namespace cm::engine
