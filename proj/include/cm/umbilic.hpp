#pragma once

#include "cm/normalize.hpp"
#include "cm/quadric_group.hpp"

#include <optional>

namespace cm {

/// Umbilicity of the origin, read off the normal form: for n = 1 the
/// vanishing of the (4,2)/(2,4) parts at u = 0, for n >= 2 the vanishing of
/// the (2,2) part at u = 0.
bool is_umbilic_origin(const Hypersurface& M);

/// Re-center a normal form along the distinguished curve: u -> u + u0,
/// exact on the truncated polynomial.  The result is again in normal form.
Hypersurface translate_along_u(const Hypersurface& M, const Rational& u0);

/// Least weight >= 3 of a nonvanishing part of F - <z,z>, or nullopt when
/// the surface is the hyperquadric through its truncation.
std::optional<int> lowest_weight(const Hypersurface& M);

/// Least total bidegree s+t >= 4 carrying a nonzero F_st (any u power), or
/// nullopt.  The descent step lowers this grading, not the weight (which is
/// a biholomorphic invariant).
std::optional<int> lowest_codegree(const Hypersurface& M);

struct LowerWeightResult {
    std::vector<GaussRational> a;
    NormalizationResult normalization;
};

/// Degree-lowering step: for a normal form with lowest codegree k >= 7 and
/// nonzero u = 0 slice in codegree k, find a vector a (searched over a fixed
/// list of small Gaussian rationals) so that the normalization with
/// (id, a, 1, 0) has nonzero codegree-(k-1) part.
LowerWeightResult lower_weight(const Hypersurface& M, int K);

struct ReductionStep {
    enum class Kind { AStep, ScaleStep, RStep };
    Kind kind;
    InitialValue sigma;
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    Hypersurface final;
};

enum class MoserVariant { F43, F52 };

/// Dimension-3 reduced normal form: F24(.,0) = z^2 zbar^4,
/// Re z^2 dF24/du(.,0) = 0, and F43(.,0) = 0 (variant F43) or F52(.,0) = 0
/// (variant F52).
ReductionTrace moser_reduce(const Hypersurface& M, MoserVariant variant);

/// Invariants of the dimension >= 5 reduction: the trace power
/// Delta^4 (F22)^2 as a u series (value and u derivative at 0) and the
/// mixed vector Delta^4 (F22 dF23/dzbar)|0.
struct WebsterInvariants {
    Rational value0;                  // Delta^4 (F22)^2 at 0
    Rational dvalue0;                 // d/du of the same at 0
    std::vector<GaussRational> mixed; // Delta^4 (F22 dF23/dzbar_zeta)|0
};

WebsterInvariants webster_invariants(const Hypersurface& M);

/// Dimension >= 5 reduced normal form: Delta^4(F22)^2|0 = +-1, its u
/// derivative 0 at 0, and the mixed invariant 0.
ReductionTrace webster_reduce(const Hypersurface& M);

/// True iff the normalization with identity initial value is the
/// hyperquadric through weight K.
bool spherical_to_order(const Hypersurface& M, int K);

} // namespace cm
