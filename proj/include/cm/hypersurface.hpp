#pragma once

#include "cm/hermitian.hpp"
#include "cm/series.hpp"

#include <optional>
#include <vector>

namespace cm {

/// Real hypersurface v = F(z, zbar, u) near the origin, with nondegenerate
/// weight-2 part equal to the declared Hermitian form.
class Hypersurface {
public:
    Hypersurface(Signature sig, RealSeries F);

    static Hypersurface hyperquadric(const Signature& sig, int trunc);

    const Signature& sig() const { return sig_; }
    const RealSeries& defining_series() const { return F_; }
    int truncation() const { return F_.truncation(); }
    int dim() const { return sig_.n; }

    /// Defining series minus the Hermitian form.
    RealSeries tail() const;

    friend bool operator==(const Hypersurface& a, const Hypersurface& b) {
        return a.sig_ == b.sig_ && a.F_ == b.F_;
    }
    friend bool operator!=(const Hypersurface& a, const Hypersurface& b) { return !(a == b); }

private:
    Signature sig_;
    RealSeries F_;
};

/// Verifies the weight-2 part of F equals the declared form and returns the
/// signature; throws precondition_error (degenerate / unsupported Levi form)
/// otherwise.
Signature levi_signature(const Signature& declared, const RealSeries& F);
Signature levi_signature(const Hypersurface& M);

struct NormalFormViolation {
    enum class Kind { LowBidegree, Trace22, Trace23, Trace33 };
    Kind kind;
    int s;
    int t;
    int weight;
    SeriesC residual;
};

struct NormalFormReport {
    bool is_normal = true;
    std::vector<NormalFormViolation> violations;
};

/// Normal form predicate: beyond weight 2 only bidegrees with min(s,t) >= 2
/// occur, and the three trace conditions hold identically in u.
NormalFormReport check_normal_form(const Hypersurface& M);

const char* to_string(NormalFormViolation::Kind k);

} // namespace cm
