#pragma once

#include "cm/holo_series.hpp"
#include "cm/matrix.hpp"

#include <vector>

namespace cm {

/// Origin-preserving holomorphic map (f, g) of C^n x C with invertible
/// linear part and dg/dz|0 = 0.  Truncation is multiplicative: for carried
/// weight K the components f are known through weight K-1 and g through K.
class HoloMap {
public:
    HoloMap(std::vector<HoloSeries> f, HoloSeries g);

    static HoloMap identity(int n, int K);

    int dim() const { return n_; }
    int truncation() const { return K_; }
    const std::vector<HoloSeries>& f() const { return f_; }
    const HoloSeries& g() const { return g_; }

    /// df/dz at the origin.
    GMatrix linear_z() const;
    /// df/dw at the origin.
    std::vector<GaussRational> f_w0() const;
    /// dg/dw at the origin.
    GaussRational g_w0() const;
    /// Coefficient of w^2 in g.
    GaussRational g_ww_coeff() const;

    friend bool operator==(const HoloMap& a, const HoloMap& b) {
        return a.f_ == b.f_ && a.g_ == b.g_;
    }
    friend bool operator!=(const HoloMap& a, const HoloMap& b) { return !(a == b); }

private:
    std::vector<HoloSeries> f_;
    HoloSeries g_;
    int n_;
    int K_;
};

/// phi1 after phi2, truncated at min(K1, K2) in the multiplicative sense.
HoloMap compose_maps(const HoloMap& phi1, const HoloMap& phi2);

/// Inverse map computed weight by weight from f(f*, g*) = z, g(f*, g*) = w.
HoloMap invert_map(const HoloMap& phi);

/// True iff the f parts agree below weight m-1 and the g parts below m
/// (agreement with multiplicative index m).
bool agree_up_to(const HoloMap& phi1, const HoloMap& phi2, int m);

} // namespace cm
