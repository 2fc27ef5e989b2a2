#include "cm/holo_map.hpp"

#include <algorithm>

namespace cm {

HoloMap::HoloMap(std::vector<HoloSeries> f, HoloSeries g)
    : f_(std::move(f)), g_(std::move(g)), n_(static_cast<int>(f_.size())), K_(g_.truncation()) {
    if (n_ < 1) throw dimension_mismatch("map needs at least one z component");
    if (g_.dim() != n_) throw dimension_mismatch("g dimension mismatch");
    for (const auto& c : f_) {
        if (c.dim() != n_) throw dimension_mismatch("f component dimension mismatch");
        if (c.truncation() != K_ - 1)
            throw under_truncated("f components must carry truncation K-1");
    }
    if (K_ < 2) throw under_truncated("map truncation must be at least 2");
    for (const auto& c : f_)
        if (!c.is_zero() && c.lowest_weight() < 1) throw precondition_error("f(0) != 0");
    if (!g_.is_zero() && g_.lowest_weight() < 2)
        throw precondition_error("g(0) != 0 or dg/dz(0) != 0");
    for (const auto& [m, c] : g_.terms())
        if (m.wp == 0 && degree(m.zp) == 1) throw precondition_error("dg/dz(0) != 0");
    if (linear_z().det().is_zero()) throw precondition_error("df/dz(0) singular");
    if (g_w0().is_zero()) throw precondition_error("dg/dw(0) = 0");
}

HoloMap HoloMap::identity(int n, int K) {
    std::vector<HoloSeries> f;
    f.reserve(n);
    for (int a = 0; a < n; ++a) f.push_back(HoloSeries::coordinate_z(n, K - 1, a));
    return HoloMap(std::move(f), HoloSeries::coordinate_w(n, K));
}

GMatrix HoloMap::linear_z() const {
    GMatrix C(n_);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            HoloMonomial m{Exponents(n_, 0), 0};
            m.zp[b] = 1;
            C(a, b) = f_[a].coeff(m);
        }
    return C;
}

std::vector<GaussRational> HoloMap::f_w0() const {
    std::vector<GaussRational> v(n_);
    const HoloMonomial w{Exponents(n_, 0), 1};
    for (int a = 0; a < n_; ++a) v[a] = f_[a].coeff(w);
    return v;
}

GaussRational HoloMap::g_w0() const { return g_.coeff(HoloMonomial{Exponents(n_, 0), 1}); }

GaussRational HoloMap::g_ww_coeff() const { return g_.coeff(HoloMonomial{Exponents(n_, 0), 2}); }

HoloMap compose_maps(const HoloMap& phi1, const HoloMap& phi2) {
    if (phi1.dim() != phi2.dim()) throw dimension_mismatch("composition dimension mismatch");
    const int K = std::min(phi1.truncation(), phi2.truncation());
    std::vector<HoloSeries> f;
    f.reserve(phi1.dim());
    for (const auto& c : phi1.f()) f.push_back(c.composed(phi2.f(), phi2.g(), K - 1));
    // dg/dz|0 = 0 buys one extra weight of validity for the g component.
    HoloSeries g = phi1.g().composed(phi2.f(), phi2.g(), K);
    return HoloMap(std::move(f), std::move(g));
}

HoloMap invert_map(const HoloMap& phi) {
    const int n = phi.dim();
    const int K = phi.truncation();
    const GMatrix Cinv = phi.linear_z().inverse();
    const GaussRational rho_inv = phi.g_w0().inverse();

    std::vector<HoloSeries> fs(n, HoloSeries(n, K - 1));
    HoloSeries gs(n, K);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            HoloMonomial m{Exponents(n, 0), 0};
            m.zp[b] = 1;
            fs[a].add_term(m, Cinv(a, b));
        }
    gs.add_term(HoloMonomial{Exponents(n, 0), 1}, rho_inv);

    // Weight-by-weight correction from f(f*, g*) = z and g(f*, g*) = w.
    for (int m = 2; m <= K; ++m) {
        {
            // All component residuals are taken against the same partial
            // inverse before the joint correction -C^{-1} * err is applied.
            std::vector<HoloSeries> errs;
            errs.reserve(n);
            for (int a = 0; a < n; ++a) {
                HoloSeries res = phi.f()[a].composed(fs, gs, m - 1);
                HoloMonomial za{Exponents(n, 0), 0};
                za.zp[a] = 1;
                res.add_term(za, GaussRational(Rational(-1)));
                errs.push_back(res.weight_component(m - 1));
            }
            for (int b = 0; b < n; ++b) {
                HoloSeries corr(n, K - 1);
                for (int a = 0; a < n; ++a)
                    for (const auto& [mo, c] : errs[a].terms())
                        corr.add_term(mo, -(Cinv(b, a) * c));
                if (!corr.is_zero()) fs[b] += corr;
            }
        }
        HoloSeries res = phi.g().composed(fs, gs, m);
        res.add_term(HoloMonomial{Exponents(n, 0), 1}, GaussRational(Rational(-1)));
        const HoloSeries err = res.weight_component(m);
        if (!err.is_zero()) {
            HoloSeries corr(n, K);
            for (const auto& [mo, c] : err.terms()) corr.add_term(mo, -(rho_inv * c));
            gs += corr;
        }
    }
    return HoloMap(std::move(fs), std::move(gs));
}

bool agree_up_to(const HoloMap& phi1, const HoloMap& phi2, int m) {
    if (phi1.dim() != phi2.dim()) throw dimension_mismatch("comparison dimension mismatch");
    const int K = std::min(phi1.truncation(), phi2.truncation());
    if (m > K + 1) throw under_truncated("agreement index beyond truncation");
    for (int a = 0; a < phi1.dim(); ++a)
        if (!phi1.f()[a].equal_mod_weight(phi2.f()[a], m - 1)) return false;
    return phi1.g().equal_mod_weight(phi2.g(), m);
}

} // namespace cm
