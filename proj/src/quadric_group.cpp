#include "cm/quadric_group.hpp"

#include <algorithm>

namespace cm {

HoloMap phi_sigma_series(const InitialValue& sigma, int K) {
    const Signature& sig = sigma.sig();
    const int n = sig.n;
    if (K < 2) throw under_truncated("map truncation must be at least 2");

    // <z,a> as a holomorphic linear form and <a,a> as a rational constant.
    HoloSeries za(n, K);
    Rational aa(0);
    for (int b = 0; b < n; ++b) {
        HoloMonomial m{Exponents(n, 0), 0};
        m.zp[b] = 1;
        const GaussRational eps(Rational(sig.eps(b)));
        za.add_term(m, sigma.a()[b].conj() * eps);
        aa += sigma.a()[b].norm() * Rational(sig.eps(b));
    }

    // delta = 2i<z,a> - w(r + i<a,a>)
    HoloSeries delta = za.scaled(GaussRational(Rational(0), Rational(2)));
    delta.add_term(HoloMonomial{Exponents(n, 0), 1}, -GaussRational(sigma.r(), aa));

    // 1/(1+delta) = sum (-delta)^j
    HoloSeries inv(n, K);
    inv.add_term(HoloMonomial{Exponents(n, 0), 0}, GaussRational(1));
    HoloSeries pw = inv;
    for (int j = 1; j <= K; ++j) {
        pw = pw * -delta;
        if (pw.is_zero()) break;
        inv += pw;
    }

    std::vector<HoloSeries> f;
    f.reserve(n);
    for (int a = 0; a < n; ++a) {
        HoloSeries num(n, K);
        for (int b = 0; b < n; ++b) {
            HoloMonomial mz{Exponents(n, 0), 0};
            mz.zp[b] = 1;
            num.add_term(mz, sigma.C()(a, b));
            num.add_term(HoloMonomial{Exponents(n, 0), 1}, -(sigma.C()(a, b) * sigma.a()[b]));
        }
        f.push_back((num * inv).truncated(K - 1));
    }
    HoloSeries g = HoloSeries::coordinate_w(n, K).scaled(GaussRational(sigma.rho())) * inv;
    return HoloMap(std::move(f), std::move(g));
}

InitialValue sigma_compose(const InitialValue& s1, const InitialValue& s2) {
    if (s1.sig() != s2.sig()) throw dimension_mismatch("group product signature mismatch");
    const int K = 5;  // enough for every jet read by the extraction
    const HoloMap composed = compose_maps(phi_sigma_series(s1, K), phi_sigma_series(s2, K));
    return extract_initial_value(composed, s1.sig());
}

bool stabilizes(const Hypersurface& M, const InitialValue& sigma, int K) {
    if (!check_normal_form(M).is_normal)
        throw precondition_error("stabilizer test requires a normal-form surface");
    const auto result = normalize(M, sigma, K);
    return result.surface.defining_series().equal_mod_weight(M.defining_series(), K + 1);
}

} // namespace cm
