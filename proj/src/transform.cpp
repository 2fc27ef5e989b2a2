#include "cm/transform.hpp"

#include "engine_util.hpp"

#include <algorithm>

namespace cm {

using engine::Unknown;

SeriesC substitute_w(const HoloSeries& h, const Hypersurface& M) {
    if (h.dim() != M.dim()) throw dimension_mismatch("substitution dimension mismatch");
    const int trunc = std::min(h.truncation(), M.truncation());
    const SeriesC F = M.defining_series().complex_form();
    SeriesC W(M.dim(), trunc);
    W.add_term(RealMonomial{Exponents(M.dim(), 0), Exponents(M.dim(), 0), 1}, GaussRational(1));
    W += F.truncated(trunc).scaled(GaussRational::i());
    return h.substituted_w(W, trunc);
}

Hypersurface transform_hypersurface(const HoloMap& phi, const Hypersurface& M) {
    if (phi.dim() != M.dim()) throw dimension_mismatch("transform dimension mismatch");
    const Signature sig = M.sig();
    const int n = sig.n;
    const int K = std::min(phi.truncation(), M.truncation());
    const SeriesC F = M.defining_series().complex_form().truncated(K);

    // Substituted map data.  Each z* component is valid through K-1 only,
    // but every use below pairs it with factors of weight >= 1, so all
    // results through weight K are exact.
    SeriesC W(n, K);
    W.add_term(RealMonomial{Exponents(n, 0), Exponents(n, 0), 1}, GaussRational(1));
    W += F.scaled(GaussRational::i());
    const SeriesC gsub = phi.g().substituted_w(W, K);
    const SeriesC V = engine::im_part(gsub);
    const SeriesC ustar = engine::re_part(gsub);
    std::vector<SeriesC> zstar, zstar_conj;
    zstar.reserve(n);
    for (const auto& c : phi.f()) zstar.push_back(c.substituted_w(W, K));
    for (const auto& s : zstar) zstar_conj.push_back(s.conjugated());

    // Unknown columns are built against the lowest-weight parts of the
    // substituted coordinates.
    engine::ColumnContext ctx{sig, {}, {}, SeriesC(n, K), SeriesC(n, K)};
    for (const auto& s : zstar) ctx.z1.push_back(s.weight_component(1));
    for (const auto& s : ctx.z1) ctx.z1conj.push_back(s.conjugated());
    ctx.u2 = ustar.truncated(2).weight_component(2);

    // |s-t| blocks stay independent unless the u substitution carries a
    // (2,0) part (a z^2 term in the weight-2 jet of g).
    const bool split = ctx.u2.bidegree_component(2, 0).is_zero();

    SeriesC Fout(n, K);
    const std::vector<SeriesC> no_trace;
    for (int m = 1; m <= K; ++m) {
        SeriesC known = V - Fout.substituted(zstar, zstar_conj, ustar, m);
        known = known.weight_component(m);

        auto unknowns = engine::enumerate_unknowns(n, m, false, false);
        std::vector<SeriesC> cols;
        cols.reserve(unknowns.size());
        std::vector<SeriesC> trace_cols(unknowns.size(), SeriesC(n, 0));
        for (const auto& u : unknowns) {
            SeriesC d = engine::fstar_increment(u, n, m);
            cols.push_back(-d.substituted(ctx.z1, ctx.z1conj, ctx.u2, m));
        }

        engine::WeightSolveResult sol;
        try {
            sol = engine::solve_weight_system(m, sig, unknowns, cols, trace_cols, known, {},
                                              split);
        } catch (const solver_error&) {
            throw precondition_error(
                "map does not transform the surface graph (singular weight-" +
                std::to_string(m) + " substitution)");
        }
        for (size_t j = 0; j < unknowns.size(); ++j) {
            if (sol.values[j].is_zero()) continue;
            Fout += engine::fstar_increment(unknowns[j], n, K)
                        .scaled(GaussRational(sol.values[j]));
        }
    }

    // The Hypersurface constructor enforces the weight-2 form and rejects
    // degenerate images (unsupported Levi form).
    return Hypersurface(sig, RealSeries(std::move(Fout)));
}

RealSeries transform_residual(const HoloMap& phi, const Hypersurface& M, const RealSeries& F_out) {
    const int trunc = std::min({phi.truncation(), M.truncation(), F_out.truncation()});
    SeriesC res = engine::identity_residual(phi.f(), phi.g(),
                                            M.defining_series().complex_form(),
                                            F_out.complex_form(), trunc);
    return RealSeries(std::move(res));
}

} // namespace cm
