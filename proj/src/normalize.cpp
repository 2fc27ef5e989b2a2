#include "cm/normalize.hpp"

#include "cm/linear_system.hpp"
#include "engine_util.hpp"

#include <algorithm>
#include <map>

namespace cm {

using engine::Unknown;

RealSeries apply_L(int k, const std::vector<HoloSeries>& f, const HoloSeries& g,
                   const RealSeries& Fstar, const Signature& sig, const GMatrix& C,
                   const Rational& rho) {
    if (k < 3) throw precondition_error("L_k defined for k >= 3");
    const int n = sig.n;
    if (static_cast<int>(f.size()) != n || g.dim() != n || Fstar.dim() != n)
        throw dimension_mismatch("apply_L dimension mismatch");
    for (const auto& c : f)
        for (const auto& [mo, v] : c.terms())
            if (mo.weight() != k - 1)
                throw precondition_error("f must be homogeneous of weight k-1");
    for (const auto& [mo, v] : g.terms())
        if (mo.weight() != k) throw precondition_error("g must be homogeneous of weight k");
    for (const auto& [mo, v] : Fstar.complex_form().terms())
        if (mo.weight() != k) throw precondition_error("F* must be homogeneous of weight k");

    auto ctx = engine::make_context(sig, C, rho, k);
    SeriesC acc(n, k);
    // 2 Re <f(z,w), Cz>
    for (int a = 0; a < n; ++a) {
        SeriesC p = f[a].substituted_w(ctx.w2, k) * ctx.z1conj[a];
        if (sig.eps(a) < 0) p = -p;
        acc += p + p.conjugated();
    }
    // Re(i g) = -Im(g)
    acc -= engine::im_part(g.substituted_w(ctx.w2, k));
    // - F*(Cz, conj Cz, rho u)
    acc -= Fstar.complex_form().substituted(ctx.z1, ctx.z1conj, ctx.u2, k);
    return RealSeries(acc.weight_component(k));
}

LAnalysis analyze_L(int k, const Signature& sig) {
    if (k < 3) throw precondition_error("L_k defined for k >= 3");
    const int n = sig.n;
    auto unknowns = engine::enumerate_unknowns(n, k, true, true);
    auto ctx = engine::make_context(sig, GMatrix::identity(n), Rational(1), k);

    std::vector<SeriesC> cols, trace_cols;
    cols.reserve(unknowns.size());
    trace_cols.reserve(unknowns.size());
    for (const auto& u : unknowns) {
        cols.push_back(engine::residual_column(u, ctx, k));
        trace_cols.push_back(engine::trace_column(u, sig, k));
    }

    LAnalysis an;
    an.weight = k;
    an.surjective = true;

    std::map<int, std::vector<size_t>> block_cols;
    for (size_t j = 0; j < unknowns.size(); ++j) block_cols[unknowns[j].block].push_back(j);
    std::map<int, std::vector<RealMonomial>> block_rows;
    for (const auto& rm : engine::real_class_reps(n, k)) {
        auto [s, t] = rm.bidegree();
        block_rows[std::abs(s - t)].push_back(rm);
    }
    for (auto& [b, rows] : block_rows) block_cols.try_emplace(b);

    int fg_dim = 0;
    for (const auto& u : unknowns)
        if (u.kind != Unknown::Kind::FStar) ++fg_dim;

    int np_dim_total = 0;
    for (auto& [b, col_idx] : block_cols) {
        const auto rows_it = block_rows.find(b);
        static const std::vector<RealMonomial> no_rows;
        const auto& row_reps = rows_it == block_rows.end() ? no_rows : rows_it->second;

        int rowsA = 0;
        for (const auto& rep : row_reps) rowsA += rep.is_self_conjugate() ? 1 : 2;
        an.codomain_dim += rowsA;

        // [A; T]: the operator rows over the weight-k target plus the trace
        // rows that pin F* to the normal-form subspace.  The kernel of the
        // constrained operator is the kernel of [A; T]; its image dimension
        // is rank[A; T] - rank T.
        LinearSystemQ sysAT(static_cast<int>(col_idx.size()));
        LinearSystemQ sysT(static_cast<int>(col_idx.size()));
        for (const auto& rep : row_reps) {
            const bool selfc = rep.is_self_conjugate();
            std::vector<std::pair<int, Rational>> re_row, im_row;
            for (size_t kk = 0; kk < col_idx.size(); ++kk) {
                const GaussRational c = cols[col_idx[kk]].coeff(rep);
                if (!c.re.is_zero()) re_row.emplace_back(static_cast<int>(kk), c.re);
                if (!selfc && !c.im.is_zero()) im_row.emplace_back(static_cast<int>(kk), c.im);
            }
            sysAT.add_row(re_row, Rational(0));
            if (!selfc) sysAT.add_row(im_row, Rational(0));
        }
        std::map<RealMonomial, bool, RealMonomialLess> trace_reps;
        for (size_t j : col_idx)
            for (const auto& [mo, c] : trace_cols[j].terms())
                if (engine::is_class_rep(mo)) trace_reps.emplace(mo, mo.is_self_conjugate());
        for (const auto& [rep, selfc] : trace_reps) {
            std::vector<std::pair<int, Rational>> re_row, im_row;
            for (size_t kk = 0; kk < col_idx.size(); ++kk) {
                const GaussRational c = trace_cols[col_idx[kk]].coeff(rep);
                if (!c.re.is_zero()) re_row.emplace_back(static_cast<int>(kk), c.re);
                if (!selfc && !c.im.is_zero()) im_row.emplace_back(static_cast<int>(kk), c.im);
            }
            sysAT.add_row(re_row, Rational(0));
            sysT.add_row(re_row, Rational(0));
            if (!selfc) {
                sysAT.add_row(im_row, Rational(0));
                sysT.add_row(im_row, Rational(0));
            }
        }

        const int rankAT = sysAT.rank();
        const int rankT = sysT.rank();
        an.kernel_dim += static_cast<int>(col_idx.size()) - rankAT;
        an.rank += rankAT - rankT;
        if (rankAT - rankT != rowsA) an.surjective = false;

        int fstar_cols = 0;
        for (size_t j : col_idx)
            if (unknowns[j].kind == Unknown::Kind::FStar) ++fstar_cols;
        np_dim_total += fstar_cols - rankT;
    }
    an.domain_dim = fg_dim + np_dim_total;
    return an;
}

int kernel_dimension(int k, int n) { return analyze_L(k, Signature(n, n)).kernel_dim; }

NormalizationResult normalize(const Hypersurface& M, const InitialValue& sigma, int K) {
    const Signature sig = M.sig();
    const int n = sig.n;
    if (sigma.sig() != sig) throw precondition_error("initial value signature mismatch");
    if (K > M.truncation()) throw under_truncated("normalization weight exceeds input truncation");
    if (K < 4) throw under_truncated("normalization needs weight >= 4");
    levi_signature(M);

    const SeriesC F = M.defining_series().complex_form().truncated(K);
    const GMatrix& C = sigma.C();
    const Rational& rho = sigma.rho();

    // Initial data: f = Cz, g = rho w; the a and r entries of sigma enter as
    // pinned kernel coefficients at weights 3 and 4.
    std::vector<HoloSeries> f(n, HoloSeries(n, K - 1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            HoloMonomial mz{Exponents(n, 0), 0};
            mz.zp[b] = 1;
            f[a].add_term(mz, C(a, b));
        }
    HoloSeries g(n, K);
    g.add_term(HoloMonomial{Exponents(n, 0), 1}, GaussRational(rho));

    SeriesC Fout = hermitian_form(sig, K).complex_form();

    const std::vector<GaussRational> Ca = C.apply(sigma.a());

    std::vector<SolveLogEntry> log;
    for (int m = 3; m <= K; ++m) {
        const SeriesC res = engine::identity_residual(f, g, F, Fout, m);
        if (res.lowest_weight() >= 0 && res.lowest_weight() < m)
            throw solver_error("residual below current weight");
        const SeriesC known = res;

        auto unknowns = engine::enumerate_unknowns(n, m, true, true);
        auto ctx = engine::make_context(sig, C, rho, m);
        std::vector<SeriesC> cols, trace_cols;
        cols.reserve(unknowns.size());
        trace_cols.reserve(unknowns.size());
        for (const auto& u : unknowns) {
            cols.push_back(engine::residual_column(u, ctx, m));
            trace_cols.push_back(engine::trace_column(u, sig, m));
        }

        std::vector<engine::PinRow> pins;
        if (m == 3) {
            // Kernel pinning: the w coefficient of f_2 is -C a.
            for (size_t j = 0; j < unknowns.size(); ++j) {
                const auto& u = unknowns[j];
                if (u.kind == Unknown::Kind::F && degree(u.hm.zp) == 0 && u.hm.wp == 1)
                    pins.push_back({j, u.imag ? -Ca[u.comp].im : -Ca[u.comp].re});
            }
        }
        if (m == 4) {
            // Kernel pinning: Re of the w^2 coefficient of g_4 is rho r.
            for (size_t j = 0; j < unknowns.size(); ++j) {
                const auto& u = unknowns[j];
                if (u.kind == Unknown::Kind::G && degree(u.hm.zp) == 0 && u.hm.wp == 2 &&
                    !u.imag)
                    pins.push_back({j, rho * sigma.r()});
            }
        }

        auto sol =
            engine::solve_weight_system(m, sig, unknowns, cols, trace_cols, known, pins, true);
        log.push_back({m, static_cast<int>(unknowns.size()), sol.equations, sol.rank});

        for (size_t j = 0; j < unknowns.size(); ++j) {
            if (sol.values[j].is_zero()) continue;
            const auto& u = unknowns[j];
            const GaussRational v = u.imag ? GaussRational(Rational(0), sol.values[j])
                                           : GaussRational(sol.values[j]);
            switch (u.kind) {
                case Unknown::Kind::F: f[u.comp].add_term(u.hm, v); break;
                case Unknown::Kind::G: g.add_term(u.hm, v); break;
                case Unknown::Kind::FStar:
                    Fout +=
                        engine::fstar_increment(u, n, K).scaled(GaussRational(sol.values[j]));
                    break;
            }
        }
    }

    HoloMap map(std::move(f), std::move(g));
    Hypersurface surface(sig, RealSeries(std::move(Fout)));

    NormalizationResult result{std::move(map), std::move(surface), sigma, std::move(log)};

    const RealSeries residual = verify_identity_residual(M, result);
    if (!residual.is_zero()) throw solver_error("identity residual nonzero after normalization");
    if (!check_normal_form(result.surface).is_normal)
        throw solver_error("normalization output fails the normal form predicate");
    return result;
}

RealSeries verify_identity_residual(const Hypersurface& M, const NormalizationResult& result) {
    const int trunc = std::min(M.truncation(), result.map.truncation());
    SeriesC res = engine::identity_residual(result.map.f(), result.map.g(),
                                            M.defining_series().complex_form(),
                                            result.surface.defining_series().complex_form(),
                                            trunc);
    return RealSeries(std::move(res));
}

} // namespace cm
