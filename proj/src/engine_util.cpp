#include "engine_util.hpp"

#include "cm/linear_system.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace cm::engine {

std::vector<Exponents> exponent_lists(int n, int total) {
    std::vector<Exponents> out;
    Exponents cur(n, 0);
    // Ascending lex via recursion on the first position.
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n - 1) {
            cur[pos] = remaining;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    if (n > 0) rec(rec, 0, total);
    return out;
}

std::vector<HoloMonomial> holo_monomials(int n, int weight) {
    std::vector<HoloMonomial> out;
    for (int d = weight % 2; d <= weight; d += 2)
        for (auto& e : exponent_lists(n, d)) out.push_back({std::move(e), (weight - d) / 2});
    return out;
}

std::vector<RealMonomial> real_monomials(int n, int weight) {
    std::vector<RealMonomial> out;
    for (int s = 0; s <= weight; ++s)
        for (auto& zi : exponent_lists(n, s))
            for (int t = 0; s + t <= weight; ++t) {
                if ((weight - s - t) % 2 != 0) continue;
                const int k = (weight - s - t) / 2;
                for (auto& zbi : exponent_lists(n, t)) out.push_back({zi, zbi, k});
            }
    std::sort(out.begin(), out.end(), [](const RealMonomial& a, const RealMonomial& b) {
        return RealMonomialLess{}(a, b);
    });
    return out;
}

bool is_class_rep(const RealMonomial& m) {
    return !RealMonomialLess{}(m.conjugate(), m);
}

std::vector<RealMonomial> real_class_reps(int n, int weight) {
    std::vector<RealMonomial> out;
    for (auto& m : real_monomials(n, weight))
        if (is_class_rep(m)) out.push_back(m);
    return out;
}

SeriesC re_part(const SeriesC& s) {
    return (s + s.conjugated()).scaled(GaussRational(Rational(1, 2)));
}

SeriesC im_part(const SeriesC& s) {
    return (s - s.conjugated()).scaled(GaussRational(Rational(0), Rational(-1, 2)));
}

std::vector<SeriesC> linear_z_series(const GMatrix& C, int trunc) {
    const int n = C.dim();
    std::vector<SeriesC> out;
    out.reserve(n);
    for (int a = 0; a < n; ++a) {
        SeriesC s(n, trunc);
        for (int b = 0; b < n; ++b) {
            RealMonomial m{Exponents(n, 0), Exponents(n, 0), 0};
            m.zp[b] = 1;
            s.add_term(m, C(a, b));
        }
        out.push_back(std::move(s));
    }
    return out;
}

ColumnContext make_context(const Signature& sig, const GMatrix& C, const Rational& rho, int m) {
    ColumnContext ctx{sig, {}, {}, SeriesC(sig.n, m), SeriesC(sig.n, m)};
    ctx.z1 = linear_z_series(C, m);
    ctx.z1conj.reserve(sig.n);
    for (const auto& s : ctx.z1) ctx.z1conj.push_back(s.conjugated());
    // w = u + i <z,z>
    SeriesC w(sig.n, m);
    w.add_term(RealMonomial{Exponents(sig.n, 0), Exponents(sig.n, 0), 1}, GaussRational(1));
    w += hermitian_form(sig, m).complex_form().scaled(GaussRational::i());
    ctx.w2 = std::move(w);
    // u* = rho u at lowest weight
    SeriesC u2(sig.n, m);
    u2.add_term(RealMonomial{Exponents(sig.n, 0), Exponents(sig.n, 0), 1}, GaussRational(rho));
    ctx.u2 = std::move(u2);
    return ctx;
}

namespace {

SeriesC holo_value(const HoloMonomial& hm, const GaussRational& c, const ColumnContext& ctx,
                   int m) {
    // c * z^I * (u + i F2)^j as a series.
    HoloSeries h = HoloSeries::monomial(ctx.sig.n, m, hm, c);
    return h.substituted_w(ctx.w2, m);
}

} // namespace

SeriesC residual_column(const Unknown& u, const ColumnContext& ctx, int m) {
    const GaussRational unit = u.imag ? GaussRational::i() : GaussRational(1);
    switch (u.kind) {
        case Unknown::Kind::G: {
            return im_part(holo_value(u.hm, unit, ctx, m));
        }
        case Unknown::Kind::F: {
            // -2 Re <delta f, Cz> with delta f supported on one component.
            SeriesC p = holo_value(u.hm, unit, ctx, m) * ctx.z1conj[u.comp];
            if (ctx.sig.eps(u.comp) < 0) p = -p;
            return -(p + p.conjugated());
        }
        case Unknown::Kind::FStar: {
            SeriesC d = fstar_increment(u, ctx.sig.n, m);
            return -d.substituted(ctx.z1, ctx.z1conj, ctx.u2, m);
        }
    }
    throw error("unreachable");
}

SeriesC trace_column(const Unknown& u, const Signature& sig, int m) {
    if (u.kind != Unknown::Kind::FStar) return SeriesC(sig.n, 0);
    auto [s, t] = u.rm.bidegree();
    if (s > t) std::swap(s, t);
    int order = 0;
    if (s == 2 && t == 2) order = 1;
    else if (s == 2 && t == 3) order = 2;
    else if (s == 3 && t == 3) order = 3;
    else return SeriesC(sig.n, 0);
    SeriesC d = fstar_increment(u, sig.n, m);
    for (int i = 0; i < order; ++i) d = laplacian(d, sig);
    return d;
}

SeriesC fstar_increment(const Unknown& u, int n, int trunc) {
    const GaussRational unit = u.imag ? GaussRational::i() : GaussRational(1);
    SeriesC d = SeriesC::monomial(n, trunc, u.rm, unit);
    if (!u.rm.is_self_conjugate()) d.add_term(u.rm.conjugate(), unit.conj());
    return d;
}

int unknown_block(const Unknown& u) {
    switch (u.kind) {
        case Unknown::Kind::F: return std::abs(degree(u.hm.zp) - 1);
        case Unknown::Kind::G: return degree(u.hm.zp);
        case Unknown::Kind::FStar: {
            auto [s, t] = u.rm.bidegree();
            return std::abs(s - t);
        }
    }
    return 0;
}

std::vector<Unknown> enumerate_unknowns(int n, int m, bool with_fg, bool fstar_normal) {
    std::vector<Unknown> out;
    if (with_fg) {
        for (int a = 0; a < n; ++a)
            for (const auto& hm : holo_monomials(n, m - 1))
                for (bool imag : {false, true})
                    out.push_back({Unknown::Kind::F, a, hm, RealMonomial{}, imag, 0});
        for (const auto& hm : holo_monomials(n, m))
            for (bool imag : {false, true})
                out.push_back({Unknown::Kind::G, -1, hm, RealMonomial{}, imag, 0});
    }
    for (const auto& rm : real_class_reps(n, m)) {
        auto [s, t] = rm.bidegree();
        if (fstar_normal && std::min(s, t) < 2) continue;
        out.push_back({Unknown::Kind::FStar, -1, HoloMonomial{}, rm, false, 0});
        if (!rm.is_self_conjugate())
            out.push_back({Unknown::Kind::FStar, -1, HoloMonomial{}, rm, true, 0});
    }
    for (auto& u : out) u.block = unknown_block(u);
    return out;
}

namespace {

int row_block(const RealMonomial& m) {
    auto [s, t] = m.bidegree();
    return std::abs(s - t);
}

} // namespace

WeightSolveResult solve_weight_system(int m, const Signature& sig,
                                      const std::vector<Unknown>& unknowns,
                                      const std::vector<SeriesC>& cols,
                                      const std::vector<SeriesC>& trace_cols,
                                      const SeriesC& known, const std::vector<PinRow>& pins,
                                      bool split_blocks) {
    const int n = sig.n;
    WeightSolveResult out;
    out.values.assign(unknowns.size(), Rational(0));

    std::map<int, std::vector<size_t>> block_cols;
    for (size_t j = 0; j < unknowns.size(); ++j)
        block_cols[split_blocks ? unknowns[j].block : 0].push_back(j);
    std::map<int, std::vector<RealMonomial>> block_rows;
    for (const auto& rm : real_class_reps(n, m))
        block_rows[split_blocks ? row_block(rm) : 0].push_back(rm);
    for (auto& [b, rows] : block_rows) block_cols.try_emplace(b);

    for (auto& [b, col_idx] : block_cols) {
        const auto rows_it = block_rows.find(b);
        static const std::vector<RealMonomial> no_rows;
        const auto& row_reps = rows_it == block_rows.end() ? no_rows : rows_it->second;

        std::map<size_t, int> local_of;
        for (size_t k = 0; k < col_idx.size(); ++k) local_of[col_idx[k]] = static_cast<int>(k);

        LinearSystemQ sys(static_cast<int>(col_idx.size()));

        for (const auto& rep : row_reps) {
            const bool selfc = rep.is_self_conjugate();
            std::vector<std::pair<int, Rational>> re_row, im_row;
            for (size_t k = 0; k < col_idx.size(); ++k) {
                const GaussRational c = cols[col_idx[k]].coeff(rep);
                if (!c.re.is_zero()) re_row.emplace_back(static_cast<int>(k), c.re);
                if (!selfc && !c.im.is_zero()) im_row.emplace_back(static_cast<int>(k), c.im);
            }
            const GaussRational kc = known.coeff(rep);
            sys.add_row(re_row, -kc.re);
            if (!selfc) sys.add_row(im_row, -kc.im);
        }

        std::map<RealMonomial, bool, RealMonomialLess> trace_reps;
        for (size_t j : col_idx)
            if (!trace_cols.empty())
                for (const auto& [mo, c] : trace_cols[j].terms())
                    if (is_class_rep(mo)) trace_reps.emplace(mo, mo.is_self_conjugate());
        for (const auto& [rep, selfc] : trace_reps) {
            std::vector<std::pair<int, Rational>> re_row, im_row;
            for (size_t k = 0; k < col_idx.size(); ++k) {
                const GaussRational c = trace_cols[col_idx[k]].coeff(rep);
                if (!c.re.is_zero()) re_row.emplace_back(static_cast<int>(k), c.re);
                if (!selfc && !c.im.is_zero()) im_row.emplace_back(static_cast<int>(k), c.im);
            }
            sys.add_row(re_row, Rational(0));
            if (!selfc) sys.add_row(im_row, Rational(0));
        }

        for (const auto& pin : pins) {
            auto it = local_of.find(pin.unknown);
            if (it == local_of.end()) continue;
            sys.add_row({{it->second, Rational(1)}}, pin.value);
        }

        auto res = sys.solve();
        out.equations += sys.rows();
        out.rank += res.rank;
        if (!res.consistent)
            throw solver_error("weight-" + std::to_string(m) + " system inconsistent");
        if (!res.unique && sys.cols() > 0)
            throw solver_error("weight-" + std::to_string(m) + " system underdetermined");
        for (size_t k = 0; k < col_idx.size(); ++k) out.values[col_idx[k]] = res.solution[k];
    }
    return out;
}

SeriesC identity_residual(const std::vector<HoloSeries>& f, const HoloSeries& g, const SeriesC& F,
                          const SeriesC& Fout, int trunc) {
    const int n = F.dim();
    SeriesC W(n, trunc);
    W.add_term(RealMonomial{Exponents(n, 0), Exponents(n, 0), 1}, GaussRational(1));
    W += F.truncated(trunc).scaled(GaussRational::i());

    const SeriesC gsub = g.substituted_w(W, trunc);
    std::vector<SeriesC> zstar;
    zstar.reserve(f.size());
    for (const auto& c : f) zstar.push_back(c.substituted_w(W, trunc));
    std::vector<SeriesC> zstar_conj;
    zstar_conj.reserve(f.size());
    for (const auto& s : zstar) zstar_conj.push_back(s.conjugated());

    SeriesC res = im_part(gsub);
    res -= Fout.substituted(zstar, zstar_conj, re_part(gsub), trunc);
    return res;
}

} // namespace cm::engine
