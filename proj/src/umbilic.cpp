#include "cm/umbilic.hpp"

#include <algorithm>

namespace cm {

namespace {

void require_normal(const Hypersurface& M, const char* who) {
    if (!check_normal_form(M).is_normal)
        throw precondition_error(std::string(who) + " requires a normal-form surface");
}

// u = 0 slice of a bidegree component.
SeriesC u0_slice(const SeriesC& s) {
    SeriesC r(s.dim(), s.truncation());
    for (const auto& [m, c] : s.terms())
        if (m.up == 0) r.add_term(m, c);
    return r;
}

GaussRational coeff1(const Hypersurface& M, int zp, int zbp, int up) {
    // n = 1 helper.
    return M.defining_series().complex_form().coeff(RealMonomial{{zp}, {zbp}, up});
}

} // namespace

bool is_umbilic_origin(const Hypersurface& M) {
    require_normal(M, "umbilicity test");
    const SeriesC tail = M.tail().complex_form();
    if (M.dim() == 1) {
        if (M.truncation() < 6) throw under_truncated("umbilicity for n=1 needs weight >= 6");
        return u0_slice(tail.bidegree_component(4, 2)).is_zero() &&
               u0_slice(tail.bidegree_component(2, 4)).is_zero();
    }
    if (M.truncation() < 4) throw under_truncated("umbilicity needs weight >= 4");
    return u0_slice(tail.bidegree_component(2, 2)).is_zero();
}

Hypersurface translate_along_u(const Hypersurface& M, const Rational& u0) {
    require_normal(M, "translation along u");
    return Hypersurface(M.sig(), M.defining_series().shifted_u(u0));
}

std::optional<int> lowest_weight(const Hypersurface& M) {
    const int lw = M.tail().lowest_weight();
    return lw < 0 ? std::nullopt : std::optional<int>(lw);
}

std::optional<int> lowest_codegree(const Hypersurface& M) {
    std::optional<int> best;
    const SeriesC tail = M.tail().complex_form();
    for (const auto& [m, c] : tail.terms()) {
        auto [s, t] = m.bidegree();
        if (!best || s + t < *best) best = s + t;
    }
    return best;
}

namespace {

std::vector<std::vector<GaussRational>> candidate_vectors(int n) {
    const GaussRational one(1);
    const GaussRational i = GaussRational::i();
    const GaussRational half(Rational(1, 2));
    std::vector<GaussRational> scalars = {one,
                                          -one,
                                          i,
                                          -i,
                                          half,
                                          -half,
                                          i * half,
                                          -(i * half),
                                          one + i,
                                          one - i,
                                          GaussRational(2),
                                          GaussRational(Rational(0), Rational(2))};
    std::vector<std::vector<GaussRational>> out;
    // Single-component vectors first, then uniform ones.
    for (const auto& s : scalars)
        for (int j = 0; j < n; ++j) {
            std::vector<GaussRational> a(n);
            a[j] = s;
            out.push_back(std::move(a));
        }
    if (n > 1)
        for (const auto& s : scalars) out.push_back(std::vector<GaussRational>(n, s));
    return out;
}

} // namespace

LowerWeightResult lower_weight(const Hypersurface& M, int K) {
    require_normal(M, "degree lowering");
    const auto k = lowest_codegree(M);
    if (!k || *k < 7)
        throw precondition_error("degree lowering requires lowest codegree >= 7");
    SeriesC slice(M.dim(), M.truncation());
    const SeriesC tail0 = M.tail().complex_form();
    for (const auto& [m, c] : tail0.terms()) {
        auto [s, t] = m.bidegree();
        if (s + t == *k && m.up == 0) slice.add_term(m, c);
    }
    if (slice.is_zero())
        throw precondition_error(
            "codegree-k part vanishes at u = 0; translate along u first");
    if (K < *k || K > M.truncation())
        throw under_truncated("degree lowering needs k <= K <= truncation");

    for (const auto& a : candidate_vectors(M.dim())) {
        bool zero = true;
        for (const auto& c : a)
            if (!c.is_zero()) zero = false;
        if (zero) continue;
        InitialValue sigma(M.sig(), GMatrix::identity(M.dim()), a, Rational(1), Rational(0));
        auto res = normalize(M, sigma, K);
        const auto k2 = lowest_codegree(res.surface);
        if (k2 && *k2 == *k - 1) return {a, std::move(res)};
    }
    throw precondition_error("degree lowering search exhausted (no candidate vector worked)");
}

ReductionTrace moser_reduce(const Hypersurface& M, MoserVariant variant) {
    require_normal(M, "Moser reduction");
    if (M.dim() != 1) throw precondition_error("Moser reduction applies to dim M = 3 (n = 1)");
    if (M.truncation() < 8) throw under_truncated("Moser reduction needs truncation >= 8");
    const int K = M.truncation();
    const Signature sig = M.sig();

    const GaussRational b = coeff1(M, 4, 2, 0);
    if (b.is_zero()) throw precondition_error("Moser reduction requires a nonumbilic origin");

    ReductionTrace trace{{},
                         Hypersurface(sig, M.defining_series())};

    // Step 1: kill F43 (resp. F52) at u = 0 with sigma = (1, a, 1, 0).
    GaussRational a;
    if (variant == MoserVariant::F43) {
        const GaussRational d = coeff1(M, 4, 3, 0);
        a = GaussRational(Rational(0), Rational(3, 2)) * d / b;  // 3id/(2b)
    } else {
        const GaussRational c = coeff1(M, 5, 2, 0);
        a = -(GaussRational::i() * c.conj()) / (b.conj() * GaussRational(2));  // -i conj(c)/(2 conj(b))
    }
    {
        InitialValue s(sig, GMatrix::identity(1), {a}, Rational(1), Rational(0));
        trace.final = normalize(trace.final, s, K).surface;
        trace.steps.push_back({ReductionStep::Kind::AStep, s});
    }

    // Step 2: scale so that the (2,4) coefficient at u = 0 becomes 1.
    // With z* = alpha z, w* = |alpha|^2 w the coefficient picks up
    // 1/(alpha conj(alpha)^3), so alpha solves alpha conj(alpha)^3 = conj(b).
    {
        const GaussRational b1 = coeff1(trace.final, 4, 2, 0);
        const Rational N = b1.norm();
        auto mod = N.sqrt();
        if (!mod) throw irrational_scaling("scale step needs |b| rational", N.str());
        auto t = mod->sqrt();  // |alpha|^2
        if (!t)
            throw irrational_scaling("scale step needs |alpha|^2 = sqrt|b| rational", mod->str());
        const GaussRational alpha_bar_sq = b1.conj() / GaussRational(*t);
        auto alpha_bar = alpha_bar_sq.sqrt();
        if (!alpha_bar)
            throw irrational_scaling("scale step: conj(alpha)^2 has no Gaussian-rational root",
                                     alpha_bar_sq.str());
        // alpha conj(alpha)^3 = conj(alpha)^2 |alpha|^2 = conj(b) exactly.
        const GaussRational alpha = alpha_bar->conj();
        GMatrix C(1);
        C(0, 0) = alpha;
        InitialValue s(sig, C, {GaussRational()}, alpha.norm(), Rational(0));
        trace.final = normalize(trace.final, s, K).surface;
        trace.steps.push_back({ReductionStep::Kind::ScaleStep, s});
    }

    // Step 3: r = Re(d/4) for the u z^4 zbar^2 coefficient d.
    {
        const GaussRational du = coeff1(trace.final, 4, 2, 1);
        const Rational r = du.re / Rational(4);
        InitialValue s(sig, GMatrix::identity(1), {GaussRational()}, Rational(1), r);
        trace.final = normalize(trace.final, s, K).surface;
        trace.steps.push_back({ReductionStep::Kind::RStep, s});
    }

    // Postconditions of the reduced form.
    if (coeff1(trace.final, 2, 4, 0) != GaussRational(1))
        throw solver_error("Moser reduction: F24(.,0) != z^2 zbar^4");
    if (!coeff1(trace.final, 4, 2, 1).re.is_zero())
        throw solver_error("Moser reduction: Re dF24/du(.,0) != 0");
    if (variant == MoserVariant::F43 && !coeff1(trace.final, 4, 3, 0).is_zero())
        throw solver_error("Moser reduction: F43(.,0) != 0");
    if (variant == MoserVariant::F52 && !coeff1(trace.final, 5, 2, 0).is_zero())
        throw solver_error("Moser reduction: F52(.,0) != 0");
    return trace;
}

WebsterInvariants webster_invariants(const Hypersurface& M) {
    if (M.dim() < 2) throw precondition_error("trace invariants require n >= 2");
    const Signature sig = M.sig();
    const SeriesC tail = M.tail().complex_form();
    // Bidegree components are complete per u power, so products may be
    // formed above the carried truncation; the u powers read off below stay
    // within what the truncation actually determines.
    const SeriesC F22 = tail.bidegree_component(2, 2).with_truncation(2 * M.truncation());
    const SeriesC F23 = tail.bidegree_component(2, 3).with_truncation(2 * M.truncation());

    SeriesC sq = F22 * F22;
    for (int i = 0; i < 4; ++i) sq = laplacian(sq, sig);

    WebsterInvariants inv;
    inv.value0 = sq.coeff(RealMonomial{Exponents(sig.n, 0), Exponents(sig.n, 0), 0}).re;
    inv.dvalue0 = sq.coeff(RealMonomial{Exponents(sig.n, 0), Exponents(sig.n, 0), 1}).re;
    inv.mixed.resize(sig.n);
    for (int zeta = 0; zeta < sig.n; ++zeta) {
        SeriesC p = F22 * F23.derivative_zbar(zeta);
        for (int i = 0; i < 4; ++i) p = laplacian(p, sig);
        inv.mixed[zeta] = p.coeff(RealMonomial{Exponents(sig.n, 0), Exponents(sig.n, 0), 0});
    }
    return inv;
}

ReductionTrace webster_reduce(const Hypersurface& M) {
    require_normal(M, "Webster reduction");
    if (M.dim() < 2) throw precondition_error("Webster reduction applies to dim M >= 5 (n >= 2)");
    if (M.truncation() < 6) throw under_truncated("Webster reduction needs truncation >= 6");
    const int K = M.truncation();
    const Signature sig = M.sig();
    const int n = sig.n;

    WebsterInvariants inv = webster_invariants(M);
    if (inv.value0.is_zero())
        throw precondition_error("Webster reduction requires Delta^4 (F22)^2 |0 != 0");

    ReductionTrace trace{{}, Hypersurface(sig, M.defining_series())};

    // Step 1: the mixed invariant moves by T_z -> T_z - 2i D0 eps_z a_z under
    // sigma = (I, a, 1, 0), so a_z = -(i/2) eps_z T_z / D0 kills it.
    {
        std::vector<GaussRational> a(n);
        for (int zeta = 0; zeta < n; ++zeta)
            a[zeta] = GaussRational(Rational(0), Rational(-1, 2)) * inv.mixed[zeta] *
                      GaussRational(Rational(sig.eps(zeta))) / GaussRational(inv.value0);
        InitialValue s(sig, GMatrix::identity(n), a, Rational(1), Rational(0));
        trace.final = normalize(trace.final, s, K).surface;
        trace.steps.push_back({ReductionStep::Kind::AStep, s});
    }

    // Step 2: sigma = (C, 0, rho, r) with rho = sqrt|D0|, any exact conformal
    // C with multiplier rho, and r = sign(D0) D1 / (4 rho^2).  The trace
    // invariants transform through rho alone (D0 by rho^-2, D1 by rho^-3,
    // D1 -> D1 - 4 r D0 under the r part), so this lands on |D0| = 1 and
    // d/du = 0.
    {
        WebsterInvariants inv1 = webster_invariants(trace.final);
        auto rho = inv1.value0.abs().sqrt();
        if (!rho)
            throw irrational_scaling("Webster reduction: sqrt|Delta^4(F22)^2| irrational",
                                     inv1.value0.abs().str());
        auto C = conformal_with_multiplier(sig, *rho);
        if (!C)
            throw irrational_scaling(
                "Webster reduction: no exact conformal matrix with multiplier rho", rho->str());
        const Rational r = Rational(inv1.value0.sign()) * inv1.dvalue0 /
                           (Rational(4) * *rho * *rho);
        InitialValue s(sig, *C, std::vector<GaussRational>(n), *rho, r);
        trace.final = normalize(trace.final, s, K).surface;
        trace.steps.push_back({ReductionStep::Kind::ScaleStep, s});
    }

    WebsterInvariants out = webster_invariants(trace.final);
    if (out.value0.abs() != Rational(1))
        throw solver_error("Webster reduction: Delta^4(F22)^2|0 != +-1");
    if (!out.dvalue0.is_zero())
        throw solver_error("Webster reduction: d/du Delta^4(F22)^2|0 != 0");
    for (const auto& t : out.mixed)
        if (!t.is_zero()) throw solver_error("Webster reduction: mixed invariant != 0");
    return trace;
}

bool spherical_to_order(const Hypersurface& M, int K) {
    const auto res = normalize(M, InitialValue::identity(M.sig()), K);
    return res.surface.tail().is_zero();
}

} // namespace cm
