#include "cm/hypersurface.hpp"

namespace cm {

Signature levi_signature(const Signature& declared, const RealSeries& F) {
    if (F.dim() != declared.n) throw dimension_mismatch("surface dimension mismatch");
    if (F.truncation() < 2) throw under_truncated("defining series truncated below weight 2");
    const SeriesC& s = F.complex_form();
    for (const auto& [m, c] : s.terms()) {
        if (m.weight() >= 2) break;
        throw precondition_error("defining series must vanish to second order at 0");
    }
    // No linear u term: weight 2 but first order in the coordinates.
    const SeriesC w2 = s.weight_component(2);
    for (const auto& [m, c] : w2.terms())
        if (m.up != 0) throw precondition_error("defining series must vanish to second order at 0");
    if (w2 != hermitian_form(declared, 2).complex_form().weight_component(2))
        throw precondition_error(
            "weight-2 part is not the declared Hermitian form (degenerate or unsupported Levi form)");
    return declared;
}

Signature levi_signature(const Hypersurface& M) {
    return levi_signature(M.sig(), M.defining_series());
}

Hypersurface::Hypersurface(Signature sig, RealSeries F) : sig_(sig), F_(std::move(F)) {
    levi_signature(sig_, F_);
}

Hypersurface Hypersurface::hyperquadric(const Signature& sig, int trunc) {
    return Hypersurface(sig, hermitian_form(sig, trunc));
}

RealSeries Hypersurface::tail() const {
    return F_ - hermitian_form(sig_, F_.truncation());
}

const char* to_string(NormalFormViolation::Kind k) {
    switch (k) {
        case NormalFormViolation::Kind::LowBidegree: return "low-bidegree";
        case NormalFormViolation::Kind::Trace22: return "trace-22";
        case NormalFormViolation::Kind::Trace23: return "trace-23";
        case NormalFormViolation::Kind::Trace33: return "trace-33";
    }
    return "?";
}

NormalFormReport check_normal_form(const Hypersurface& M) {
    NormalFormReport rep;
    const SeriesC tail = M.tail().complex_form();
    const Signature& sig = M.sig();

    // Bidegree support: every term beyond weight 2 needs min(s,t) >= 2.
    std::map<std::pair<int, int>, SeriesC> bad;
    for (const auto& [m, c] : tail.terms()) {
        auto [s, t] = m.bidegree();
        if (std::min(s, t) >= 2) continue;
        auto it = bad.find({s, t});
        if (it == bad.end())
            it = bad.emplace(std::pair{s, t}, SeriesC(sig.n, tail.truncation())).first;
        it->second.add_term(m, c);
    }
    for (auto& [st, series] : bad) {
        rep.violations.push_back({NormalFormViolation::Kind::LowBidegree, st.first, st.second,
                                  series.lowest_weight(), series});
    }

    // Trace conditions, checked per u power within the truncation.
    auto check_trace = [&](int s, int t, int order, NormalFormViolation::Kind kind) {
        SeriesC part = tail.bidegree_component(s, t);
        SeriesC tr = part;
        for (int i = 0; i < order; ++i) tr = laplacian(tr, sig);
        if (!tr.is_zero())
            rep.violations.push_back({kind, s, t, tr.lowest_weight() + 2 * order, tr});
    };
    check_trace(2, 2, 1, NormalFormViolation::Kind::Trace22);
    check_trace(2, 3, 2, NormalFormViolation::Kind::Trace23);
    check_trace(3, 3, 3, NormalFormViolation::Kind::Trace33);
    // F_32 is covered through the reality of the defining series: its trace
    // is the conjugate of the F_23 trace.

    rep.is_normal = rep.violations.empty();
    return rep;
}

} // namespace cm
