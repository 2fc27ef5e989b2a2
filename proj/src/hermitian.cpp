#include "cm/hermitian.hpp"

namespace cm {

RealSeries hermitian_form(const Signature& sig, int trunc) {
    if (trunc < 2) throw under_truncated("hermitian form needs truncation >= 2");
    SeriesC s(sig.n, trunc);
    for (int a = 0; a < sig.n; ++a) {
        RealMonomial m{Exponents(sig.n, 0), Exponents(sig.n, 0), 0};
        m.zp[a] = 1;
        m.zbp[a] = 1;
        s.add_term(m, GaussRational(Rational(sig.eps(a))));
    }
    return RealSeries(std::move(s));
}

SeriesC hermitian_pairing(const Signature& sig, const std::vector<SeriesC>& A,
                          const std::vector<SeriesC>& B) {
    if (static_cast<int>(A.size()) != sig.n || static_cast<int>(B.size()) != sig.n)
        throw dimension_mismatch("pairing component count");
    SeriesC acc(A[0].dim(), A[0].truncation());
    for (int a = 0; a < sig.n; ++a) {
        SeriesC t = A[a] * B[a].conjugated();
        if (sig.eps(a) < 0) t = -t;
        acc += t;
    }
    return acc;
}

SeriesC laplacian(const SeriesC& F, const Signature& sig) {
    if (F.dim() != sig.n) throw dimension_mismatch("laplacian dimension mismatch");
    SeriesC r(F.dim(), std::max(F.truncation() - 2, 0));
    for (const auto& [m, c] : F.terms()) {
        for (int a = 0; a < sig.n; ++a) {
            if (m.zp[a] == 0 || m.zbp[a] == 0) continue;
            RealMonomial d = m;
            d.zp[a] -= 1;
            d.zbp[a] -= 1;
            r.add_term(d, c * GaussRational(Rational(sig.eps(a) * m.zp[a] * m.zbp[a])));
        }
    }
    return r;
}

} // namespace cm
