#include "cm/initial_value.hpp"

namespace cm {

namespace {

bool conformal(const Signature& sig, const GMatrix& C, const Rational& rho) {
    // <Cz, Cz> = rho <z, z>  <=>  C^* g C = rho g for g = diag(eps).
    const int n = sig.n;
    for (int b = 0; b < n; ++b)
        for (int d = 0; d < n; ++d) {
            GaussRational acc;
            for (int a = 0; a < n; ++a)
                acc += C(a, b) * C(a, d).conj() * GaussRational(Rational(sig.eps(a)));
            GaussRational want = b == d ? GaussRational(rho * Rational(sig.eps(b)))
                                        : GaussRational();
            if (acc != want) return false;
        }
    return true;
}

} // namespace

InitialValue::InitialValue(Signature sig, GMatrix C, std::vector<GaussRational> a, Rational rho,
                           Rational r)
    : sig_(sig), C_(std::move(C)), a_(std::move(a)), rho_(std::move(rho)), r_(std::move(r)) {
    if (C_.dim() != sig_.n || static_cast<int>(a_.size()) != sig_.n)
        throw dimension_mismatch("initial value dimension mismatch");
    if (rho_.is_zero()) throw precondition_error("initial value requires rho != 0");
    if (!conformal(sig_, C_, rho_))
        throw precondition_error("initial value violates <Cz,Cz> = rho <z,z>");
}

InitialValue InitialValue::identity(const Signature& sig) {
    return InitialValue(sig, GMatrix::identity(sig.n),
                        std::vector<GaussRational>(sig.n), Rational(1), Rational(0));
}

bool InitialValue::is_identity() const {
    if (rho_ != Rational(1) || r_ != Rational(0)) return false;
    for (const auto& c : a_)
        if (!c.is_zero()) return false;
    return C_ == GMatrix::identity(sig_.n);
}

InitialValue validate_sigma(const Signature& sig, const GMatrix& C,
                            const std::vector<GaussRational>& a, const Rational& rho,
                            const Rational& r) {
    return InitialValue(sig, C, a, rho, r);
}

InitialValue sigma_inverse(const InitialValue& s) {
    const GMatrix Cinv = s.C().inverse();
    const Rational rho_inv = s.rho().inverse();
    std::vector<GaussRational> Ca = s.C().apply(s.a());
    for (auto& c : Ca) c = -(c * GaussRational(rho_inv));
    return InitialValue(s.sig(), Cinv, std::move(Ca), rho_inv, -(s.r() * rho_inv));
}

std::pair<InitialValue, InitialValue> sigma_decompose(const InitialValue& s) {
    InitialValue psi(s.sig(), GMatrix::identity(s.sig().n), s.a(), Rational(1), Rational(0));
    InitialValue phi(s.sig(), s.C(), std::vector<GaussRational>(s.sig().n), s.rho(), s.r());
    return {phi, psi};
}

std::optional<GMatrix> conformal_with_multiplier(const Signature& sig, const Rational& rho) {
    const int n = sig.n;
    if (rho.is_zero()) return std::nullopt;
    if (rho.sign() > 0) {
        if (auto c = rho.sqrt()) return GMatrix::identity(n).scaled(GaussRational(*c));
    }
    if (n != 2) return std::nullopt;
    if (sig.e == 2 && rho.sign() > 0) {
        // rho = |x|^2 + |y|^2 from a four-square decomposition of num*den,
        // then C = [[x, -conj y], [y, conj x]].
        const mpz_class N = rho.num() * rho.den();
        mpz_class ra, rb, rc, rd;
        bool found = false;
        for (mpz_class a = 0; a * a <= N && !found; ++a)
            for (mpz_class b = a; a * a + b * b <= N && !found; ++b)
                for (mpz_class c = b; a * a + b * b + c * c <= N && !found; ++c) {
                    mpz_class rest = N - a * a - b * b - c * c;
                    mpz_class dd;
                    mpz_sqrt(dd.get_mpz_t(), rest.get_mpz_t());
                    if (dd * dd == rest && dd >= c) {
                        ra = a;
                        rb = b;
                        rc = c;
                        rd = dd;
                        found = true;
                    }
                }
        if (!found) return std::nullopt;
        const GaussRational x(Rational(ra, rho.den()), Rational(rb, rho.den()));
        const GaussRational y(Rational(rc, rho.den()), Rational(rd, rho.den()));
        GMatrix C(2);
        C(0, 0) = x;
        C(0, 1) = -y.conj();
        C(1, 0) = y;
        C(1, 1) = x.conj();
        return C;
    }
    if (sig.e == 1) {
        // signature (1,1): boost with |x|^2 - |y|^2 = rho.
        const Rational half(1, 2);
        const Rational x = (rho + Rational(1)) * half;
        const Rational y = (rho - Rational(1)) * half;
        GMatrix C(2);
        C(0, 0) = GaussRational(x);
        C(0, 1) = GaussRational(y);
        C(1, 0) = GaussRational(y);
        C(1, 1) = GaussRational(x);
        return C;
    }
    return std::nullopt;
}

InitialValue extract_initial_value(const HoloMap& phi, const Signature& sig) {
    if (phi.dim() != sig.n) throw dimension_mismatch("extraction dimension mismatch");
    const GMatrix C = phi.linear_z();
    std::vector<GaussRational> a = C.inverse().apply(phi.f_w0());
    for (auto& c : a) c = -c;
    const Rational rho = phi.g_w0().re;
    if (rho.is_zero()) throw precondition_error("extraction requires Re dg/dw|0 != 0");
    // 2 rho r = Re d2g/dw2|0 = 2 Re(w^2 coefficient of g).
    Rational r(0);
    if (phi.truncation() >= 4) r = phi.g_ww_coeff().re / rho;
    return InitialValue(sig, C, std::move(a), rho, r);
}

} // namespace cm
