#pragma once

#include "cm/hermitian.hpp"
#include "cm/holo_map.hpp"
#include "cm/matrix.hpp"

#include <vector>

namespace cm {

/// Initial value sigma = (C, a, rho, r): the jet data parametrizing the
/// isotropy group H of the hyperquadric, with <Cz,Cz> = rho <z,z>.
class InitialValue {
public:
    InitialValue(Signature sig, GMatrix C, std::vector<GaussRational> a, Rational rho, Rational r);

    static InitialValue identity(const Signature& sig);

    const Signature& sig() const { return sig_; }
    const GMatrix& C() const { return C_; }
    const std::vector<GaussRational>& a() const { return a_; }
    const Rational& rho() const { return rho_; }
    const Rational& r() const { return r_; }

    bool is_identity() const;

    friend bool operator==(const InitialValue& x, const InitialValue& y) {
        return x.sig_ == y.sig_ && x.C_ == y.C_ && x.a_ == y.a_ && x.rho_ == y.rho_ &&
               x.r_ == y.r_;
    }
    friend bool operator!=(const InitialValue& x, const InitialValue& y) { return !(x == y); }

private:
    Signature sig_;
    GMatrix C_;
    std::vector<GaussRational> a_;
    Rational rho_;
    Rational r_;
};

/// Constructor with full invariant checking (rho != 0, C conformal for rho).
InitialValue validate_sigma(const Signature& sig, const GMatrix& C,
                            const std::vector<GaussRational>& a, const Rational& rho,
                            const Rational& r);

/// (C^{-1}, -rho^{-1} C a, rho^{-1}, -r rho^{-1}).
InitialValue sigma_inverse(const InitialValue& s);

/// Factorization sigma = phi_part * psi_part with psi = (I, a, 1, 0) and
/// phi = (C, 0, rho, r).
std::pair<InitialValue, InitialValue> sigma_decompose(const InitialValue& s);

/// Jet data of a map: C = df/dz|0, -Ca = df/dw|0, rho = Re dg/dw|0,
/// 2 rho r = Re d2g/dw2|0.
InitialValue extract_initial_value(const HoloMap& phi, const Signature& sig);

/// Some Gaussian-rational matrix with <Cz,Cz> = rho <z,z>, when one exists:
/// sqrt(rho) I if the root is rational, else (n = 2) a two-square or boost
/// construction.  nullopt when no exact representative is found.
std::optional<GMatrix> conformal_with_multiplier(const Signature& sig, const Rational& rho);

} // namespace cm
