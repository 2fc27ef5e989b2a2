#include "cm/transform.hpp"

#include "cm/quadric_group.hpp"

#include "doctest.h"
#include "test_util.hpp"

using namespace cm;
using cmtest::Rng;

namespace {

/// v = z zbar + b z^4 zbar^2 + c z^5 zbar^2 + d z^4 zbar^3 + conjugates,
/// truncated at K.
Hypersurface bcd_surface(const GaussRational& b, const GaussRational& c, const GaussRational& d,
                         int K) {
    SeriesC F(1, K);
    F.add_term(RealMonomial{{1}, {1}, 0}, GaussRational(1));
    F.add_term(RealMonomial{{4}, {2}, 0}, b);
    F.add_term(RealMonomial{{2}, {4}, 0}, b.conj());
    F.add_term(RealMonomial{{5}, {2}, 0}, c);
    F.add_term(RealMonomial{{2}, {5}, 0}, c.conj());
    F.add_term(RealMonomial{{4}, {3}, 0}, d);
    F.add_term(RealMonomial{{3}, {4}, 0}, d.conj());
    return Hypersurface(Signature(1, 1), RealSeries(std::move(F)));
}

InitialValue psi_sigma(const GaussRational& a) {
    return InitialValue(Signature(1, 1), GMatrix::identity(1), {a}, Rational(1), Rational(0));
}

} // namespace

TEST_CASE("substitute w = u + iF") {
    const auto Q = Hypersurface::hyperquadric(Signature(1, 1), 6);
    // h = w on any surface gives u + iF
    SeriesC got = substitute_w(HoloSeries::coordinate_w(1, 6), Q);
    SeriesC want(1, 6);
    want.add_term(RealMonomial{{0}, {0}, 1}, GaussRational(1));
    want.add_term(RealMonomial{{1}, {1}, 0}, GaussRational::i());
    CHECK(got == want);
    // Im of the result is the form itself (the weight-2 identity)
    CHECK((got - got.conjugated()).scaled(GaussRational(Rational(0), Rational(-1, 2))) ==
          hermitian_form(Signature(1, 1), 6).complex_form());

    // h = w^2 on v = z zbar: u^2 - (z zbar)^2 + 2 i u z zbar
    HoloSeries h(1, 6);
    h.add_term(HoloMonomial{{0}, 2}, GaussRational(1));
    SeriesC got2 = substitute_w(h, Q);
    SeriesC want2(1, 6);
    want2.add_term(RealMonomial{{0}, {0}, 2}, GaussRational(1));
    want2.add_term(RealMonomial{{2}, {2}, 0}, GaussRational(Rational(-1)));
    want2.add_term(RealMonomial{{1}, {1}, 1}, GaussRational(Rational(0), Rational(2)));
    CHECK(got2 == want2);
}

TEST_CASE("identity transform") {
    Rng rng(51);
    for (auto sigpair : {std::pair{1, 1}, {2, 1}}) {
        const Signature sig(sigpair.first, sigpair.second);
        auto M = cmtest::rand_hypersurface(rng, sig, 7);
        CHECK(transform_hypersurface(HoloMap::identity(sig.n, 7), M) == M);
    }
}

TEST_CASE("psi pushforward of the b,c,d surface") {
    // Transform by the a-map: the image has coefficients c + 4ib conj(a) on
    // z^5 zbar^2, d + 2iba on z^4 zbar^3, 4ba on u z^3 zbar^2 and 2b conj(a)
    // on u z^4 zbar, plus conjugates.
    Rng rng(52);
    for (int trial = 0; trial < 3; ++trial) {
        const GaussRational b = cmtest::rand_gauss_nonzero(rng);
        const GaussRational c = cmtest::rand_gauss(rng);
        const GaussRational d = cmtest::rand_gauss(rng);
        const GaussRational a = cmtest::rand_gauss_nonzero(rng);
        const auto M = bcd_surface(b, c, d, 7);
        const auto psi = phi_sigma_series(psi_sigma(a), 7);
        const auto img = transform_hypersurface(psi, M).defining_series().complex_form();

        const GaussRational I = GaussRational::i();
        CHECK(img.coeff(RealMonomial{{4}, {2}, 0}) == b);
        CHECK(img.coeff(RealMonomial{{5}, {2}, 0}) ==
              c + GaussRational(Rational(4)) * I * b * a.conj());
        CHECK(img.coeff(RealMonomial{{4}, {3}, 0}) == d + GaussRational(Rational(2)) * I * b * a);
        CHECK(img.coeff(RealMonomial{{3}, {2}, 1}) == GaussRational(Rational(4)) * b * a);
        CHECK(img.coeff(RealMonomial{{4}, {1}, 1}) ==
              GaussRational(Rational(2)) * b * a.conj());
        // conjugate side comes along through reality
        CHECK(img.coeff(RealMonomial{{2}, {5}, 0}) ==
              (c + GaussRational(Rational(4)) * I * b * a.conj()).conj());
    }
}

TEST_CASE("transformed series is real and the residual vanishes") {
    Rng rng(53);
    for (auto sigpair : {std::pair{1, 1}, {2, 2}}) {
        const Signature sig(sigpair.first, sigpair.second);
        for (int trial = 0; trial < 3; ++trial) {
            auto M = cmtest::rand_hypersurface(rng, sig, 6, 5);
            auto s = cmtest::rand_sigma(rng, sig);
            auto phi = phi_sigma_series(s, 6);
            auto img = transform_hypersurface(phi, M);
            CHECK(img.defining_series().complex_form().is_real());
            CHECK(transform_residual(phi, M, img.defining_series()).is_zero());
        }
    }
}

TEST_CASE("functoriality of the transform") {
    Rng rng(54);
    const Signature sig(1, 1);
    for (int trial = 0; trial < 3; ++trial) {
        auto M = cmtest::rand_hypersurface(rng, sig, 6, 4);
        auto s1 = cmtest::rand_sigma(rng, sig);
        auto s2 = cmtest::rand_sigma(rng, sig);
        auto phi1 = phi_sigma_series(s1, 6);
        auto phi2 = phi_sigma_series(s2, 6);
        auto lhs = transform_hypersurface(compose_maps(phi1, phi2), M);
        auto rhs = transform_hypersurface(phi1, transform_hypersurface(phi2, M));
        CHECK(lhs.defining_series().equal_mod_weight(rhs.defining_series(), 7));
    }
}

TEST_CASE("truncation stability of the transform") {
    // perturbing the input surface above the truncation of comparison does
    // not change the image below it
    Rng rng(55);
    const Signature sig(1, 1);
    auto M = cmtest::rand_hypersurface(rng, sig, 8, 5);
    auto s = cmtest::rand_sigma(rng, sig);
    auto phi = phi_sigma_series(s, 8);
    SeriesC Fp = M.defining_series().complex_form();
    Fp.add_term(RealMonomial{{4}, {3}, 0}, GaussRational(Rational(7, 2)));
    Fp.add_term(RealMonomial{{3}, {4}, 0}, GaussRational(Rational(7, 2)));
    auto Mp = Hypersurface(sig, RealSeries(Fp));
    auto img = transform_hypersurface(phi, M);
    auto imgp = transform_hypersurface(phi, Mp);
    CHECK(img.defining_series().equal_mod_weight(imgp.defining_series(), 7));
}

TEST_CASE("images with invalid weight-2 part are rejected") {
    // g with dg/dw|0 not real produces a u term in the image
    HoloSeries f = HoloSeries::coordinate_z(1, 5, 0);
    HoloSeries g(1, 6);
    g.add_term(HoloMonomial{{0}, 1}, GaussRational(Rational(1), Rational(1)));
    const auto Q = Hypersurface::hyperquadric(Signature(1, 1), 6);
    CHECK_THROWS_AS(transform_hypersurface(HoloMap({f}, g), Q), precondition_error);
}
