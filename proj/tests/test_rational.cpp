#include "cm/gauss_rational.hpp"
#include "cm/rational.hpp"

#include "doctest.h"
#include "test_util.hpp"

using namespace cm;

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0/1");
    CHECK(Rational(5).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), error);
}

TEST_CASE("rational arithmetic") {
    const Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK(a.inverse() == Rational(3));
    CHECK_THROWS_AS(a / Rational(0), error);
}

TEST_CASE("strict rational parsing") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("0/1") == Rational(0));
    CHECK(!Rational::parse("2/4"));   // not reduced
    CHECK(!Rational::parse("3/-4"));  // negative denominator
    CHECK(!Rational::parse("-0/1"));
    CHECK(!Rational::parse("3"));
    CHECK(!Rational::parse("3/"));
    CHECK(!Rational::parse("a/ب"));
    CHECK(!Rational::parse("1/0"));
}

TEST_CASE("rational square roots") {
    CHECK(Rational(9, 4).sqrt() == Rational(3, 2));
    CHECK(Rational(0).sqrt() == Rational(0));
    CHECK(!Rational(2).sqrt());
    CHECK(!Rational(-1).sqrt());
}

TEST_CASE("gaussian rational arithmetic") {
    const GaussRational i = GaussRational::i();
    CHECK(i * i == GaussRational(Rational(-1)));
    const GaussRational z(Rational(1, 2), Rational(-3, 4));
    CHECK(z * z.inverse() == GaussRational(1));
    CHECK(z.conj().conj() == z);
    CHECK(z + z.conj() == GaussRational(Rational(1)));
    CHECK(z.norm() == Rational(1, 4) + Rational(9, 16));
    CHECK(z.times_i() == i * z);
}

TEST_CASE("gaussian square roots") {
    // (1+i)^2 = 2i
    auto r = GaussRational(Rational(0), Rational(2)).sqrt();
    REQUIRE(r.has_value());
    CHECK(*r * *r == GaussRational(Rational(0), Rational(2)));
    CHECK(r->re.sign() > 0);
    // negative real: sqrt(-9/4) = (3/2) i
    auto s = GaussRational(Rational(-9, 4)).sqrt();
    REQUIRE(s.has_value());
    CHECK(*s == GaussRational(Rational(0), Rational(3, 2)));
    CHECK(!GaussRational(Rational(2)).sqrt());
    CHECK(!GaussRational(Rational(1), Rational(1)).sqrt());

    cmtest::Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const GaussRational w = cmtest::rand_gauss(rng);
        auto root = (w * w).sqrt();
        REQUIRE(root.has_value());
        CHECK(*root * *root == w * w);
    }
}
