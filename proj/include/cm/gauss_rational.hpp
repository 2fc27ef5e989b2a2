#pragma once

#include "cm/rational.hpp"

#include <complex>
#include <iosfwd>
#include <optional>

namespace cm {

/// Gaussian rational re + im*i with exact components.
struct GaussRational {
    Rational re, im;

    GaussRational() = default;
    GaussRational(Rational r) : re(std::move(r)) {}
    GaussRational(long r) : re(r) {}
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    GaussRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }

    GaussRational operator-() const { return {-re, -im}; }

    GaussRational& operator+=(const GaussRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRational& operator-=(const GaussRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRational& operator*=(const GaussRational& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    GaussRational& operator/=(const GaussRational& o);

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

    /// Multiplication by the imaginary unit.
    GaussRational times_i() const { return {-im, re}; }

    GaussRational inverse() const;

    /// Exact square root in Q(i), if one exists.  Of the two roots the one
    /// with re > 0 (or re == 0 and im >= 0) is returned.
    std::optional<GaussRational> sqrt() const;

    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const GaussRational& g);

} // namespace cm
