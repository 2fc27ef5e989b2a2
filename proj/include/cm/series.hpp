#pragma once

#include "cm/errors.hpp"
#include "cm/gauss_rational.hpp"
#include "cm/monomial.hpp"

#include <complex>
#include <map>
#include <vector>

namespace cm {

/// Truncated formal series in (z, zbar, u) with Gaussian-rational
/// coefficients.  Terms of weight above the truncation are unrepresented and
/// semantically unknown; zero coefficients are never stored.
class SeriesC {
public:
    using TermMap = std::map<RealMonomial, GaussRational, RealMonomialLess>;

    SeriesC(int n, int trunc);

    static SeriesC monomial(int n, int trunc, const RealMonomial& m, const GaussRational& c);

    int dim() const { return n_; }
    int truncation() const { return trunc_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    GaussRational coeff(const RealMonomial& m) const;
    void add_term(const RealMonomial& m, const GaussRational& c);
    void set_coeff(const RealMonomial& m, const GaussRational& c);

    SeriesC operator-() const;
    SeriesC& operator+=(const SeriesC& o);
    SeriesC& operator-=(const SeriesC& o);
    friend SeriesC operator+(SeriesC a, const SeriesC& b) { return a += b; }
    friend SeriesC operator-(SeriesC a, const SeriesC& b) { return a -= b; }
    SeriesC operator*(const SeriesC& o) const;

    SeriesC scaled(const GaussRational& c) const;
    SeriesC conjugated() const;

    /// Copy with truncation lowered to K (terms above K dropped).
    SeriesC truncated(int K) const;

    /// Copy carrying truncation K even when K exceeds the current one.  The
    /// caller asserts the terms are complete through K (used where the
    /// multiplicative truncation convention guarantees it).
    SeriesC with_truncation(int K) const;

    /// Sum of the terms of weight exactly m, as a series truncated at m.
    SeriesC weight_component(int m) const;

    /// Terms with |I| = s and |J| = t, any u power.
    SeriesC bidegree_component(int s, int t) const;

    /// True iff all weight components below m agree.
    bool equal_mod_weight(const SeriesC& o, int m) const;

    /// Least weight of a stored term, or -1 for the zero series.
    int lowest_weight() const;

    SeriesC derivative_z(int alpha) const;
    SeriesC derivative_zbar(int alpha) const;
    SeriesC derivative_u() const;

    /// Substitute u -> u + u0 and re-expand (exact on the stored polynomial).
    SeriesC shifted_u(const Rational& u0) const;

    /// Coefficient-wise reality: coeff(I,J,k) == conj(coeff(J,I,k)).
    bool is_real() const;

    /// Substitute z_a -> Z[a], zbar_a -> Zb[a], u -> U.  The arguments must
    /// have lowest weight >= 1 (>= 2 for U) so the substitution is
    /// weight-graded; the result is truncated at result_trunc.
    SeriesC substituted(const std::vector<SeriesC>& Z, const std::vector<SeriesC>& Zb,
                        const SeriesC& U, int result_trunc) const;

    std::complex<double> eval(const std::vector<std::complex<double>>& z, double u) const;

    friend bool operator==(const SeriesC& a, const SeriesC& b) {
        return a.n_ == b.n_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SeriesC& a, const SeriesC& b) { return !(a == b); }

    std::string str() const;

private:
    void check_same_space(const SeriesC& o) const;

    int n_;
    int trunc_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const SeriesC& s);

/// Real-valued series: closed under the reality condition
/// coeff(I,J,k) = conj(coeff(J,I,k)).
class RealSeries {
public:
    explicit RealSeries(SeriesC s);
    static RealSeries zero(int n, int trunc) { return RealSeries(SeriesC(n, trunc)); }

    const SeriesC& complex_form() const { return s_; }
    int dim() const { return s_.dim(); }
    int truncation() const { return s_.truncation(); }
    bool is_zero() const { return s_.is_zero(); }

    RealSeries operator-() const { return RealSeries(-s_, unchecked{}); }
    RealSeries& operator+=(const RealSeries& o) {
        s_ += o.s_;
        return *this;
    }
    RealSeries& operator-=(const RealSeries& o) {
        s_ -= o.s_;
        return *this;
    }
    friend RealSeries operator+(RealSeries a, const RealSeries& b) { return a += b; }
    friend RealSeries operator-(RealSeries a, const RealSeries& b) { return a -= b; }
    RealSeries operator*(const RealSeries& o) const { return RealSeries(s_ * o.s_, unchecked{}); }

    RealSeries scaled(const Rational& r) const {
        return RealSeries(s_.scaled(GaussRational(r)), unchecked{});
    }
    RealSeries truncated(int K) const { return RealSeries(s_.truncated(K), unchecked{}); }
    RealSeries weight_component(int m) const {
        return RealSeries(s_.weight_component(m), unchecked{});
    }
    RealSeries shifted_u(const Rational& u0) const {
        return RealSeries(s_.shifted_u(u0), unchecked{});
    }
    RealSeries conjugated() const { return RealSeries(s_.conjugated(), unchecked{}); }

    bool equal_mod_weight(const RealSeries& o, int m) const { return s_.equal_mod_weight(o.s_, m); }
    int lowest_weight() const { return s_.lowest_weight(); }

    friend bool operator==(const RealSeries& a, const RealSeries& b) { return a.s_ == b.s_; }
    friend bool operator!=(const RealSeries& a, const RealSeries& b) { return !(a == b); }

private:
    struct unchecked {};
    RealSeries(SeriesC s, unchecked) : s_(std::move(s)) {}
    SeriesC s_;
};

} // namespace cm
