#pragma once

#include "cm/errors.hpp"
#include "cm/gauss_rational.hpp"
#include "cm/monomial.hpp"
#include "cm/series.hpp"

#include <complex>
#include <map>
#include <vector>

namespace cm {

/// Truncated holomorphic series in (z, w) with wt(z) = 1, wt(w) = 2.
class HoloSeries {
public:
    using TermMap = std::map<HoloMonomial, GaussRational, HoloMonomialLess>;

    HoloSeries(int n, int trunc);

    static HoloSeries monomial(int n, int trunc, const HoloMonomial& m, const GaussRational& c);
    /// The coordinate function z^alpha (0-based index).
    static HoloSeries coordinate_z(int n, int trunc, int alpha);
    static HoloSeries coordinate_w(int n, int trunc);

    int dim() const { return n_; }
    int truncation() const { return trunc_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    GaussRational coeff(const HoloMonomial& m) const;
    void add_term(const HoloMonomial& m, const GaussRational& c);
    void set_coeff(const HoloMonomial& m, const GaussRational& c);

    HoloSeries operator-() const;
    HoloSeries& operator+=(const HoloSeries& o);
    HoloSeries& operator-=(const HoloSeries& o);
    friend HoloSeries operator+(HoloSeries a, const HoloSeries& b) { return a += b; }
    friend HoloSeries operator-(HoloSeries a, const HoloSeries& b) { return a -= b; }
    HoloSeries operator*(const HoloSeries& o) const;

    HoloSeries scaled(const GaussRational& c) const;
    HoloSeries truncated(int K) const;
    /// Copy carrying truncation K even when K exceeds the current one
    /// (caller asserts completeness through K).
    HoloSeries with_truncation(int K) const;
    HoloSeries weight_component(int m) const;
    bool equal_mod_weight(const HoloSeries& o, int m) const;
    int lowest_weight() const;

    HoloSeries derivative_z(int alpha) const;
    HoloSeries derivative_w() const;

    /// View as a series in (z, zbar, u) (zbar-free terms, w -> u treated
    /// separately by callers; here z^I w^m is NOT reinterpreted).  Substitute
    /// w -> W instead:
    SeriesC substituted_w(const SeriesC& W, int result_trunc) const;

    /// Compose with a holomorphic map: z -> F[0..n-1], w -> G.
    HoloSeries composed(const std::vector<HoloSeries>& F, const HoloSeries& G,
                        int result_trunc) const;

    std::complex<double> eval(const std::vector<std::complex<double>>& z,
                              std::complex<double> w) const;

    friend bool operator==(const HoloSeries& a, const HoloSeries& b) {
        return a.n_ == b.n_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const HoloSeries& a, const HoloSeries& b) { return !(a == b); }

    std::string str() const;

private:
    void check_same_space(const HoloSeries& o) const;

    int n_;
    int trunc_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const HoloSeries& s);

} // namespace cm
