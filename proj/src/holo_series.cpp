#include "cm/holo_series.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace cm {

HoloSeries::HoloSeries(int n, int trunc) : n_(n), trunc_(trunc) {
    if (n < 1) throw error("series dimension must be positive");
    if (trunc < 0) throw error("negative truncation weight");
}

HoloSeries HoloSeries::monomial(int n, int trunc, const HoloMonomial& m, const GaussRational& c) {
    HoloSeries s(n, trunc);
    s.add_term(m, c);
    return s;
}

HoloSeries HoloSeries::coordinate_z(int n, int trunc, int alpha) {
    HoloMonomial m{Exponents(n, 0), 0};
    m.zp[alpha] = 1;
    return monomial(n, trunc, m, GaussRational(1));
}

HoloSeries HoloSeries::coordinate_w(int n, int trunc) {
    return monomial(n, trunc, HoloMonomial{Exponents(n, 0), 1}, GaussRational(1));
}

void HoloSeries::check_same_space(const HoloSeries& o) const {
    if (n_ != o.n_) throw dimension_mismatch("series over different dimensions");
}

GaussRational HoloSeries::coeff(const HoloMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussRational() : it->second;
}

void HoloSeries::add_term(const HoloMonomial& m, const GaussRational& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(m.zp.size()) != n_)
        throw dimension_mismatch("monomial exponent length != series dimension");
    if (m.weight() > trunc_) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void HoloSeries::set_coeff(const HoloMonomial& m, const GaussRational& c) {
    terms_.erase(m);
    add_term(m, c);
}

HoloSeries HoloSeries::operator-() const {
    HoloSeries r(n_, trunc_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

HoloSeries& HoloSeries::operator+=(const HoloSeries& o) {
    check_same_space(o);
    trunc_ = std::min(trunc_, o.trunc_);
    std::erase_if(terms_, [&](const auto& t) { return t.first.weight() > trunc_; });
    for (const auto& [m, c] : o.terms_) {
        if (m.weight() > trunc_) continue;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

HoloSeries& HoloSeries::operator-=(const HoloSeries& o) { return *this += -o; }

HoloSeries HoloSeries::operator*(const HoloSeries& o) const {
    check_same_space(o);
    HoloSeries r(n_, std::min(trunc_, o.trunc_));
    for (const auto& [ma, ca] : terms_) {
        const int wa = ma.weight();
        if (wa > r.trunc_) break;
        for (const auto& [mb, cb] : o.terms_) {
            if (wa + mb.weight() > r.trunc_) break;
            HoloMonomial m;
            m.zp.resize(n_);
            for (int i = 0; i < n_; ++i) m.zp[i] = ma.zp[i] + mb.zp[i];
            m.wp = ma.wp + mb.wp;
            auto [it, inserted] = r.terms_.emplace(std::move(m), ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

HoloSeries HoloSeries::scaled(const GaussRational& c) const {
    HoloSeries r(n_, trunc_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

HoloSeries HoloSeries::truncated(int K) const {
    HoloSeries r(n_, std::min(K, trunc_));
    for (const auto& [m, c] : terms_) {
        if (m.weight() > r.trunc_) break;
        r.terms_.emplace(m, c);
    }
    return r;
}

HoloSeries HoloSeries::with_truncation(int K) const {
    HoloSeries r(n_, K);
    for (const auto& [m, c] : terms_) {
        if (m.weight() > K) break;
        r.terms_.emplace(m, c);
    }
    return r;
}

HoloSeries HoloSeries::weight_component(int m) const {
    if (m > trunc_) throw under_truncated("weight component beyond truncation");
    HoloSeries r(n_, m);
    for (const auto& [mo, c] : terms_) {
        if (mo.weight() > m) break;
        if (mo.weight() == m) r.terms_.emplace(mo, c);
    }
    return r;
}

bool HoloSeries::equal_mod_weight(const HoloSeries& o, int m) const {
    check_same_space(o);
    if (m > std::min(trunc_, o.trunc_) + 1)
        throw under_truncated("comparison weight beyond common truncation");
    auto below = [m](const TermMap& t) {
        std::vector<std::pair<HoloMonomial, GaussRational>> v;
        for (const auto& [mo, c] : t) {
            if (mo.weight() >= m) break;
            v.emplace_back(mo, c);
        }
        return v;
    };
    return below(terms_) == below(o.terms_);
}

int HoloSeries::lowest_weight() const {
    return terms_.empty() ? -1 : terms_.begin()->first.weight();
}

HoloSeries HoloSeries::derivative_z(int alpha) const {
    HoloSeries r(n_, std::max(trunc_ - 1, 0));
    for (const auto& [m, c] : terms_) {
        if (m.zp[alpha] == 0) continue;
        HoloMonomial d = m;
        d.zp[alpha] -= 1;
        r.add_term(d, c * GaussRational(Rational(m.zp[alpha])));
    }
    return r;
}

HoloSeries HoloSeries::derivative_w() const {
    HoloSeries r(n_, std::max(trunc_ - 2, 0));
    for (const auto& [m, c] : terms_) {
        if (m.wp == 0) continue;
        HoloMonomial d = m;
        d.wp -= 1;
        r.add_term(d, c * GaussRational(Rational(m.wp)));
    }
    return r;
}

SeriesC HoloSeries::substituted_w(const SeriesC& W, int result_trunc) const {
    if (W.dim() != n_) throw dimension_mismatch("w substitution dimension mismatch");
    if (!W.is_zero() && W.lowest_weight() < 2)
        throw error("w substitution argument of weight < 2");
    std::vector<SeriesC> wpow;
    auto power = [&](int k) -> const SeriesC& {
        if (wpow.empty())
            wpow.emplace_back(SeriesC::monomial(
                n_, result_trunc, RealMonomial{Exponents(n_, 0), Exponents(n_, 0), 0},
                GaussRational(1)));
        while (static_cast<int>(wpow.size()) <= k)
            wpow.emplace_back(wpow.back() * W.with_truncation(result_trunc));
        return wpow[k];
    };
    SeriesC r(n_, result_trunc);
    for (const auto& [m, c] : terms_) {
        SeriesC t = SeriesC::monomial(n_, result_trunc,
                                      RealMonomial{m.zp, Exponents(n_, 0), 0}, c);
        if (m.wp > 0) t = t * power(m.wp);
        r += t;
    }
    return r.truncated(result_trunc);
}

HoloSeries HoloSeries::composed(const std::vector<HoloSeries>& F, const HoloSeries& G,
                                int result_trunc) const {
    if (static_cast<int>(F.size()) != n_) throw dimension_mismatch("composition component count");
    const int tn = F.empty() ? n_ : F[0].dim();
    for (const auto& a : F)
        if (a.lowest_weight() == 0) throw error("composition argument with constant term");
    if (!G.is_zero() && G.lowest_weight() < 2)
        throw error("w composition argument of weight < 2");

    std::vector<std::vector<HoloSeries>> zpow(n_);
    std::vector<HoloSeries> wpow;
    auto power = [&](std::vector<HoloSeries>& cache, const HoloSeries& base,
                     int k) -> const HoloSeries& {
        if (cache.empty())
            cache.emplace_back(HoloSeries::monomial(tn, result_trunc,
                                                    HoloMonomial{Exponents(tn, 0), 0},
                                                    GaussRational(1)));
        while (static_cast<int>(cache.size()) <= k)
            cache.emplace_back(cache.back() * base.with_truncation(result_trunc));
        return cache[k];
    };

    HoloSeries r(tn, result_trunc);
    for (const auto& [m, c] : terms_) {
        HoloSeries t =
            HoloSeries::monomial(tn, result_trunc, HoloMonomial{Exponents(tn, 0), 0}, c);
        for (int a = 0; a < n_ && !t.is_zero(); ++a)
            if (m.zp[a] > 0) t = t * power(zpow[a], F[a], m.zp[a]);
        if (m.wp > 0 && !t.is_zero()) t = t * power(wpow, G, m.wp);
        r += t;
    }
    return r.truncated(result_trunc);
}

std::complex<double> HoloSeries::eval(const std::vector<std::complex<double>>& z,
                                      std::complex<double> w) const {
    std::complex<double> acc = 0;
    for (const auto& [m, c] : terms_) {
        std::complex<double> t = c.to_complex();
        for (int a = 0; a < n_; ++a)
            for (int j = 0; j < m.zp[a]; ++j) t *= z[a];
        for (int j = 0; j < m.wp; ++j) t *= w;
        acc += t;
    }
    return acc;
}

std::string HoloSeries::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")";
        for (int a = 0; a < n_; ++a)
            if (m.zp[a] > 0) os << "*z" << (a + 1) << "^" << m.zp[a];
        if (m.wp > 0) os << "*w^" << m.wp;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const HoloSeries& s) { return os << s.str(); }

} // namespace cm
