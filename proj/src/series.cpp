#include "cm/series.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace cm {

SeriesC::SeriesC(int n, int trunc) : n_(n), trunc_(trunc) {
    if (n < 1) throw error("series dimension must be positive");
    if (trunc < 0) throw error("negative truncation weight");
}

SeriesC SeriesC::monomial(int n, int trunc, const RealMonomial& m, const GaussRational& c) {
    SeriesC s(n, trunc);
    s.add_term(m, c);
    return s;
}

void SeriesC::check_same_space(const SeriesC& o) const {
    if (n_ != o.n_) throw dimension_mismatch("series over different dimensions");
}

GaussRational SeriesC::coeff(const RealMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussRational() : it->second;
}

void SeriesC::add_term(const RealMonomial& m, const GaussRational& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(m.zp.size()) != n_ || static_cast<int>(m.zbp.size()) != n_)
        throw dimension_mismatch("monomial exponent length != series dimension");
    if (m.weight() > trunc_) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void SeriesC::set_coeff(const RealMonomial& m, const GaussRational& c) {
    terms_.erase(m);
    add_term(m, c);
}

SeriesC SeriesC::operator-() const {
    SeriesC r(n_, trunc_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

SeriesC& SeriesC::operator+=(const SeriesC& o) {
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

SeriesC& SeriesC::operator-=(const SeriesC& o) { return *this += -o; }

SeriesC SeriesC::operator*(const SeriesC& o) const {
    check_same_space(o);
    SeriesC r(n_, std::min(trunc_, o.trunc_));
    // Both term maps iterate in ascending weight, so the inner loop can stop
    // as soon as the combined weight exceeds the truncation.
    for (const auto& [ma, ca] : terms_) {
        const int wa = ma.weight();
        if (wa > r.trunc_) break;
        for (const auto& [mb, cb] : o.terms_) {
            if (wa + mb.weight() > r.trunc_) break;
            RealMonomial m;
            m.zp.resize(n_);
            m.zbp.resize(n_);
            for (int i = 0; i < n_; ++i) {
                m.zp[i] = ma.zp[i] + mb.zp[i];
                m.zbp[i] = ma.zbp[i] + mb.zbp[i];
            }
            m.up = ma.up + mb.up;
            auto [it, inserted] = r.terms_.emplace(std::move(m), ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

SeriesC SeriesC::scaled(const GaussRational& c) const {
    SeriesC r(n_, trunc_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

SeriesC SeriesC::conjugated() const {
    SeriesC r(n_, trunc_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m.conjugate(), c.conj());
    return r;
}

SeriesC SeriesC::truncated(int K) const {
    SeriesC r(n_, std::min(K, trunc_));
    for (const auto& [m, c] : terms_) {
        if (m.weight() > r.trunc_) break;
        r.terms_.emplace(m, c);
    }
    return r;
}

SeriesC SeriesC::with_truncation(int K) const {
    SeriesC r(n_, K);
    for (const auto& [m, c] : terms_) {
        if (m.weight() > K) break;
        r.terms_.emplace(m, c);
    }
    return r;
}

SeriesC SeriesC::weight_component(int m) const {
    if (m > trunc_) throw under_truncated("weight component beyond truncation");
    SeriesC r(n_, m);
    for (const auto& [mo, c] : terms_) {
        if (mo.weight() > m) break;
        if (mo.weight() == m) r.terms_.emplace(mo, c);
    }
    return r;
}

SeriesC SeriesC::bidegree_component(int s, int t) const {
    SeriesC r(n_, trunc_);
    for (const auto& [mo, c] : terms_)
        if (degree(mo.zp) == s && degree(mo.zbp) == t) r.terms_.emplace(mo, c);
    return r;
}

bool SeriesC::equal_mod_weight(const SeriesC& o, int m) const {
    check_same_space(o);
    if (m > std::min(trunc_, o.trunc_) + 1)
        throw under_truncated("comparison weight beyond common truncation");
    auto below = [m](const TermMap& t) {
        std::vector<std::pair<RealMonomial, GaussRational>> v;
        for (const auto& [mo, c] : t) {
            if (mo.weight() >= m) break;
            v.emplace_back(mo, c);
        }
        return v;
    };
    return below(terms_) == below(o.terms_);
}

int SeriesC::lowest_weight() const {
    return terms_.empty() ? -1 : terms_.begin()->first.weight();
}

SeriesC SeriesC::derivative_z(int alpha) const {
    SeriesC r(n_, std::max(trunc_ - 1, 0));
    for (const auto& [m, c] : terms_) {
        if (m.zp[alpha] == 0) continue;
        RealMonomial d = m;
        d.zp[alpha] -= 1;
        r.add_term(d, c * GaussRational(Rational(m.zp[alpha])));
    }
    return r;
}

SeriesC SeriesC::derivative_zbar(int alpha) const {
    SeriesC r(n_, std::max(trunc_ - 1, 0));
    for (const auto& [m, c] : terms_) {
        if (m.zbp[alpha] == 0) continue;
        RealMonomial d = m;
        d.zbp[alpha] -= 1;
        r.add_term(d, c * GaussRational(Rational(m.zbp[alpha])));
    }
    return r;
}

SeriesC SeriesC::derivative_u() const {
    SeriesC r(n_, std::max(trunc_ - 2, 0));
    for (const auto& [m, c] : terms_) {
        if (m.up == 0) continue;
        RealMonomial d = m;
        d.up -= 1;
        r.add_term(d, c * GaussRational(Rational(m.up)));
    }
    return r;
}

SeriesC SeriesC::shifted_u(const Rational& u0) const {
    SeriesC r(n_, trunc_);
    for (const auto& [m, c] : terms_) {
        // (u + u0)^k expanded binomially, C(k, j) accumulated incrementally.
        Rational binom(1);
        std::vector<Rational> powers(m.up + 1);
        powers[0] = Rational(1);
        for (int j = 1; j <= m.up; ++j) powers[j] = powers[j - 1] * u0;
        for (int j = 0; j <= m.up; ++j) {
            RealMonomial t = m;
            t.up = j;
            r.add_term(t, c * GaussRational(binom * powers[m.up - j]));
            binom = binom * Rational(m.up - j) / Rational(j + 1);
        }
    }
    return r;
}

bool SeriesC::is_real() const {
    for (const auto& [m, c] : terms_)
        if (coeff(m.conjugate()) != c.conj()) return false;
    return true;
}

SeriesC SeriesC::substituted(const std::vector<SeriesC>& Z, const std::vector<SeriesC>& Zb,
                             const SeriesC& U, int result_trunc) const {
    if (static_cast<int>(Z.size()) != n_ || static_cast<int>(Zb.size()) != n_)
        throw dimension_mismatch("substitution argument count");
    const int tn = U.dim();
    for (const auto& a : Z)
        if (a.lowest_weight() == 0) throw error("substitution argument with constant term");
    if (!U.is_zero() && U.lowest_weight() < 2)
        throw error("u substitution argument of weight < 2");

    // Per-argument power caches plus pattern caches keyed by whole exponent
    // vectors; terms sharing a z or zbar pattern reuse the same product.
    std::vector<std::vector<SeriesC>> zpow(n_), zbpow(n_);
    std::vector<SeriesC> upow;
    auto power = [&](std::vector<SeriesC>& cache, const SeriesC& base, int k) -> const SeriesC& {
        if (cache.empty()) cache.emplace_back(SeriesC::monomial(
            tn, result_trunc, RealMonomial{Exponents(tn, 0), Exponents(tn, 0), 0},
            GaussRational(1)));
        while (static_cast<int>(cache.size()) <= k)
            cache.emplace_back(cache.back() * base.with_truncation(result_trunc));
        return cache[k];
    };
    std::map<Exponents, SeriesC> zpat, zbpat;
    auto pattern = [&](std::map<Exponents, SeriesC>& pats, std::vector<std::vector<SeriesC>>& pows,
                       const std::vector<SeriesC>& bases, const Exponents& e) -> const SeriesC& {
        auto it = pats.find(e);
        if (it != pats.end()) return it->second;
        SeriesC t = SeriesC::monomial(tn, result_trunc,
                                      RealMonomial{Exponents(tn, 0), Exponents(tn, 0), 0},
                                      GaussRational(1));
        for (int a = 0; a < n_ && !t.is_zero(); ++a)
            if (e[a] > 0) t = t * power(pows[a], bases[a], e[a]);
        return pats.emplace(e, std::move(t)).first->second;
    };

    SeriesC r(tn, result_trunc);
    for (const auto& [m, c] : terms_) {
        SeriesC t = pattern(zpat, zpow, Z, m.zp).scaled(c);
        if (!t.is_zero()) t = t * pattern(zbpat, zbpow, Zb, m.zbp);
        if (m.up > 0 && !t.is_zero()) t = t * power(upow, U, m.up);
        r += t;
    }
    return r.truncated(result_trunc);
}

std::complex<double> SeriesC::eval(const std::vector<std::complex<double>>& z, double u) const {
    std::complex<double> acc = 0;
    for (const auto& [m, c] : terms_) {
        std::complex<double> t = c.to_complex();
        for (int a = 0; a < n_; ++a) {
            for (int j = 0; j < m.zp[a]; ++j) t *= z[a];
            for (int j = 0; j < m.zbp[a]; ++j) t *= std::conj(z[a]);
        }
        for (int j = 0; j < m.up; ++j) t *= u;
        acc += t;
    }
    return acc;
}

std::string SeriesC::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")";
        for (int a = 0; a < n_; ++a)
            if (m.zp[a] > 0) os << "*z" << (a + 1) << "^" << m.zp[a];
        for (int a = 0; a < n_; ++a)
            if (m.zbp[a] > 0) os << "*zb" << (a + 1) << "^" << m.zbp[a];
        if (m.up > 0) os << "*u^" << m.up;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const SeriesC& s) { return os << s.str(); }

RealSeries::RealSeries(SeriesC s) : s_(std::move(s)) {
    if (!s_.is_real()) throw validation_error("series violates the reality condition");
}

} // namespace cm
