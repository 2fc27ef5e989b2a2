#include "cm/rational.hpp"

#include "cm/errors.hpp"

#include <ostream>

namespace cm {

Rational::Rational(long num, long den) {
    if (den == 0) throw error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) throw error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

std::optional<Rational> Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 >= text.size()) return std::nullopt;
    const std::string ns = text.substr(0, slash);
    const std::string ds = text.substr(slash + 1);
    auto digits = [](const std::string& s, size_t from) {
        if (from >= s.size()) return false;
        for (size_t i = from; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!digits(ns, ns[0] == '-' ? 1 : 0) || !digits(ds, 0)) return std::nullopt;
    mpz_class num(ns), den(ds);
    if (sgn(den) <= 0) return std::nullopt;
    Rational r(num, den);
    // Canonicity check: re-emitting must reproduce the input exactly.
    if (r.str() != text) return std::nullopt;
    return r;
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw error("rational division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::abs() const {
    Rational r;
    r.q_ = ::abs(q_);
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw error("inverse of zero");
    Rational r;
    r.q_ = 1 / q_;
    return r;
}

std::optional<Rational> Rational::sqrt() const {
    if (sign() < 0) return std::nullopt;
    const mpz_class& n = num();
    const mpz_class& d = den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(rn, rd);
}

std::string Rational::str() const {
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace cm
