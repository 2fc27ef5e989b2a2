#include "cm/gauss_rational.hpp"

#include "cm/errors.hpp"

#include <ostream>

namespace cm {

GaussRational& GaussRational::operator/=(const GaussRational& o) {
    if (o.is_zero()) throw error("Gaussian rational division by zero");
    const Rational n = o.norm();
    const Rational r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = r;
    return *this;
}

GaussRational GaussRational::inverse() const {
    if (is_zero()) throw error("inverse of zero");
    const Rational n = norm();
    return {re / n, -im / n};
}

std::optional<GaussRational> GaussRational::sqrt() const {
    if (im.is_zero()) {
        if (re.sign() >= 0) {
            auto s = re.sqrt();
            if (!s) return std::nullopt;
            return GaussRational(*s, Rational(0));
        }
        auto s = (-re).sqrt();
        if (!s) return std::nullopt;
        return GaussRational(Rational(0), *s);
    }
    // (p + qi)^2 = x + yi requires p^2 = (x+m)/2 with m = sqrt(x^2+y^2),
    // then q = y / (2p).
    auto m = norm().sqrt();
    if (!m) return std::nullopt;
    const Rational half(1, 2);
    auto p2 = (re + *m) * half;
    auto p = p2.sqrt();
    if (!p || p->is_zero()) return std::nullopt;
    Rational q = im / (Rational(2) * *p);
    GaussRational root(*p, q);
    if (root * root != *this) return std::nullopt;
    if (root.re.sign() < 0 || (root.re.is_zero() && root.im.sign() < 0)) root = -root;
    return root;
}

std::string GaussRational::str() const {
    if (im.is_zero()) return re.str();
    if (re.is_zero()) return im.str() + "*i";
    return re.str() + (im.sign() >= 0 ? "+" : "") + im.str() + "*i";
}

std::ostream& operator<<(std::ostream& os, const GaussRational& g) {
    return os << g.str();
}

} // namespace cm
