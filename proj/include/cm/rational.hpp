#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>

namespace cm {

/// Arbitrary-precision rational, always canonical: gcd(|num|, den) = 1 and
/// den > 0.  Backed by GMP.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);

    /// Strict parser for the canonical form "p/q" (q >= 1, gcd(|p|, q) = 1,
    /// no "-0").  Returns nullopt on anything else.
    static std::optional<Rational> parse(const std::string& text);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational abs() const;
    Rational inverse() const;

    /// Exact square root over the rationals, if one exists.
    std::optional<Rational> sqrt() const;

    /// Canonical string "p/q".
    std::string str() const;

    double to_double() const { return q_.get_d(); }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace cm
