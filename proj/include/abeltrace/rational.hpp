#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace abeltrace {

// Exact rational number. Always kept canonical: gcd(|num|, den) = 1,
// den >= 1, zero is 0/1. Backed by GMP.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long v) : q_(v) {} // NOLINT: implicit, mirrors integer literals
    Rational(long num, long den);
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    // Accepts "p", "-p", "p/q". Throws SyntaxError on malformed input.
    static Rational from_string(const std::string& text);

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
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
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }
    Rational pow(unsigned e) const;
    Rational inverse() const;

    // Canonical text form "p" or "p/q"; parse_poly round-trips it.
    std::string str() const;
    double to_double() const { return q_.get_d(); }

private:
    mpq_class q_;
};

} // namespace abeltrace
