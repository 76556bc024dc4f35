#pragma once

#include "abeltrace/multipoly.hpp"

#include <optional>

namespace abeltrace {

// Reduced quotient of two MultiPoly. Canonical form: gcd(num, den) = 1,
// den in primitive normal form over Z with positive leading coefficient,
// zero is 0/1. Equality is therefore representational.
class RatFunc {
public:
    explicit RatFunc(int n)
        : num_(MultiPoly(n)), den_(MultiPoly::constant(n, Rational(1))) {}
    RatFunc(MultiPoly num, MultiPoly den);

    static RatFunc constant(int n, const Rational& c) {
        return RatFunc(MultiPoly::constant(n, c), MultiPoly::constant(n, Rational(1)));
    }
    static RatFunc from_poly(MultiPoly p);
    static RatFunc variable(int n, const VarId& v) {
        return from_poly(MultiPoly::variable(n, v));
    }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    int n() const { return num_.n(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_one(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    RatFunc inverse() const;
    RatFunc derivative(int slot) const;

    // Exact evaluation; nullopt when the point lies on the pole locus.
    std::optional<Rational> try_eval(const std::vector<Rational>& point) const;
    std::complex<double> eval(const std::vector<std::complex<double>>& point) const;

    std::string str() const;

private:
    struct reduced_tag {};
    // Caller guarantees gcd(num, den) = 1; only the canonical scale is applied.
    RatFunc(MultiPoly num, MultiPoly den, reduced_tag);
    MultiPoly num_, den_;
    void normalize();
    void normalize_scale();
};

RatFunc pow_ratfunc(const RatFunc& x, unsigned e);

} // namespace abeltrace
