#include "abeltrace/ratfunc.hpp"

#include "abeltrace/errors.hpp"

#include <cassert>

namespace abeltrace {

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ZeroDegree("rational function with zero denominator");
    normalize();
}

RatFunc::RatFunc(MultiPoly num, MultiPoly den, reduced_tag)
    : num_(std::move(num)), den_(std::move(den)) {
    normalize_scale();
}

RatFunc RatFunc::from_poly(MultiPoly p) {
    int n = p.n();
    return RatFunc(std::move(p), MultiPoly::constant(n, Rational(1)), reduced_tag{});
}

void RatFunc::normalize() {
    if (!num_.is_constant() && !den_.is_constant()) {
        MultiPoly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
    }
    normalize_scale();
}

void RatFunc::normalize_scale() {
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(num_.n(), Rational(1));
        return;
    }
    // Unique scale: den primitive over Z with positive leading coefficient.
    MultiPoly prim = normalize_primitive(den_);
    Rational s = den_.leading_coeff() / prim.leading_coeff();
    den_ = std::move(prim);
    num_ *= s.inverse();
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

// Sum and product follow the classical UFD reductions (as mpq does over Z):
// with both operands reduced the stated gcds are the only possible common
// factors, so the results are reduced by construction.
RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    assert(a.n() == b.n());
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one())
        return RatFunc::from_poly(a.num_ + b.num_);
    MultiPoly g = poly_gcd(a.den_, b.den_);
    if (g.is_constant()) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_,
                       RatFunc::reduced_tag{});
    }
    MultiPoly bd_red = divide_exact(b.den_, g);
    MultiPoly t = a.num_ * bd_red + b.num_ * divide_exact(a.den_, g);
    MultiPoly g2 = poly_gcd(t, g);
    if (g2.is_constant())
        return RatFunc(std::move(t), a.den_ * bd_red, RatFunc::reduced_tag{});
    return RatFunc(divide_exact(t, g2), divide_exact(a.den_, g2) * bd_red,
                   RatFunc::reduced_tag{});
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    assert(a.n() == b.n());
    if (a.is_zero() || b.is_zero()) return RatFunc(a.n());
    MultiPoly an = a.num_, bd = b.den_;
    if (!an.is_constant() && !bd.is_constant()) {
        MultiPoly g1 = poly_gcd(an, bd);
        if (!g1.is_constant()) {
            an = divide_exact(an, g1);
            bd = divide_exact(bd, g1);
        }
    }
    MultiPoly bn = b.num_, ad = a.den_;
    if (!bn.is_constant() && !ad.is_constant()) {
        MultiPoly g2 = poly_gcd(bn, ad);
        if (!g2.is_constant()) {
            bn = divide_exact(bn, g2);
            ad = divide_exact(ad, g2);
        }
    }
    return RatFunc(an * bn, ad * bd, RatFunc::reduced_tag{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    return a * b.inverse();
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw ZeroDegree("inverse of the zero rational function");
    return RatFunc(den_, num_, reduced_tag{});
}

RatFunc RatFunc::derivative(int slot) const {
    // (n/d)' = (n' (d/g) - n (d'/g)) / (d (d/g)) with g = gcd(d, d')
    MultiPoly dn = num_.derivative(slot);
    MultiPoly dd = den_.derivative(slot);
    if (dd.is_zero()) return RatFunc(std::move(dn), den_);
    MultiPoly g = poly_gcd(den_, dd);
    MultiPoly den_red = g.is_constant() ? den_ : divide_exact(den_, g);
    MultiPoly dd_red = g.is_constant() ? dd : divide_exact(dd, g);
    return RatFunc(dn * den_red - num_ * dd_red, den_ * den_red);
}

std::optional<Rational> RatFunc::try_eval(const std::vector<Rational>& point) const {
    Rational d = den_.eval(point);
    if (d.is_zero()) return std::nullopt;
    return num_.eval(point) / d;
}

std::complex<double> RatFunc::eval(const std::vector<std::complex<double>>& point) const {
    return num_.eval(point) / den_.eval(point);
}

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc pow_ratfunc(const RatFunc& x, unsigned e) {
    RatFunc r = RatFunc::constant(x.n(), Rational(1));
    RatFunc base = x;
    while (e > 0) {
        if (e & 1u) r *= base;
        e >>= 1u;
        if (e > 0) base *= base;
    }
    return r;
}

} // namespace abeltrace
