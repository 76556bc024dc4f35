#include "abeltrace/unipoly.hpp"

#include "abeltrace/errors.hpp"
#include "abeltrace/linalg.hpp"

#include <cassert>
#include <sstream>

namespace abeltrace {

void UniPolyK::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPolyK UniPolyK::constant(int n, RatFunc c) {
    UniPolyK p(n);
    if (!c.is_zero()) p.c_.push_back(std::move(c));
    return p;
}

UniPolyK UniPolyK::y_power(int n, int k) {
    UniPolyK p(n);
    p.c_.assign(k + 1, RatFunc(n));
    p.c_.back() = RatFunc::constant(n, Rational(1));
    return p;
}

RatFunc UniPolyK::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return RatFunc(n_);
    return c_[k];
}

UniPolyK UniPolyK::operator-() const {
    UniPolyK r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPolyK operator+(const UniPolyK& a, const UniPolyK& b) {
    assert(a.n_ == b.n_);
    UniPolyK r(a.n_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), RatFunc(a.n_));
    for (size_t i = 0; i < r.c_.size(); ++i) {
        if (i < a.c_.size()) r.c_[i] += a.c_[i];
        if (i < b.c_.size()) r.c_[i] += b.c_[i];
    }
    r.trim();
    return r;
}

UniPolyK operator-(const UniPolyK& a, const UniPolyK& b) { return a + (-b); }

UniPolyK operator*(const UniPolyK& a, const UniPolyK& b) {
    assert(a.n_ == b.n_);
    if (a.is_zero() || b.is_zero()) return UniPolyK(a.n_);
    UniPolyK r(a.n_);
    r.c_.assign(a.c_.size() + b.c_.size() - 1, RatFunc(a.n_));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

UniPolyK UniPolyK::scaled(const RatFunc& c) const {
    if (c.is_zero()) return UniPolyK(n_);
    UniPolyK r = *this;
    for (auto& x : r.c_) x *= c;
    return r;
}

UniPolyK UniPolyK::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    UniPolyK r(n_);
    r.c_.assign(c_.size() + k, RatFunc(n_));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

UniPolyK UniPolyK::pow(unsigned e) const {
    UniPolyK r = UniPolyK::constant(n_, RatFunc::constant(n_, Rational(1)));
    UniPolyK base = *this;
    while (e > 0) {
        if (e & 1u) r *= base;
        e >>= 1u;
        if (e > 0) base *= base;
    }
    return r;
}

UniPolyK UniPolyK::derivative_Y() const {
    UniPolyK r(n_);
    if (degree() < 1) return r;
    r.c_.assign(c_.size() - 1, RatFunc(n_));
    for (size_t i = 1; i < c_.size(); ++i)
        r.c_[i - 1] = c_[i] * RatFunc::constant(n_, Rational(static_cast<long>(i)));
    r.trim();
    return r;
}

UniPolyK UniPolyK::derivative_slot(int slot) const {
    UniPolyK r(n_);
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(c.derivative(slot));
    r.trim();
    return r;
}

bool UniPolyK::coeffs_in_M() const {
    for (const auto& c : c_) {
        for (int s = 0; s <= n_; ++s) // x slots and y slot
            if (c.num().uses_slot(s) || c.den().uses_slot(s)) return false;
    }
    return true;
}

std::string UniPolyK::str(const std::string& yname) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const RatFunc& c = c_[k];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool neg = cs.size() > 0 && cs[0] == '-' && c.is_polynomial() && c.num().terms().size() == 1;
        if (neg) cs = cs.substr(1);
        if (first) {
            if (neg) out << '-';
            first = false;
        } else {
            out << (neg ? '-' : '+');
        }
        bool is_unit = cs == "1";
        bool needs_parens = !c.is_polynomial() || c.num().terms().size() > 1;
        if (k == 0) {
            if (needs_parens) out << '(' << cs << ')';
            else out << cs;
        } else {
            if (!is_unit) {
                if (needs_parens) out << '(' << cs << ')';
                else out << cs;
                out << '*';
            }
            out << yname;
            if (k > 1) out << '^' << k;
        }
    }
    return out.str();
}

DivModResult divmod_monic(const UniPolyK& g, const UniPolyK& f) {
    if (f.is_zero() || !f.is_monic())
        throw NonMonicDivisor("divmod_monic requires a monic divisor");
    int df = f.degree();
    UniPolyK q(g.n());
    UniPolyK r = g;
    while (!r.is_zero() && r.degree() >= df) {
        int k = r.degree() - df;
        RatFunc c = r.leading();
        UniPolyK t = UniPolyK::constant(g.n(), c).shifted(k);
        q += t;
        r -= t * f;
    }
    return {std::move(q), std::move(r)};
}

UniPolyK mod_monic(const UniPolyK& g, const UniPolyK& f) {
    return divmod_monic(g, f).remainder;
}

DivModResult divmod_field(const UniPolyK& g, const UniPolyK& f) {
    if (f.is_zero()) throw ZeroDegree("division by the zero polynomial");
    RatFunc lc = f.leading();
    auto [q, r] = divmod_monic(g.scaled(lc.inverse()), f.scaled(lc.inverse()));
    return {std::move(q), r.scaled(lc)};
}

UniPolyK gcd_monic(const UniPolyK& a, const UniPolyK& b) {
    UniPolyK x = a, y = b;
    while (!y.is_zero()) {
        UniPolyK r = divmod_field(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x.scaled(x.leading().inverse());
}

UniPolyK inverse_mod(const UniPolyK& d, const UniPolyK& f) {
    if (f.is_zero() || !f.is_monic())
        throw NonMonicDivisor("inverse_mod requires a monic modulus");
    // extended Euclid on (f, d): r0 = f, r1 = d mod f
    int n = f.n();
    UniPolyK r0 = f, r1 = mod_monic(d, f);
    UniPolyK s0(n), s1 = UniPolyK::constant(n, RatFunc::constant(n, Rational(1)));
    if (r1.is_zero())
        throw NotCoprime("pole divisor shares a root with the modulus");
    while (!r1.is_zero()) {
        auto [q, r] = divmod_field(r0, r1);
        UniPolyK s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.degree() > 0)
        throw NotCoprime("pole divisor shares a root with the modulus");
    UniPolyK e = s0.scaled(r0.coeff(0).inverse());
    return mod_monic(e, f);
}

RatFunc resultant(const UniPolyK& f, const UniPolyK& g) {
    int n = f.n();
    if (f.is_zero() || g.is_zero()) return RatFunc(n);
    int df = f.degree(), dg = g.degree();
    if (df == 0) return f.coeff(0).is_one() ? RatFunc::constant(n, Rational(1))
                                            : pow_ratfunc(f.coeff(0), dg);
    if (dg == 0) return pow_ratfunc(g.coeff(0), df);
    int m = df + dg;
    std::vector<std::vector<RatFunc>> syl(m, std::vector<RatFunc>(m, RatFunc(n)));
    for (int row = 0; row < dg; ++row)
        for (int k = 0; k <= df; ++k)
            syl[row][row + df - k] = f.coeff(k);
    for (int row = 0; row < df; ++row)
        for (int k = 0; k <= dg; ++k)
            syl[dg + row][row + dg - k] = g.coeff(k);
    return det_ratfunc(syl);
}

RatFunc discriminant(const UniPolyK& f) {
    if (f.degree() < 1) throw ZeroDegree("discriminant requires degree >= 1");
    if (!f.is_monic()) throw NonMonicDivisor("discriminant requires a monic polynomial");
    int d = f.degree();
    RatFunc res = resultant(f, f.derivative_Y());
    bool flip = ((static_cast<long>(d) * (d - 1)) / 2) % 2 == 1;
    return flip ? -res : res;
}

UniPolyK monicized(const UniPolyK& f, RatFunc* lc) {
    if (f.is_zero()) throw ZeroDegree("cannot monicize the zero polynomial");
    RatFunc lead = f.leading();
    if (lc) *lc = lead;
    return f.scaled(lead.inverse());
}

} // namespace abeltrace
