#pragma once

#include "abeltrace/ratfunc.hpp"

#include <utility>
#include <vector>

namespace abeltrace {

// Polynomial in Y over the rational-function field M = Q(a, b).
// coeffs[k] is the coefficient of Y^k; the top stored coefficient is
// nonzero unless the polynomial is zero.
class UniPolyK {
public:
    explicit UniPolyK(int n) : n_(n) {}
    UniPolyK(int n, std::vector<RatFunc> coeffs) : n_(n), c_(std::move(coeffs)) { trim(); }

    static UniPolyK constant(int n, RatFunc c);
    static UniPolyK y_power(int n, int k); // Y^k

    int n() const { return n_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    RatFunc coeff(int k) const;
    const std::vector<RatFunc>& coeffs() const { return c_; }
    RatFunc leading() const { return c_.empty() ? RatFunc(n_) : c_.back(); }

    UniPolyK operator-() const;
    friend UniPolyK operator+(const UniPolyK& a, const UniPolyK& b);
    friend UniPolyK operator-(const UniPolyK& a, const UniPolyK& b);
    friend UniPolyK operator*(const UniPolyK& a, const UniPolyK& b);
    UniPolyK& operator+=(const UniPolyK& o) { return *this = *this + o; }
    UniPolyK& operator-=(const UniPolyK& o) { return *this = *this - o; }
    UniPolyK& operator*=(const UniPolyK& o) { return *this = *this * o; }
    UniPolyK scaled(const RatFunc& c) const;
    UniPolyK shifted(int k) const; // * Y^k
    UniPolyK pow(unsigned e) const;

    bool operator==(const UniPolyK& o) const { return n_ == o.n_ && c_ == o.c_; }

    UniPolyK derivative_Y() const;
    UniPolyK derivative_slot(int slot) const; // coefficient-wise d/d(var)

    // True when every coefficient lies in M (no x or y variables).
    bool coeffs_in_M() const;

    std::string str(const std::string& yname = "Y") const;

private:
    int n_;
    std::vector<RatFunc> c_;
    void trim();
};

struct DivModResult {
    UniPolyK quotient;
    UniPolyK remainder;
};

// Euclidean division by a monic divisor; exact in M[Y].
DivModResult divmod_monic(const UniPolyK& g, const UniPolyK& f);
UniPolyK mod_monic(const UniPolyK& g, const UniPolyK& f);

// Division by an arbitrary nonzero divisor (field coefficients).
DivModResult divmod_field(const UniPolyK& g, const UniPolyK& f);

// Monic gcd in M[Y]; gcd(0, 0) = 0.
UniPolyK gcd_monic(const UniPolyK& a, const UniPolyK& b);

// Extended Euclid: E with D*E = 1 (mod F), deg E < deg F.
// Throws NotCoprime when gcd(D, F) has positive degree.
UniPolyK inverse_mod(const UniPolyK& d, const UniPolyK& f);

// Sylvester-matrix resultant (fraction-free determinant underneath).
RatFunc resultant(const UniPolyK& f, const UniPolyK& g);

// Disc F = (-1)^(d(d-1)/2) Res(F, F') for monic F, deg F = d >= 1.
RatFunc discriminant(const UniPolyK& f);

// F / leading(F); optionally reports the discarded leading coefficient.
UniPolyK monicized(const UniPolyK& f, RatFunc* lc = nullptr);

} // namespace abeltrace
