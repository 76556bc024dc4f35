#pragma once

#include "abeltrace/rational.hpp"
#include "abeltrace/varid.hpp"

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace abeltrace {

// Exponent vector, one entry per variable slot (length 3n+1).
using Monomial = std::vector<int>;

inline int mono_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

// Canonical term order: graded-lex over the global variable order, leading
// term first. Ties within a total degree are broken by the earliest variable
// with the larger exponent, so y^2 precedes a1*y precedes b1 for n = 1.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = mono_degree(a), db = mono_degree(b);
        if (da != db) return da > db;
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

// Sparse multivariate polynomial with exact rational coefficients over the
// full variable set x_1..x_n, y, a_1..a_n, b_1..b_n. No zero coefficient is
// ever stored; map iteration order is the canonical printing order.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    explicit MultiPoly(int n) : n_(n) {}

    static MultiPoly constant(int n, const Rational& c);
    static MultiPoly variable(int n, const VarId& v);
    static MultiPoly from_monomial(int n, const Monomial& m, const Rational& c);

    int n() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const { return is_constant() && constant_value().is_one(); }
    Rational constant_value() const; // 0 for the zero polynomial

    int total_degree() const; // -1 for zero
    int degree_in(int slot) const;
    bool uses_slot(int slot) const;
    bool uses_only(const std::vector<int>& slots) const;

    const std::pair<const Monomial, Rational>& leading_term() const;
    Rational leading_coeff() const;

    void add_term(const Monomial& m, const Rational& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly& operator*=(const Rational& c);
    MultiPoly pow(unsigned e) const;

    bool operator==(const MultiPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    MultiPoly derivative(int slot) const;

    // point has one entry per slot
    Rational eval(const std::vector<Rational>& point) const;
    std::complex<double> eval(const std::vector<std::complex<double>>& point) const;

    MultiPoly substitute(int slot, const MultiPoly& value) const;
    MultiPoly substitute_zero(const std::vector<int>& slots) const;
    // Exponent-vector permutation: slot i of the result takes the exponent of
    // slot perm[i] of the source. Every unlisted source slot must be unused.
    MultiPoly rename_slots(const std::vector<int>& perm) const;

    std::string str() const;

private:
    int n_;
    TermMap terms_;
};

// --- gcd machinery (content/primitive-part recursion on the top variable) ---

// Primitive normal form over Z: integer-coprime coefficients, positive
// leading coefficient in the canonical order. normalize_primitive(0) = 0.
MultiPoly normalize_primitive(const MultiPoly& p);

// gcd over Q[vars], returned in primitive normal form; poly_gcd(0, b) = |b|.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

// Division with remainder by a single divisor in the canonical term order;
// b | a iff the remainder is zero.
bool try_divide_exact(const MultiPoly& a, const MultiPoly& b, MultiPoly& quotient);
MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b);
bool divides(const MultiPoly& b, const MultiPoly& a);

} // namespace abeltrace
