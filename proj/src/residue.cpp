#include "abeltrace/residue.hpp"

#include "abeltrace/errors.hpp"

#include <cassert>
#include <stdexcept>

namespace abeltrace {

RatFunc residue_sum(const UniPolyK& num, const UniPolyK& den, const UniPolyK& f) {
    if (f.degree() < 1) throw ZeroDegree("residue modulus must have degree >= 1");
    if (!f.is_monic()) {
        // tilts are generally non-monic; the query runs on the monic factor
        return residue_sum(num, den, monicized(f));
    }
    UniPolyK reduced = mod_monic(num, f);
    if (!(den.degree() == 0 && den.coeff(0).is_one())) {
        UniPolyK inv = inverse_mod(den, f);
        reduced = mod_monic(reduced * inv, f);
    }
    return reduced.coeff(f.degree() - 1);
}

RatFunc residue_sum(const UniPolyK& num, const UniPolyK& f) {
    return residue_sum(num, UniPolyK::constant(f.n(), RatFunc::constant(f.n(), Rational(1))), f);
}

RatFunc residue_sum(const ResidueQuery& q) { return residue_sum(q.num, q.den, q.F); }

bool dual_membership_test(const UniPolyK& h, const UniPolyK& f) {
    if (f.degree() < 1) throw ZeroDegree("membership modulus must have degree >= 1");
    if (!f.is_monic()) throw NonMonicDivisor("membership modulus must be monic");
    bool by_residues = true;
    for (int k = 0; k < f.degree() && by_residues; ++k)
        by_residues = residue_sum(h.shifted(k), f).is_zero();
    bool by_remainder = mod_monic(h, f).is_zero();
    if (by_residues != by_remainder)
        throw std::logic_error("duality routes disagree; arithmetic bug");
    return by_remainder;
}

} // namespace abeltrace
