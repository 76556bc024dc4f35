#include "abeltrace/reconstruct.hpp"

#include "abeltrace/errors.hpp"

#include <cassert>
#include <stdexcept>

namespace abeltrace {

namespace {

int ambient_of(std::span<const RatFunc> s) {
    assert(!s.empty());
    return s[0].n();
}

// Monic annihilator from a Hankel moment system: F = Y^d + sum c_l Y^l with
// sum_l s[k+l] c_l = -s[k+d] for k = 0..d-1.
UniPolyK solve_moment_system(std::span<const RatFunc> s, int d, const char* who) {
    int n = ambient_of(s);
    if (static_cast<int>(s.size()) < 2 * d)
        throw std::invalid_argument(std::string(who) + ": needs 2d sequence entries");
    RatMatrix a(d, std::vector<RatFunc>(d, RatFunc(n)));
    std::vector<RatFunc> rhs;
    rhs.reserve(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a[i][j] = s[i + j];
    for (int k = 0; k < d; ++k) rhs.push_back(-s[d + k]);
    auto sol = solve_linear(a, rhs);
    if (sol.x.empty()) return UniPolyK(n); // caller maps to its own error
    std::vector<RatFunc> coeffs = std::move(sol.x);
    coeffs.push_back(RatFunc::constant(n, Rational(1)));
    return UniPolyK(n, std::move(coeffs));
}

} // namespace

HankelSystem build_hankel(std::span<const RatFunc> s, int d) {
    int n = ambient_of(s);
    if (static_cast<int>(s.size()) < 2 * d - 1)
        throw std::invalid_argument("Hankel matrix needs entries up to index 2d-2");
    RatMatrix a(d, std::vector<RatFunc>(d, RatFunc(n)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a[i][j] = s[i + j];
    std::vector<RatFunc> rhs;
    for (int k = d; k < std::min<int>(2 * d, s.size()); ++k) rhs.push_back(s[k]);
    RatFunc det = det_ratfunc(a);
    return {std::move(a), std::move(rhs), std::move(det)};
}

UniPolyK solve_S(const TraceData& u) {
    if (u.u.empty()) throw std::invalid_argument("solve_S: empty trace data");
    const RatFunc& u0 = u.u[0];
    if (!u0.is_constant() || !u0.constant_value().is_integer() ||
        u0.constant_value().sign() <= 0)
        throw DegenerateHankel("u_0 must be a positive integer constant (the vertical degree)");
    int d = static_cast<int>(u0.constant_value().numerator().get_si());
    UniPolyK f = solve_moment_system(std::span<const RatFunc>(u.u), d, "solve_S");
    if (f.is_zero())
        throw DegenerateHankel("the power-sum Hankel matrix is singular: V is not reduced or "
                               "the data does not come from a cycle (Det A = Disc Q = 0)");
    return f;
}

HankelCheckResult hankel_check(const TraceData& u, const UniPolyK& q) {
    int d = q.degree();
    if (d < 1) throw ZeroDegree("hankel_check requires deg Q >= 1");
    HankelSystem sys = build_hankel(std::span<const RatFunc>(u.u), d);
    RatFunc disc = d == 0 ? RatFunc::constant(q.n(), Rational(1)) : discriminant(q);
    bool equal = sys.detA == disc;
    return {std::move(sys.detA), std::move(disc), equal};
}

bool star_check(const UniPolyK& f) {
    int n = f.n();
    if (!f.is_monic()) throw NonMonicDivisor("star_check requires a monic polynomial");
    for (int i = 1; i <= n; ++i) {
        UniPolyK lhs = f.derivative_slot(var_slot(VarId::a(i), n)) -
                       f.derivative_slot(var_slot(VarId::b(i), n)).shifted(1);
        if (!mod_monic(lhs, f).is_zero()) return false;
    }
    return true;
}

bool star_star_check(const UniPolyK& h, const UniPolyK& f) {
    int n = f.n();
    if (!f.is_monic()) throw NonMonicDivisor("star_star_check requires a monic modulus");
    for (int i = 1; i <= n; ++i) {
        UniPolyK lhs = h.derivative_slot(var_slot(VarId::a(i), n)) -
                       h.derivative_slot(var_slot(VarId::b(i), n)).shifted(1);
        if (!mod_monic(lhs, f).is_zero()) return false;
    }
    return true;
}

UniPolyK pi_map(const Cycle& v) {
    TiltedCycle t = tilt(v);
    if (is_reduced(v)) {
        // Cross-validate the tilt route against the Cramer route of (S).
        TraceData u = power_sums(t, 2 * t.d - 1);
        UniPolyK by_cramer = solve_S(u);
        if (!(by_cramer == t.Q))
            throw std::logic_error("pi_map: tilt and moment-system routes disagree");
    }
    return t.Q;
}

namespace {

std::vector<int> a_slots(int n) {
    std::vector<int> s;
    for (int i = 1; i <= n; ++i) s.push_back(var_slot(VarId::a(i), n));
    return s;
}

// Coefficient c(a, b) -> c(0, x): a = 0, then b_i renamed to x_i.
RatFunc specialize_a0_to_x(const RatFunc& c, int n) {
    MultiPoly num0 = c.num().substitute_zero(a_slots(n));
    MultiPoly den0 = c.den().substitute_zero(a_slots(n));
    if (den0.is_zero())
        throw NonSpecializable("coefficient has a pole along a = 0");
    std::vector<int> perm(var_count(n), -1);
    for (int i = 1; i <= n; ++i)
        perm[var_slot(VarId::x(i), n)] = var_slot(VarId::b(i), n);
    perm[n] = n; // y stays
    return RatFunc(num0.rename_slots(perm), den0.rename_slots(perm));
}

// F(y, 0, x) as a rational function in (x, y).
RatFunc specialize_to_xy(const UniPolyK& f) {
    int n = f.n();
    RatFunc total(n);
    MultiPoly y = MultiPoly::variable(n, VarId::y());
    MultiPoly ypow = MultiPoly::constant(n, Rational(1));
    for (int k = 0; k <= f.degree(); ++k) {
        total += specialize_a0_to_x(f.coeff(k), n) * RatFunc::from_poly(ypow);
        if (k < f.degree()) ypow *= y;
    }
    return total;
}

} // namespace

MultiPoly pi_inverse(const UniPolyK& f) {
    if (!f.is_monic()) throw NonMonicDivisor("pi_inverse requires a monic polynomial");
    if (!star_check(f))
        throw StarViolation("input does not satisfy condition (*): not in the image of Pi");
    RatFunc s = specialize_to_xy(f);
    MultiPoly out = normalize_primitive(s.num());
    // Constructing the cycle revalidates proper intersection with x = 0.
    Cycle check = Cycle::single(out);
    (void)check;
    return out;
}

UniPolyK rho_map(const Cycle& v, const MeroFunc& h) {
    require_reduced(v);
    int n = v.n();
    TiltedCycle t = tilt(v);
    int d = t.d;
    TraceData u = power_sums(t, 2 * d - 2);
    TraceData vtr = trace_function(v, h, d - 1);
    RatMatrix a(d, std::vector<RatFunc>(d, RatFunc(n)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a[i][j] = u.u[i + j];
    auto sol = solve_linear(a, *vtr.v);
    if (sol.x.empty())
        throw DegenerateHankel("power-sum Hankel matrix is singular (Disc Q = 0)");
    UniPolyK hh(n, std::move(sol.x));
    if (!star_star_check(hh, t.Q))
        throw StarStarViolation("interpolant fails condition (**)");
    // h~ = H on V: tilt(num) - H * tilt(den) must vanish mod Q.
    UniPolyK tn = tilt_poly(h.num, n), td = tilt_poly(h.den, n);
    if (!mod_monic(tn - hh * td, t.Q).is_zero())
        throw StarStarViolation("interpolant does not restrict to h on the cycle");
    return hh;
}

MeroFunc rho_inverse(const UniPolyK& f, const UniPolyK& h) {
    if (!f.is_monic()) throw NonMonicDivisor("rho_inverse requires a monic F");
    if (h.degree() >= f.degree())
        throw StarStarViolation("deg H must be smaller than deg F");
    if (!star_star_check(h, f))
        throw StarStarViolation("input does not satisfy condition (**) relative to F");
    RatFunc s = specialize_to_xy(h);
    return {s.num(), s.den()};
}

bool wood_test(const RatFunc& u1, int d) {
    (void)d; // the affineness criterion is degree-independent
    int n = u1.n();
    for (int i = 1; i <= n; ++i)
        if (u1.den().uses_slot(var_slot(VarId::b(i), n))) return false;
    int bdeg = 0;
    for (const auto& [m, c] : u1.num().terms()) {
        int t = 0;
        for (int i = 1; i <= n; ++i) t += m[var_slot(VarId::b(i), n)];
        bdeg = std::max(bdeg, t);
    }
    return bdeg <= 1;
}

AbelianPair abel_inverse(std::span<const RatFunc> w, int d, int n) {
    if (static_cast<int>(w.size()) < 2 * d)
        throw std::invalid_argument("abel_inverse needs w_0..w_(2d-1)");
    bool all_zero = true;
    for (const auto& x : w) all_zero = all_zero && x.is_zero();
    if (all_zero)
        throw DegenerateStildeSystem(
            "all trace coefficients vanish: the form is identically zero on V, which the "
            "inversion hypotheses exclude");
    UniPolyK f = solve_moment_system(w, d, "abel_inverse");
    if (f.is_zero()) {
        HankelSystem sys = build_hankel(w, d);
        int r = rank_ratfunc(sys.A);
        throw DegenerateStildeSystem(
            "the trace-form Hankel system is singular (rank " + std::to_string(r) + " of " +
            std::to_string(d) +
            "): the data satisfies a shorter recurrence, so the form vanishes identically on a "
            "component of vertical degree " + std::to_string(d - r) +
            " or V contains the vertical line");
    }
    if (!star_check(f))
        throw StarViolation("recovered F fails condition (*): w is not trace-form data");
    // xi_k = Res[Y^k (dF/dY - sum a_i dF/db_i) / F], then the moment system for H.
    UniPolyK dvert = vertical_derivative(f);
    std::vector<RatFunc> xi;
    xi.reserve(2 * d - 1);
    {
        UniPolyK cur = mod_monic(dvert, f);
        for (int k = 0; k <= 2 * d - 2; ++k) {
            xi.push_back(cur.coeff(d - 1));
            if (k < 2 * d - 2) cur = mod_monic(cur.shifted(1), f);
        }
    }
    RatMatrix m(d, std::vector<RatFunc>(d, RatFunc(n)));
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) m[k][l] = xi[k + l];
    std::vector<RatFunc> rhs(w.begin(), w.begin() + d);
    auto sol = solve_linear(m, rhs);
    if (sol.x.empty())
        throw DegenerateStildeSystem("the moment system for H is singular");
    UniPolyK h(n, std::move(sol.x));
    if (!star_star_check(h, f))
        throw StarStarViolation("recovered H fails condition (**)");
    return {std::move(f), std::move(h)};
}

StildeDegeneracy diagnose_stilde_degeneracy(const UniPolyK& f, const UniPolyK& h) {
    if (gcd_monic(f, h).degree() > 0) return StildeDegeneracy::FormVanishesOnComponent;
    if (gcd_monic(f, vertical_derivative(f)).degree() > 0)
        return StildeDegeneracy::VerticalLineComponent;
    return StildeDegeneracy::None;
}

bool shock_check(std::span<const RatFunc> seq, int n) {
    if (seq.size() < 2) throw std::invalid_argument("shock_check needs at least two entries");
    for (size_t k = 0; k + 1 < seq.size(); ++k)
        for (int i = 1; i <= n; ++i) {
            RatFunc lhs = seq[k].derivative(var_slot(VarId::a(i), n));
            RatFunc rhs = seq[k + 1].derivative(var_slot(VarId::b(i), n));
            if (!(lhs == rhs)) return false;
        }
    return true;
}

} // namespace abeltrace
