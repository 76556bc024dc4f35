#include "abeltrace/trace.hpp"

#include "abeltrace/errors.hpp"

#include <cassert>

namespace abeltrace {

namespace {

std::vector<int> xy_slots(int n) {
    std::vector<int> s;
    for (int i = 0; i <= n; ++i) s.push_back(i);
    return s;
}

// deg_y f(0, y); -1 when f(0, y) is identically zero.
int germ_degree(const MultiPoly& f, int n) {
    std::vector<int> xs;
    for (int i = 0; i < n; ++i) xs.push_back(i);
    MultiPoly at0 = f.substitute_zero(xs);
    if (at0.is_zero()) return -1;
    return at0.degree_in(n);
}

} // namespace

Cycle::Cycle(int n, std::vector<Component> components) : n_(n), comps_(std::move(components)) {
    if (comps_.empty()) throw ImproperIntersection("a cycle needs at least one component");
    for (const auto& c : comps_) {
        if (c.multiplicity < 1)
            throw ImproperIntersection("component multiplicities must be positive");
        if (!c.f.uses_only(xy_slots(n_)))
            throw ImproperIntersection("cycle components live in the (x, y) variables");
        int d = germ_degree(c.f, n_);
        if (d < 0)
            throw ImproperIntersection(
                "component contains the vertical line x = 0 (f(0, y) vanishes identically)");
        if (d == 0)
            throw ImproperIntersection("component misses the vertical line (f(0, y) constant)");
    }
}

int Cycle::vertical_degree() const {
    int d = 0;
    for (const auto& c : comps_) d += c.multiplicity * germ_degree(c.f, n_);
    return d;
}

UniPolyK tilt_poly(const MultiPoly& p, int n) {
    MultiPoly t = p;
    for (int i = 1; i <= n; ++i) {
        MultiPoly line = MultiPoly::variable(n, VarId::a(i)) * MultiPoly::variable(n, VarId::y()) +
                         MultiPoly::variable(n, VarId::b(i));
        t = t.substitute(var_slot(VarId::x(i), n), line);
    }
    // collect on the y slot
    int yslot = n;
    std::vector<RatFunc> coeffs(t.degree_in(yslot) + 1, RatFunc(n));
    std::vector<MultiPoly> parts(t.degree_in(yslot) + 1, MultiPoly(n));
    for (const auto& [m, c] : t.terms()) {
        Monomial rest = m;
        int e = rest[yslot];
        rest[yslot] = 0;
        parts[e].add_term(rest, c);
    }
    for (size_t k = 0; k < parts.size(); ++k) coeffs[k] = RatFunc::from_poly(parts[k]);
    UniPolyK q(n, std::move(coeffs));
    assert(q.coeffs_in_M());
    return q;
}

std::vector<TiltDegrees> tilt_degrees(const Cycle& v) {
    std::vector<TiltDegrees> out;
    out.reserve(v.components().size());
    for (const auto& c : v.components()) {
        UniPolyK t = tilt_poly(c.f, v.n());
        out.push_back({germ_degree(c.f, v.n()), t.degree()});
    }
    return out;
}

TiltedCycle tilt(const Cycle& v) {
    int n = v.n();
    UniPolyK q = UniPolyK::constant(n, RatFunc::constant(n, Rational(1)));
    RatFunc lc = RatFunc::constant(n, Rational(1));
    int d = 0;
    for (const auto& c : v.components()) {
        UniPolyK t = tilt_poly(c.f, n);
        int dg = germ_degree(c.f, n);
        if (t.degree() != dg)
            throw DegreeDropAtInfinity(
                "vertical degree " + std::to_string(dg) + " differs from deg_Y of the tilt (" +
                std::to_string(t.degree()) +
                "); the leading coefficient vanishes at a = 0 and the global polynomial model "
                "does not apply");
        RatFunc clc(n);
        UniPolyK qi = monicized(t, &clc);
        q *= qi.pow(static_cast<unsigned>(c.multiplicity));
        lc *= pow_ratfunc(clc, static_cast<unsigned>(c.multiplicity));
        d += c.multiplicity * dg;
    }
    assert(q.degree() == d);
    return {std::move(q), d, std::move(lc)};
}

TraceData power_sums(const TiltedCycle& t, int m) {
    int n = t.Q.n();
    int d = t.d;
    // Work over polynomials with the common denominator D of Q's coefficients
    // cleared: with ehat_j = (-1)^j coeff(d-j) * D, the scaled power sums
    // phat_k = p_k * D^k follow a polynomial Newton recurrence, and each u_k
    // is reduced exactly once at the end.
    MultiPoly D = MultiPoly::constant(n, Rational(1));
    for (int j = 0; j < d; ++j) {
        MultiPoly den = t.Q.coeff(j).den();
        if (den.is_one()) continue;
        MultiPoly g = poly_gcd(D, den);
        D = D * divide_exact(den, g);
    }
    std::vector<MultiPoly> ehat(d + 1, MultiPoly(n));
    ehat[0] = D;
    for (int j = 1; j <= d; ++j) {
        RatFunc c = t.Q.coeff(d - j);
        ehat[j] = c.num() * divide_exact(D, c.den());
        if (j % 2 == 1) ehat[j] = -ehat[j];
    }
    std::vector<MultiPoly> dpow(m + 1, MultiPoly(n));
    dpow[0] = MultiPoly::constant(n, Rational(1));
    for (int k = 1; k <= m; ++k) dpow[k] = dpow[k - 1] * D;
    std::vector<MultiPoly> phat(m + 1, MultiPoly(n));
    phat[0] = MultiPoly::constant(n, Rational(d));
    for (int k = 1; k <= m; ++k) {
        MultiPoly acc(n);
        for (int i = 1; i <= std::min(k, d); ++i) {
            MultiPoly term =
                i < k ? ehat[i] * dpow[i - 1] * phat[k - i]
                      : ehat[i] * dpow[i - 1] * MultiPoly::constant(n, Rational(k));
            if (i % 2 == 0) acc -= term;
            else acc += term;
        }
        phat[k] = acc;
    }
    std::vector<RatFunc> p;
    p.reserve(m + 1);
    for (int k = 0; k <= m; ++k) p.push_back(RatFunc(phat[k], dpow[k]));
    return {std::move(p), std::nullopt};
}

TraceData power_sums(const Cycle& v, int m) { return power_sums(tilt(v), m); }

bool is_reduced(const Cycle& v) {
    const auto& comps = v.components();
    for (const auto& c : comps) {
        if (c.multiplicity != 1) return false;
        MultiPoly fy = c.f.derivative(v.n()); // d/dy, nonzero by the cycle invariant
        if (!poly_gcd(c.f, fy).is_constant()) return false;
    }
    for (size_t i = 0; i < comps.size(); ++i)
        for (size_t j = i + 1; j < comps.size(); ++j)
            if (!poly_gcd(comps[i].f, comps[j].f).is_constant()) return false;
    return true;
}

void require_reduced(const Cycle& v) {
    if (!is_reduced(v))
        throw NotReduced("operation requires a reduced cycle (square-free, multiplicity one, "
                         "pairwise distinct components)");
}

namespace {

struct TiltedFunction {
    UniPolyK num;
    UniPolyK den;
};

TiltedFunction tilt_function(const Cycle& v, const MeroFunc& h, const UniPolyK& q) {
    if (h.den.is_zero()) throw ZeroDegree("meromorphic function with zero denominator");
    TiltedFunction t{tilt_poly(h.num, v.n()), tilt_poly(h.den, v.n())};
    if (t.den.is_zero() || gcd_monic(t.den, q).degree() > 0)
        throw PolarLocusMeetsCycle("the polar locus of h does not cut V properly");
    return t;
}

std::vector<RatFunc> residue_sequence(const UniPolyK& num, const UniPolyK& den,
                                      const UniPolyK& f, int kmax) {
    // Res[Y^k num/den / F] for k = 0..kmax; one inverse_mod, one Y-shift per step.
    UniPolyK cur = mod_monic(num, f);
    if (!(den.degree() == 0 && den.coeff(0).is_one()))
        cur = mod_monic(cur * inverse_mod(den, f), f);
    std::vector<RatFunc> out;
    out.reserve(kmax + 1);
    for (int k = 0; k <= kmax; ++k) {
        out.push_back(cur.coeff(f.degree() - 1));
        if (k < kmax) cur = mod_monic(cur.shifted(1), f);
    }
    return out;
}

} // namespace

TraceData trace_function(const Cycle& v, const MeroFunc& h, int m) {
    require_reduced(v);
    TiltedCycle t = tilt(v);
    TiltedFunction th = tilt_function(v, h, t.Q);
    TraceData data = power_sums(t, m);
    data.v = residue_sequence(th.num * t.Q.derivative_Y(), th.den, t.Q, m);
    return data;
}

UniPolyK vertical_derivative(const UniPolyK& f) {
    int n = f.n();
    UniPolyK d = f.derivative_Y();
    for (int i = 1; i <= n; ++i) {
        RatFunc ai = RatFunc::variable(n, VarId::a(i));
        d -= f.derivative_slot(var_slot(VarId::b(i), n)).scaled(ai);
    }
    return d;
}

std::vector<RatFunc> trace_form_coeffs(const Cycle& v, const MeroFunc& h, int kmax) {
    require_reduced(v);
    TiltedCycle t = tilt(v); // F = Pi(V) coincides with Q on reduced cycles
    TiltedFunction th = tilt_function(v, h, t.Q);
    return residue_sequence(th.num * vertical_derivative(t.Q), th.den, t.Q, kmax);
}

TraceForm trace_form(const Cycle& v, const MeroFunc& h) {
    return {trace_form_coeffs(v, h, v.n())};
}

} // namespace abeltrace
