#include "corpus.hpp"

#include "abeltrace/errors.hpp"

#include <doctest.h>

using namespace abeltrace;
using corpus::P;
using corpus::R;
using corpus::U;

TEST_CASE("tilt worked examples") {
    Cycle parabola = Cycle::single(P("y^2-x1", 1));
    TiltedCycle t = tilt(parabola);
    CHECK(t.Q == U({"-b1", "-a1", "1"}));
    CHECK(t.d == 2);
    CHECK(t.lc == R("1"));

    // cusp y^2 = x1^3: germ degree 2, tilt degree 3, no global model
    Cycle cusp = Cycle::single(P("y^2-x1^3", 1));
    auto degs = tilt_degrees(cusp);
    CHECK(degs[0].germ_degree == 2);
    CHECK(degs[0].poly_degree == 3);
    CHECK_THROWS_AS(tilt(cusp), DegreeDropAtInfinity);

    CHECK_THROWS_AS(Cycle::single(P("x1", 1)), ImproperIntersection);
    CHECK_THROWS_AS(Cycle::single(P("2", 1)), ImproperIntersection);
}

TEST_CASE("tilt with nonconstant leading coefficient") {
    // y^2 - x1^2 - 1: lc = 1 - a1^2, still exact
    Cycle v = Cycle::single(P("y^2-x1^2-1", 1));
    TiltedCycle t = tilt(v);
    CHECK(t.d == 2);
    CHECK(t.lc == R("-a1^2+1"));
    CHECK(t.Q.is_monic());
    // u_1 = 2ab/(1-a^2): holomorphic at the origin but not polynomial
    TraceData u = power_sums(t, 2);
    CHECK(u.u[1] == R("(-2*a1*b1)/(a1^2-1)"));
    std::vector<Rational> origin(var_count(1), Rational(0));
    CHECK(u.u[1].den().eval(origin) != Rational(0));
}

TEST_CASE("power sums worked examples") {
    TiltedCycle t = tilt(Cycle::single(P("y^2-x1", 1)));
    TraceData u = power_sums(t, 4);
    CHECK(u.u[0] == R("2"));
    CHECK(u.u[1] == R("a1"));
    CHECK(u.u[2] == R("a1^2+2*b1"));
    CHECK(u.u[3] == R("a1^3+3*a1*b1"));
    CHECK(u.u[4] == R("a1^4+4*a1^2*b1+2*b1^2"));
    // recurrence route u_{k+2} = a u_{k+1} + b u_k
    for (int k = 0; k + 2 <= 4; ++k)
        CHECK(u.u[k + 2] == R("a1") * u.u[k + 1] + R("b1") * u.u[k]);
}

TEST_CASE("power sums cross-check against the residue route") {
    corpus::Rng rng(37);
    for (int t = 0; t < 8; ++t) {
        int n = rng.uniform(1, 2);
        auto rc = corpus::random_reduced_cycle(rng, n, 3);
        TiltedCycle tc = tilt(rc.v);
        TraceData u = power_sums(tc, 2 * rc.d);
        UniPolyK dq = tc.Q.derivative_Y();
        for (int k = 0; k <= 2 * rc.d; ++k)
            CHECK(u.u[k] == residue_sum(dq.shifted(k), tc.Q));
        CHECK(u.u[0] == RatFunc::constant(n, Rational(rc.d)));
    }
}

TEST_CASE("trace_function worked examples") {
    Cycle v = Cycle::single(P("y^2-x1", 1));
    MeroFunc hx = MeroFunc::poly(P("x1", 1));
    TraceData data = trace_function(v, hx, 1);
    TraceData u = power_sums(v, 3);
    CHECK((*data.v)[0] == u.u[2]); // x = y^2 on V
    CHECK((*data.v)[1] == u.u[3]);

    MeroFunc hinv{P("1", 1), P("2*y", 1)};
    TraceData inv = trace_function(v, hinv, 0);
    CHECK((*inv.v)[0] == R("(-a1)/(2*b1)"));

    MeroFunc one = MeroFunc::poly(P("1", 1));
    TraceData ones = trace_function(v, one, 3);
    for (int k = 0; k <= 3; ++k) CHECK((*ones.v)[k] == u.u[k]);
}

TEST_CASE("trace_function rejects improper poles") {
    Cycle v = Cycle::single(P("y^2-x1", 1));
    // den = y^2 - x1 vanishes on V
    MeroFunc bad{P("1", 1), P("y^2-x1", 1)};
    CHECK_THROWS_AS(trace_function(v, bad, 1), PolarLocusMeetsCycle);
    Cycle dbl(1, {{P("y^2-x1", 1), 2}});
    CHECK_THROWS_AS(trace_function(dbl, MeroFunc::poly(P("1", 1)), 1), NotReduced);
}

TEST_CASE("trace_form worked examples") {
    Cycle v = Cycle::single(P("y^2-x1", 1));
    TraceForm wy = trace_form(v, MeroFunc::poly(P("y", 1)));
    CHECK(wy.w == std::vector<RatFunc>{R("2*a1"), R("2*a1^2+2*b1")});
    TraceForm w1 = trace_form(v, MeroFunc::poly(P("1", 1)));
    CHECK(w1.w == std::vector<RatFunc>{R("2"), R("2*a1")});
    // abelian input: dx/(3y^2) on the cubic has null trace form
    Cycle cubic = Cycle::single(P("y^3-x1^3-1", 1));
    TraceForm wab = trace_form(cubic, MeroFunc{P("1", 1), P("3*y^2", 1)});
    CHECK(wab.w[0].is_zero());
    CHECK(wab.w[1].is_zero());
}

TEST_CASE("shifted shock-wave identities on trace-form sequences") {
    // The shifted identity d/da_i seq[k] = d/db_i seq[k+1] holds for the
    // trace-form coefficient sequences (weight dF/dY - sum a_i dF/db_i);
    // power sums satisfy the weighted variant (k+1) da u_k = k db u_(k+1).
    corpus::Rng rng(41);
    for (int t = 0; t < 6; ++t) {
        int n = rng.uniform(1, 2);
        auto rc = corpus::random_reduced_cycle(rng, n, 3);
        std::vector<RatFunc> xi =
            trace_form_coeffs(rc.v, MeroFunc::poly(MultiPoly::constant(n, Rational(1))), 2 * rc.d + 1);
        CHECK(shock_check(xi, n));
        MeroFunc h = corpus::random_function(rng, rc.v);
        std::vector<RatFunc> w = trace_form_coeffs(rc.v, h, 2 * rc.d + 1);
        CHECK(shock_check(w, n));
        // corrected power-sum law, a consequence of da_i y_j = y_j db_i y_j
        TraceData u = power_sums(rc.v, 2 * rc.d);
        for (int k = 1; k + 1 <= 2 * rc.d; ++k)
            for (int i = 1; i <= n; ++i) {
                RatFunc lhs = u.u[k].derivative(var_slot(VarId::a(i), n)) *
                              RatFunc::constant(n, Rational(k + 1));
                RatFunc rhs = u.u[k + 1].derivative(var_slot(VarId::b(i), n)) *
                              RatFunc::constant(n, Rational(k));
                CHECK(lhs == rhs);
            }
    }
    // the literal u-law fails, as the parabola witnesses: da(u1) = 1, db(u2) = 2
    TraceData u = power_sums(Cycle::single(P("y^2-x1", 1)), 2);
    CHECK(!shock_check(std::span<const RatFunc>(u.u), 1));
}

TEST_CASE("semigroup homomorphism and additivity of power sums") {
    corpus::Rng rng(43);
    for (int t = 0; t < 6; ++t) {
        int n = rng.uniform(1, 2);
        auto c1 = corpus::random_reduced_cycle(rng, n, 2);
        auto c2 = corpus::random_reduced_cycle(rng, n, 2);
        std::vector<Cycle::Component> comps = c1.v.components();
        for (const auto& c : c2.v.components()) comps.push_back(c);
        Cycle sum(n, comps);
        TiltedCycle t1 = tilt(c1.v), t2 = tilt(c2.v), ts = tilt(sum);
        CHECK(ts.Q == t1.Q * t2.Q);
        TraceData u1 = power_sums(t1, 4), u2 = power_sums(t2, 4), us = power_sums(ts, 4);
        for (int k = 0; k <= 4; ++k) CHECK(us.u[k] == u1.u[k] + u2.u[k]);
    }
}

TEST_CASE("multiplicity rule") {
    MultiPoly f = P("y^2-x1", 1);
    Cycle once = Cycle::single(f);
    Cycle thrice(1, {{f, 3}});
    TraceData u1 = power_sums(once, 4);
    TraceData u3 = power_sums(thrice, 4);
    for (int k = 0; k <= 4; ++k)
        CHECK(u3.u[k] == RatFunc::constant(1, Rational(3)) * u1.u[k]);
}

TEST_CASE("power sums are polynomial for y-dominant cycles") {
    corpus::Rng rng(47);
    for (int t = 0; t < 6; ++t) {
        int n = rng.uniform(1, 2);
        auto rc = corpus::random_reduced_cycle(rng, n, 3, /*y_dominant=*/true);
        TiltedCycle tc = tilt(rc.v);
        CHECK(tc.lc.is_one());
        TraceData u = power_sums(tc, 2 * rc.d);
        std::vector<Rational> origin(var_count(n), Rational(0));
        for (const auto& uk : u.u) {
            CHECK(uk.is_polynomial());
            // and in general position u_k is holomorphic at (a, b) = 0
            CHECK(uk.den().eval(origin) != Rational(0));
        }
    }
}

TEST_CASE("numeric agreement of symbolic traces") {
    corpus::Rng rng(53);
    auto rc = corpus::random_reduced_cycle(rng, 1, 3);
    MeroFunc h = corpus::random_function(rng, rc.v);
    TraceData tv = trace_function(rc.v, h, 2);
    SamplePlan plan;
    plan.seed = 4242;
    plan.count = 50;
    for (int k = 0; k <= 2; ++k) {
        OracleReport rep = oracle_compare((*tv.v)[k], plan, [&](const ParamPoint& at) {
            return numeric_trace(rc.v, h, k, at);
        });
        CAPTURE(k);
        CHECK(rep.pass);
        CHECK(rep.max_error <= 1e-9);
    }
}
