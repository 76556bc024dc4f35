#include "corpus.hpp"

#include "abeltrace/errors.hpp"
#include "abeltrace/numeric.hpp"

#include <doctest.h>

#include <cmath>

using namespace abeltrace;
using corpus::P;
using corpus::R;
using corpus::U;

namespace {
ParamPoint point1(const Rational& a, const Rational& b) { return {{a}, {b}}; }
} // namespace

TEST_CASE("roots worked examples") {
    UniPolyK f = U({"-1", "0", "1"}); // Y^2 - 1
    auto rs = roots(f, point1(Rational(1, 2), Rational(1, 3)));
    REQUIRE(rs.size() == 2);
    CHECK(std::abs(rs[0] - Complex(-1.0, 0.0)) < 1e-12);
    CHECK(std::abs(rs[1] - Complex(1.0, 0.0)) < 1e-12);

    UniPolyK g = U({"-b1", "-a1", "1"});
    auto rs2 = roots(g, point1(Rational(0), Rational(1)));
    REQUIRE(rs2.size() == 2);
    CHECK(std::abs(rs2[0] - Complex(-1.0, 0.0)) < 1e-12);
    CHECK(std::abs(rs2[1] - Complex(1.0, 0.0)) < 1e-12);

    UniPolyK cubic = U({"-b1", "0", "0", "1"}); // Y^3 - b1
    auto rs3 = roots(cubic, point1(Rational(0), Rational(8)));
    REQUIRE(rs3.size() == 3);
    for (const auto& r : rs3)
        CHECK(std::abs(r * r * r - Complex(8.0, 0.0)) <= 1e-12 * 9.0);
}

TEST_CASE("roots guards") {
    UniPolyK doubleroot = U({"0", "0", "1"}); // Y^2
    CHECK_THROWS_AS(roots(doubleroot, point1(Rational(1), Rational(1))), NearDiscriminant);
    // leading coefficient (1 - a1^2) vanishes at a1 = 1
    UniPolyK bad = UniPolyK(1, {R("1"), R("0"), R("-a1^2+1")});
    CHECK_THROWS_AS(roots(bad, point1(Rational(1), Rational(1))), LeadingCoefficientVanishes);
}

TEST_CASE("roots are deterministic and sorted") {
    UniPolyK f = U({"-b1", "-a1", "0", "0", "1"});
    ParamPoint at = point1(Rational(3, 4), Rational(-2, 3));
    auto r1 = roots(f, at);
    auto r2 = roots(f, at);
    CHECK(r1 == r2); // bitwise identical
    for (size_t i = 1; i < r1.size(); ++i) {
        bool ordered = r1[i - 1].real() < r1[i].real() ||
                       (r1[i - 1].real() == r1[i].real() && r1[i - 1].imag() <= r1[i].imag());
        CHECK(ordered);
    }
}

TEST_CASE("numeric_trace worked examples") {
    Cycle v = Cycle::single(P("y^2-x1", 1));
    MeroFunc one = MeroFunc::poly(P("1", 1));
    CHECK(std::abs(numeric_trace(v, one, 0, point1(Rational(1, 2), Rational(2))) -
                   Complex(2.0, 0.0)) < 1e-12);
    MeroFunc hx = MeroFunc::poly(P("x1", 1));
    CHECK(std::abs(numeric_trace(v, hx, 0, point1(Rational(1), Rational(1))) -
                   Complex(3.0, 0.0)) < 1e-10);
    MeroFunc hinv{P("1", 1), P("2*y", 1)};
    CHECK(std::abs(numeric_trace(v, hinv, 0, point1(Rational(0), Rational(1)))) < 1e-12);
}

TEST_CASE("numeric_trace pole detection") {
    Cycle v = Cycle::single(P("y^2-x1", 1));
    // at (a, b) = (0, 1) the intersection points are y = +-1, on the poles of 1/(y^2-1)
    MeroFunc h{P("1", 1), P("y^2-1", 1)};
    CHECK_THROWS_AS(numeric_trace(v, h, 0, point1(Rational(0), Rational(1))), PoleHit);
}

TEST_CASE("multiplicity weights in numeric_trace") {
    MultiPoly f = P("y^2-x1", 1);
    Cycle once = Cycle::single(f);
    Cycle twice(1, {{f, 2}});
    MeroFunc hx = MeroFunc::poly(P("x1", 1));
    ParamPoint at = point1(Rational(1, 3), Rational(5, 4));
    Complex a = numeric_trace(once, hx, 1, at);
    Complex b = numeric_trace(twice, hx, 1, at);
    CHECK(std::abs(b - 2.0 * a) < 1e-10);
}

TEST_CASE("oracle_compare worked examples") {
    Cycle v = Cycle::single(P("y^2-x1", 1));
    TraceData u = power_sums(v, 2);
    MeroFunc one = MeroFunc::poly(P("1", 1));
    SamplePlan plan;
    plan.seed = 7;
    plan.count = 50;
    OracleReport rep = oracle_compare(u.u[2], plan, [&](const ParamPoint& at) {
        return numeric_trace(v, one, 2, at);
    });
    CHECK(rep.pass);
    CHECK(rep.evaluated == 50);
    CHECK(rep.max_error <= 1e-9);

    // zero symbolic value vs abelian-form trace samples
    Cycle cubic = Cycle::single(P("y^3-x1^3-1", 1));
    UniPolyK F = tilt(cubic).Q;
    UniPolyK numbase = vertical_derivative(F);
    UniPolyK dent = tilt_poly(P("3*y^2", 1), 1);
    OracleReport zero = oracle_compare(RatFunc(1), plan, [&](const ParamPoint& at) {
        return numeric_residue(numbase, dent, F, at);
    });
    CHECK(zero.pass);
    CHECK(zero.max_error <= 1e-9);

    // sensitivity control: a deliberately perturbed symbolic value fails everywhere
    RatFunc perturbed = u.u[2] + RatFunc::constant(1, Rational(1));
    OracleReport fail = oracle_compare(perturbed, plan, [&](const ParamPoint& at) {
        return numeric_trace(v, one, 2, at);
    });
    CHECK(!fail.pass);
    for (const auto& s : fail.samples) CHECK(!s.pass);
}

TEST_CASE("determinism: equal seeds give identical reports") {
    Cycle v = Cycle::single(P("y^2-x1", 1));
    TraceData u = power_sums(v, 1);
    MeroFunc one = MeroFunc::poly(P("1", 1));
    SamplePlan plan;
    plan.seed = 12345;
    plan.count = 20;
    auto run = [&] {
        return oracle_compare(u.u[1], plan, [&](const ParamPoint& at) {
            return numeric_trace(v, one, 1, at);
        });
    };
    OracleReport r1 = run(), r2 = run();
    CHECK(r1.to_json(true) == r2.to_json(true));
    REQUIRE(r1.samples.size() == r2.samples.size());
    for (size_t i = 0; i < r1.samples.size(); ++i)
        CHECK(r1.samples[i].error == r2.samples[i].error); // bitwise
}

TEST_CASE("draw_samples stays inside the box and respects the seed") {
    SamplePlan plan;
    plan.seed = 5;
    plan.count = 40;
    plan.box = Rational(2);
    auto pts = draw_samples(plan, 2);
    CHECK(pts.size() == 40);
    for (const auto& p : pts) {
        for (const auto& a : p.a) {
            CHECK(!(a > Rational(2)));
            CHECK(!(Rational(-2) > a));
            CHECK(!a.is_zero());
        }
    }
    auto pts2 = draw_samples(plan, 2);
    for (size_t i = 0; i < pts.size(); ++i) {
        CHECK(pts[i].a[0] == pts2[i].a[0]);
        CHECK(pts[i].b[1] == pts2[i].b[1]);
    }
}
