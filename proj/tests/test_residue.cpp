#include "corpus.hpp"

#include "abeltrace/errors.hpp"
#include "abeltrace/residue.hpp"

#include <doctest.h>

using namespace abeltrace;
using corpus::R;
using corpus::U;

namespace {
const UniPolyK kQuad = U({"-b1", "-a1", "1"}); // Y^2 - a Y - b
}

TEST_CASE("residue_sum worked examples") {
    // Res[dF/dY / F] = deg F
    for (int d = 1; d <= 4; ++d) {
        std::vector<std::string> c(d + 1, "0");
        c[0] = "b1";
        c[d] = "1";
        UniPolyK F = U(c);
        CHECK(residue_sum(F.derivative_Y(), F) == R(std::to_string(d)));
    }
    CHECK(residue_sum(U({"0", "0", "2"}), kQuad) == R("2*a1"));
    CHECK(residue_sum(U({"-a1", "2"}), U({"0", "2"}), kQuad) == R("(-a1)/(2*b1)"));
    ResidueQuery query{U({"-a1", "2"}), U({"0", "2"}), kQuad};
    CHECK(residue_sum(query) == R("(-a1)/(2*b1)"));
    // degree deficit: Res[Y^k / Y^d] = 0 for k <= d - 2
    UniPolyK Yd = UniPolyK::y_power(1, 4);
    for (int k = 0; k <= 2; ++k)
        CHECK(residue_sum(UniPolyK::y_power(1, k), Yd).is_zero());
    CHECK(residue_sum(UniPolyK::y_power(1, 3), Yd) == R("1"));
}

TEST_CASE("residue_sum rejects improper inputs") {
    CHECK_THROWS_AS(residue_sum(U({"1"}), U({"3"})), ZeroDegree);
    // non-monic moduli are monicized before querying
    CHECK(residue_sum(U({"0", "0", "2"}), U({"-2*b1", "-2*a1", "2"})) == R("2*a1"));
    CHECK_THROWS_AS(residue_sum(U({"1"}), UniPolyK::y_power(1, 1), UniPolyK::y_power(1, 2)),
                    NotCoprime);
}

TEST_CASE("dual membership worked examples") {
    UniPolyK F = kQuad;
    CHECK(dual_membership_test(UniPolyK::y_power(1, 1) * F, F));
    CHECK(!dual_membership_test(U({"1"}), F));
    CHECK(!dual_membership_test(U({"a1*b1", "a1^2+b1"}), F)); // Y^3 mod F, nonzero
}

TEST_CASE("duality equivalence on random pairs") {
    corpus::Rng rng(23);
    int agree = 0;
    for (int t = 0; t < 200; ++t) {
        int d = rng.uniform(1, 3);
        std::vector<RatFunc> fc;
        for (int i = 0; i < d; ++i) fc.push_back(RatFunc::constant(1, rng.coeff()));
        fc.push_back(RatFunc::constant(1, Rational(1)));
        UniPolyK F(1, fc);
        std::vector<RatFunc> hc;
        for (int i = rng.uniform(0, 2 * d); i >= 0; --i)
            hc.push_back(RatFunc::constant(1, rng.coeff(3)));
        UniPolyK H(1, hc);
        if (rng.uniform(0, 1) == 0) H = H * F; // force some true multiples
        bool member = dual_membership_test(H, F); // asserts the two routes agree
        CHECK(member == mod_monic(H, F).is_zero());
        ++agree;
    }
    CHECK(agree == 200);
}

TEST_CASE("residue_sum is linear in the numerator") {
    corpus::Rng rng(29);
    for (int t = 0; t < 20; ++t) {
        UniPolyK F = kQuad;
        auto rnd = [&] {
            std::vector<RatFunc> c;
            for (int i = rng.uniform(0, 3); i >= 0; --i)
                c.push_back(RatFunc::constant(1, rng.coeff()));
            return UniPolyK(1, c);
        };
        UniPolyK A = rnd(), B = rnd();
        RatFunc lam = R("a1+1"), mu = R("(b1)/(a1)");
        CHECK(residue_sum(A.scaled(lam) + B.scaled(mu), F) ==
              lam * residue_sum(A, F) + mu * residue_sum(B, F));
    }
}

TEST_CASE("annihilation: multiples of F have zero residues") {
    corpus::Rng rng(31);
    for (int t = 0; t < 20; ++t) {
        UniPolyK F = kQuad;
        std::vector<RatFunc> gc;
        for (int i = rng.uniform(0, 3); i >= 0; --i)
            gc.push_back(RatFunc::constant(1, rng.coeff()));
        UniPolyK G(1, gc);
        CHECK(residue_sum(G * F, F).is_zero());
        CHECK(residue_sum((G * F).shifted(rng.uniform(0, 3)), F).is_zero());
    }
}

TEST_CASE("residues agree with numeric local sums") {
    // Res[(2Y - a)/(2Y) / F] at square-free samples, against root sums
    UniPolyK F = kQuad;
    UniPolyK num = U({"-a1", "2"});
    UniPolyK den = U({"0", "2"});
    RatFunc symbolic = residue_sum(num, den, F);
    SamplePlan plan;
    plan.seed = 99;
    plan.count = 50;
    OracleReport rep = oracle_compare(symbolic, plan, [&](const ParamPoint& at) {
        return numeric_residue(num, den, F, at);
    });
    CHECK(rep.pass);
    CHECK(rep.evaluated == 50);
    CHECK(rep.max_error <= 1e-9);
}
