#pragma once

#include "abeltrace/trace.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace abeltrace {

using Complex = std::complex<double>;

// Rational sample point for the line parameters (a, b).
struct ParamPoint {
    std::vector<Rational> a; // size n
    std::vector<Rational> b; // size n
};

// Deterministic sampling: identical seed => identical samples. Points near
// the discriminant locus are rejected a posteriori by the evaluators.
struct SamplePlan {
    std::uint64_t seed = 1;
    int count = 50;
    Rational box = Rational(2);   // |a_i|, |b_i| <= box
    double min_disc = 1e-6;       // guard distance from the bad lines
};

std::vector<ParamPoint> draw_samples(const SamplePlan& plan, int n);

// Tolerances of the root finder and the agreement suite.
inline constexpr double kRootResidualTol = 1e-12;
inline constexpr double kAgreementTol = 1e-9;

// Simultaneous-iteration (Aberth-Ehrlich) roots of F specialized at (a, b),
// polished to |F(y_j)| <= 1e-12 * (1 + max|coeff|), sorted by (re, im).
std::vector<Complex> roots(const UniPolyK& f, const ParamPoint& at, double min_disc = 1e-6);

// Direct root-sum trace: sum_j y_j^k h(a y_j + b, y_j) with multiplicities.
Complex numeric_trace(const Cycle& v, const MeroFunc& h, int k, const ParamPoint& at);

// Root-sum residue: sum_j num(y_j) / (den(y_j) F'(y_j)) over the roots of F.
// This is the independent numeric route for every symbolic residue quantity.
Complex numeric_residue(const UniPolyK& num, const UniPolyK& den, const UniPolyK& f,
                        const ParamPoint& at, double min_disc = 1e-6);

struct OracleSampleResult {
    ParamPoint at;
    double symbolic;   // |symbolic value|
    double error;      // |symbolic - numeric| / max(1, |symbolic|)
    bool pass;
};

struct OracleReport {
    std::uint64_t seed = 0;
    int requested = 0;
    int evaluated = 0;
    int rejected = 0; // samples on poles / near the discriminant locus
    double max_error = 0.0;
    bool pass = true;
    std::vector<OracleSampleResult> samples;

    std::string to_json(bool include_samples = false) const;
};

// Compares a symbolic quantity in M against a numeric evaluator over the
// sample plan. The evaluator returns nullopt to reject a sample (pole or
// near-discriminant); rejected samples are replaced deterministically.
OracleReport oracle_compare(const RatFunc& symbolic, const SamplePlan& plan,
                            const std::function<std::optional<Complex>(const ParamPoint&)>& numeric);

} // namespace abeltrace
