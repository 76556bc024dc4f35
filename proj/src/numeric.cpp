#include "abeltrace/numeric.hpp"

#include "abeltrace/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

namespace abeltrace {

namespace {

std::vector<Rational> full_point(const ParamPoint& at, int n) {
    // x and y slots are filled by the caller where needed; here they are 0.
    std::vector<Rational> p(var_count(n), Rational(0));
    for (int i = 0; i < n; ++i) {
        p[var_slot(VarId::a(i + 1), n)] = at.a[i];
        p[var_slot(VarId::b(i + 1), n)] = at.b[i];
    }
    return p;
}

std::optional<std::vector<Complex>> specialize(const UniPolyK& f, const ParamPoint& at) {
    int n = f.n();
    std::vector<Rational> p = full_point(at, n);
    std::vector<Complex> coeffs;
    coeffs.reserve(f.degree() + 1);
    for (int k = 0; k <= f.degree(); ++k) {
        auto val = f.coeff(k).try_eval(p);
        if (!val) return std::nullopt; // coefficient pole at this sample
        coeffs.push_back(Complex(val->to_double(), 0.0));
    }
    return coeffs;
}

Complex horner(const std::vector<Complex>& c, Complex z) {
    Complex v = 0.0;
    for (size_t i = c.size(); i-- > 0;) v = v * z + c[i];
    return v;
}

std::vector<Complex> aberth_roots(std::vector<Complex> c, double min_disc) {
    int d = static_cast<int>(c.size()) - 1;
    double maxc = 0.0;
    for (const auto& x : c) maxc = std::max(maxc, std::abs(x));
    if (d < 0 || std::abs(c.back()) <= 1e-14 * (1.0 + maxc))
        throw LeadingCoefficientVanishes("leading coefficient vanishes at the sample point");
    for (auto& x : c) x /= c[d]; // monic copy
    std::vector<Complex> dc(d);
    for (int k = 1; k <= d; ++k) dc[k - 1] = c[k] * static_cast<double>(k);

    double radius = 0.0;
    for (int k = 0; k < d; ++k) radius = std::max(radius, std::abs(c[k]));
    radius = 1.0 + radius;
    std::vector<Complex> z(d);
    for (int j = 0; j < d; ++j) {
        // fixed perturbed circle; no randomness so runs are reproducible
        double theta = 2.0 * M_PI * (j + 0.353412) / d + 0.2718;
        z[j] = radius * (1.0 + 0.01 * j / (d + 1.0)) * Complex(std::cos(theta), std::sin(theta));
    }

    double tol = kRootResidualTol * (1.0 + maxc);
    for (int iter = 0; iter < 400; ++iter) {
        double worst = 0.0;
        for (int j = 0; j < d; ++j) {
            Complex pv = horner(c, z[j]);
            worst = std::max(worst, std::abs(pv));
            Complex pd = horner(dc, z[j]);
            if (pv == Complex(0.0, 0.0)) continue;
            Complex newton = pd == Complex(0.0, 0.0) ? Complex(0.0, 0.0) : pv / pd;
            Complex sum = 0.0;
            for (int k = 0; k < d; ++k)
                if (k != j) sum += 1.0 / (z[j] - z[k]);
            Complex denom = 1.0 - newton * sum;
            Complex step = denom == Complex(0.0, 0.0) ? newton : newton / denom;
            z[j] -= step;
        }
        if (worst <= tol) break;
    }
    double worst = 0.0;
    for (int j = 0; j < d; ++j) worst = std::max(worst, std::abs(horner(c, z[j])));
    if (worst > tol)
        throw NearDiscriminant("root refinement did not reach the residual tolerance "
                               "(sample too close to the discriminant locus)");
    // a posteriori separation guard: |Disc| of the monic polynomial
    double disc = 1.0;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) disc *= std::norm(z[i] - z[j]);
    if (d > 1 && disc < min_disc)
        throw NearDiscriminant("sample point too close to the discriminant locus");
    std::sort(z.begin(), z.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return z;
}

} // namespace

std::vector<Complex> roots(const UniPolyK& f, const ParamPoint& at, double min_disc) {
    auto coeffs = specialize(f, at);
    if (!coeffs)
        throw LeadingCoefficientVanishes("coefficient pole at the sample point");
    return aberth_roots(std::move(*coeffs), min_disc);
}

Complex numeric_trace(const Cycle& v, const MeroFunc& h, int k, const ParamPoint& at) {
    int n = v.n();
    Complex total = 0.0;
    std::vector<Rational> rp = full_point(at, n);
    std::vector<Complex> cp(rp.size());
    for (size_t i = 0; i < rp.size(); ++i) cp[i] = rp[i].to_double();
    double hscale = 1.0;
    for (const auto& [m, c] : h.den.terms()) hscale = std::max(hscale, std::abs(c.to_double()));
    for (const auto& comp : v.components()) {
        UniPolyK tilted = tilt_poly(comp.f, n);
        auto coeffs = specialize(tilted, at);
        if (!coeffs) throw LeadingCoefficientVanishes("coefficient pole at the sample point");
        std::vector<Complex> ys = aberth_roots(std::move(*coeffs), 1e-6);
        for (const Complex& y : ys) {
            cp[n] = y;
            for (int i = 1; i <= n; ++i)
                cp[var_slot(VarId::x(i), n) /* = i-1 */] =
                    cp[var_slot(VarId::a(i), n)] * y + cp[var_slot(VarId::b(i), n)];
            Complex den = h.den.eval(cp);
            if (std::abs(den) <= 1e-12 * hscale)
                throw PoleHit("intersection point lies on the polar locus of h");
            Complex val = h.num.eval(cp) / den;
            total += static_cast<double>(comp.multiplicity) * std::pow(y, k) * val;
        }
    }
    return total;
}

Complex numeric_residue(const UniPolyK& num, const UniPolyK& den, const UniPolyK& f,
                        const ParamPoint& at, double min_disc) {
    std::vector<Complex> ys = roots(f, at, min_disc);
    auto nc = specialize(num, at);
    auto dc = specialize(den, at);
    auto fc = specialize(f, at);
    if (!nc || !dc || !fc) throw PoleHit("coefficient pole at the sample point");
    std::vector<Complex> dfc(fc->size() - 1);
    for (size_t k = 1; k < fc->size(); ++k) dfc[k - 1] = (*fc)[k] * static_cast<double>(k);
    Complex total = 0.0;
    for (const Complex& y : ys) {
        Complex d = horner(*dc, y) * horner(dfc, y);
        if (std::abs(d) <= 1e-14) throw PoleHit("denominator vanishes at a root");
        total += horner(*nc, y) / d;
    }
    return total;
}

std::vector<ParamPoint> draw_samples(const SamplePlan& plan, int n) {
    std::mt19937_64 rng(plan.seed);
    // rationals k/16 with |k/16| <= box, avoiding 0 to keep samples generic
    long lim = 16;
    double boxd = plan.box.to_double();
    long span = std::max<long>(1, static_cast<long>(boxd * lim));
    std::uniform_int_distribution<long> dist(-span, span);
    auto draw = [&] {
        long k = 0;
        while (k == 0) k = dist(rng);
        return Rational(k, lim);
    };
    std::vector<ParamPoint> out;
    out.reserve(plan.count);
    for (int i = 0; i < plan.count; ++i) {
        ParamPoint p;
        for (int j = 0; j < n; ++j) p.a.push_back(draw());
        for (int j = 0; j < n; ++j) p.b.push_back(draw());
        out.push_back(std::move(p));
    }
    return out;
}

OracleReport oracle_compare(const RatFunc& symbolic, const SamplePlan& plan,
                            const std::function<std::optional<Complex>(const ParamPoint&)>& numeric) {
    int n = symbolic.n();
    OracleReport report;
    report.seed = plan.seed;
    report.requested = plan.count;
    // Draw a larger deterministic pool so rejected samples can be replaced
    // without perturbing the stream for accepted ones.
    SamplePlan pool = plan;
    pool.count = plan.count * 8 + 16;
    std::vector<ParamPoint> points = draw_samples(pool, n);
    for (const ParamPoint& at : points) {
        if (report.evaluated >= plan.count) break;
        std::vector<Rational> p(var_count(n), Rational(0));
        for (int i = 0; i < n; ++i) {
            p[var_slot(VarId::a(i + 1), n)] = at.a[i];
            p[var_slot(VarId::b(i + 1), n)] = at.b[i];
        }
        auto sv = symbolic.try_eval(p);
        if (!sv) {
            ++report.rejected;
            continue;
        }
        std::optional<Complex> nv;
        try {
            nv = numeric(at);
        } catch (const AbelError&) {
            nv = std::nullopt;
        }
        if (!nv) {
            ++report.rejected;
            continue;
        }
        double s = sv->to_double();
        double err = std::abs(Complex(s, 0.0) - *nv) / std::max(1.0, std::abs(s));
        report.samples.push_back({at, std::abs(s), err, err <= kAgreementTol});
        report.max_error = std::max(report.max_error, err);
        ++report.evaluated;
    }
    report.pass = report.evaluated == plan.count;
    for (const auto& s : report.samples) report.pass = report.pass && s.pass;
    return report;
}

std::string OracleReport::to_json(bool include_samples) const {
    char buf[64];
    auto fmt = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.3e", v);
        return std::string(buf);
    };
    std::ostringstream out;
    out << "{\"seed\":" << seed << ",\"requested\":" << requested
        << ",\"evaluated\":" << evaluated << ",\"rejected\":" << rejected
        << ",\"max_error\":\"" << fmt(max_error) << "\",\"pass\":" << (pass ? "true" : "false");
    if (include_samples) {
        out << ",\"samples\":[";
        for (size_t i = 0; i < samples.size(); ++i) {
            if (i) out << ',';
            out << "{\"error\":\"" << fmt(samples[i].error) << "\",\"pass\":"
                << (samples[i].pass ? "true" : "false") << '}';
        }
        out << ']';
    }
    out << '}';
    return out.str();
}

} // namespace abeltrace
