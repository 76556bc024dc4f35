#include "abeltrace/abelian.hpp"

#include "abeltrace/errors.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace abeltrace {

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i; // exact at each step
    }
    return r;
}

long castelnuovo_bound(int d, int n, int q) {
    if (d < 1) throw std::invalid_argument("castelnuovo_bound: d must be >= 1");
    if (n < 1) throw std::invalid_argument("castelnuovo_bound: n must be >= 1");
    if (q < 0 || q > n) throw std::invalid_argument("castelnuovo_bound: q must lie in 0..n");
    return binomial(n, q) * binomial(d + n - q - 1, n + 1);
}

namespace {

// Monomials x^alpha y^beta with |alpha| + beta <= maxdeg, lowest degree
// first, canonical order within a degree.
std::vector<MultiPoly> monomials_up_to(int n, int maxdeg) {
    std::vector<std::pair<Monomial, int>> monos;
    Monomial m(var_count(n), 0);
    // enumerate exponents over the x_1..x_n, y slots
    std::vector<int> exp(n + 1, 0);
    while (true) {
        int deg = 0;
        for (int e : exp) deg += e;
        if (deg <= maxdeg) {
            Monomial mm(var_count(n), 0);
            for (int i = 0; i <= n; ++i) mm[i] = exp[i];
            monos.push_back({mm, deg});
        }
        // odometer over exponent ranges 0..maxdeg
        int pos = 0;
        while (pos <= n) {
            if (++exp[pos] > maxdeg) {
                exp[pos] = 0;
                ++pos;
            } else {
                break;
            }
        }
        if (pos > n) break;
    }
    std::sort(monos.begin(), monos.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return MonomialOrder{}(a.first, b.first);
    });
    std::vector<MultiPoly> out;
    out.reserve(monos.size());
    for (const auto& [mm, deg] : monos)
        out.push_back(MultiPoly::from_monomial(n, mm, Rational(1)));
    return out;
}

// Substitute x_i -> b_i on a polynomial in (x, y) and collect in Y: the tilt
// along the vertical direction a = 0.
UniPolyK vertical_tilt(const MultiPoly& p, int n) {
    MultiPoly t = p;
    for (int i = 1; i <= n; ++i)
        t = t.substitute(var_slot(VarId::x(i), n), MultiPoly::variable(n, VarId::b(i)));
    std::vector<MultiPoly> parts(t.degree_in(n) + 1, MultiPoly(n));
    for (const auto& [m, c] : t.terms()) {
        Monomial rest = m;
        int e = rest[n];
        rest[n] = 0;
        parts[e].add_term(rest, c);
    }
    std::vector<RatFunc> coeffs;
    coeffs.reserve(parts.size());
    for (auto& part : parts) coeffs.push_back(RatFunc::from_poly(std::move(part)));
    return UniPolyK(n, std::move(coeffs));
}

std::vector<int> a_slots(int n) {
    std::vector<int> s;
    for (int i = 1; i <= n; ++i) s.push_back(var_slot(VarId::a(i), n));
    return s;
}

UniPolyK specialize_a0(const UniPolyK& f) {
    int n = f.n();
    std::vector<RatFunc> coeffs;
    coeffs.reserve(f.degree() + 1);
    for (int k = 0; k <= f.degree(); ++k) {
        const RatFunc& c = f.coeff(k);
        MultiPoly den0 = c.den().substitute_zero(a_slots(n));
        if (den0.is_zero()) throw NonSpecializable("coefficient has a pole along a = 0");
        coeffs.push_back(RatFunc(c.num().substitute_zero(a_slots(n)), std::move(den0)));
    }
    return UniPolyK(n, std::move(coeffs));
}

// Q-linear independence of the generators' t-coefficient vectors: flatten
// each (t_0..t_(d-1)) in Q[b] into rational coordinates and rank over Q.
bool t_vectors_independent(const std::vector<MultiPoly>& gens, const UniPolyK& f0, int d, int n) {
    std::map<std::pair<int, Monomial>, int> columns;
    std::vector<std::map<int, Rational>> rows;
    UniPolyK one = UniPolyK::constant(n, RatFunc::constant(n, Rational(1)));
    for (const auto& p : gens) {
        UniPolyK p0 = vertical_tilt(p, n);
        std::map<int, Rational> row;
        UniPolyK cur = mod_monic(p0, f0);
        for (int k = 0; k < d; ++k) {
            RatFunc t = cur.coeff(d - 1);
            assert(t.is_polynomial());
            for (const auto& [m, c] : t.num().terms()) {
                auto key = std::make_pair(k, m);
                auto it = columns.find(key);
                if (it == columns.end())
                    it = columns.emplace(key, static_cast<int>(columns.size())).first;
                row[it->second] = c;
            }
            if (k + 1 < d) cur = mod_monic(cur.shifted(1), f0);
        }
        rows.push_back(std::move(row));
    }
    // Gaussian elimination over Q.
    size_t rank = 0;
    std::vector<std::map<int, Rational>> basis;
    for (auto& row : rows) {
        for (const auto& b : basis) {
            if (row.empty()) break;
            auto lead = b.begin()->first;
            auto it = row.find(lead);
            if (it == row.end()) continue;
            Rational factor = it->second / b.begin()->second;
            for (const auto& [col, val] : b) {
                auto rit = row.find(col);
                Rational nv = (rit == row.end() ? Rational(0) : rit->second) - factor * val;
                if (nv.is_zero()) {
                    if (rit != row.end()) row.erase(rit);
                } else {
                    row[col] = nv;
                }
            }
        }
        if (!row.empty()) {
            ++rank;
            basis.push_back(std::move(row));
            std::sort(basis.begin(), basis.end(),
                      [](const auto& a, const auto& b) { return a.begin()->first < b.begin()->first; });
        }
    }
    return rank == gens.size();
}

} // namespace

AbelianBasis abelian_basis(const MultiPoly& f, int n) {
    Cycle v = Cycle::single(f); // validates proper intersection
    int d = f.total_degree();
    auto degs = tilt_degrees(v);
    if (degs[0].germ_degree != d)
        throw DegreeDropAtInfinity("deg_y f(0, y) = " + std::to_string(degs[0].germ_degree) +
                                   " differs from the total degree " + std::to_string(d) +
                                   "; the affine chart is not proper for this surface");
    TiltedCycle t = tilt(v);
    if (discriminant(t.Q).is_zero())
        throw NotReduced("Disc of the tilt vanishes identically: f is not square-free");

    AbelianBasis basis{f, {}, binomial(d - 1, n + 1)};
    if (d - n - 2 >= 0) basis.generators = monomials_up_to(n, d - n - 2);
    if (static_cast<long>(basis.generators.size()) != basis.dimension)
        throw std::logic_error("abelian basis count does not match the binomial dimension");

    // Trace nullity of each P/(df/dy) dx, certified through the exact
    // cancellation tilt(df/dy) = lc * (dF/dY - sum a_i dF/db_i):
    // w_k = Res[Y^k tilt(P) / F] / lc, zero iff the residue is zero.
    for (const auto& p : basis.generators) {
        UniPolyK pt = tilt_poly(p, n);
        for (int k = 0; k <= n; ++k)
            if (!residue_sum(pt.shifted(k), t.Q).is_zero())
                throw std::logic_error("abelian generator has a nonzero trace coefficient");
    }

    if (!basis.generators.empty()) {
        UniPolyK f0 = specialize_a0(t.Q);
        if (!t_vectors_independent(basis.generators, f0, d, n))
            throw std::logic_error("abelian generators have dependent trace data");
    }
    return basis;
}

std::map<std::pair<MultiIndex, int>, RatFunc> qform_trace_coeffs(
    const MultiPoly& f, int n, int q, const std::map<MultiIndex, MeroFunc>& h, int kmax) {
    if (q < 0 || q > n) throw std::invalid_argument("qform_trace_coeffs: q must lie in 0..n");
    Cycle v = Cycle::single(f);
    TiltedCycle t = tilt(v);
    UniPolyK f0 = specialize_a0(t.Q);
    UniPolyK df0 = f0.derivative_Y();
    std::map<std::pair<MultiIndex, int>, RatFunc> out;
    for (const auto& [idx, hI] : h) {
        if (static_cast<int>(idx.size()) != q)
            throw std::invalid_argument("multi-index length must equal q");
        for (size_t i = 0; i < idx.size(); ++i) {
            if (idx[i] < 1 || idx[i] > n || (i > 0 && idx[i] <= idx[i - 1]))
                throw std::invalid_argument("multi-index must be strictly increasing in 1..n");
        }
        UniPolyK num0 = vertical_tilt(hI.num, n);
        UniPolyK den0 = vertical_tilt(hI.den, n);
        if (den0.is_zero() || gcd_monic(den0, f0).degree() > 0)
            throw PolarLocusMeetsCycle("polar locus of h_I meets V along the vertical direction");
        UniPolyK cur = mod_monic(num0 * df0, f0);
        if (!(den0.degree() == 0 && den0.coeff(0).is_one()))
            cur = mod_monic(cur * inverse_mod(den0, f0), f0);
        int d = f0.degree();
        for (int k = 0; k <= kmax; ++k) {
            out.emplace(std::make_pair(idx, k), cur.coeff(d - 1));
            if (k < kmax) cur = mod_monic(cur.shifted(1), f0);
        }
    }
    return out;
}

} // namespace abeltrace
