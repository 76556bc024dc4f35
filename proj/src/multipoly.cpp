#include "abeltrace/multipoly.hpp"

#include "abeltrace/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <unordered_map>
#include <sstream>

namespace abeltrace {

MultiPoly MultiPoly::constant(int n, const Rational& c) {
    MultiPoly p(n);
    if (!c.is_zero()) p.terms_.emplace(Monomial(var_count(n), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int n, const VarId& v) {
    MultiPoly p(n);
    Monomial m(var_count(n), 0);
    m[var_slot(v, n)] = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

MultiPoly MultiPoly::from_monomial(int n, const Monomial& m, const Rational& c) {
    MultiPoly p(n);
    assert(static_cast<int>(m.size()) == var_count(n));
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0;
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    assert(is_constant());
    return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return mono_degree(terms_.begin()->first); // leading term has max degree
}

int MultiPoly::degree_in(int slot) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[slot]);
    return d;
}

bool MultiPoly::uses_slot(int slot) const {
    for (const auto& [m, c] : terms_)
        if (m[slot] > 0) return true;
    return false;
}

bool MultiPoly::uses_only(const std::vector<int>& slots) const {
    for (const auto& [m, c] : terms_)
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0 && std::find(slots.begin(), slots.end(), static_cast<int>(i)) == slots.end())
                return false;
    return true;
}

const std::pair<const Monomial, Rational>& MultiPoly::leading_term() const {
    assert(!terms_.empty());
    return *terms_.begin();
}

Rational MultiPoly::leading_coeff() const {
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    assert(n_ == o.n_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    assert(n_ == o.n_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

namespace {

struct MonomialHash {
    size_t operator()(const Monomial& m) const {
        size_t h = 1469598103934665603ull;
        for (int e : m) {
            h ^= static_cast<size_t>(e) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    assert(a.n() == b.n());
    MultiPoly r(a.n());
    Monomial m(var_count(a.n()), 0);
    size_t pairs = a.terms().size() * b.terms().size();
    if (pairs > 4096) {
        // hash accumulation beats ordered-map insertion for large products;
        // the scratch value avoids an allocation per term pair
        std::unordered_map<Monomial, Rational, MonomialHash> acc;
        acc.reserve(pairs / 4);
        Rational scratch(0);
        for (const auto& [ma, ca] : a.terms()) {
            for (const auto& [mb, cb] : b.terms()) {
                for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
                scratch = ca;
                scratch *= cb;
                auto it = acc.find(m);
                if (it == acc.end())
                    acc.emplace(m, scratch);
                else
                    it->second += scratch;
            }
        }
        for (auto& [mono, c] : acc)
            if (!c.is_zero()) r.add_term(mono, c);
        return r;
    }
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = MultiPoly::constant(n_, Rational(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u) r *= base;
        e >>= 1u;
        if (e > 0) base *= base;
    }
    return r;
}

MultiPoly MultiPoly::derivative(int slot) const {
    MultiPoly r(n_);
    for (const auto& [m, c] : terms_) {
        if (m[slot] == 0) continue;
        Monomial dm = m;
        dm[slot] -= 1;
        r.add_term(dm, c * Rational(m[slot]));
    }
    return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    assert(static_cast<int>(point.size()) == var_count(n_));
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) t *= point[i].pow(static_cast<unsigned>(m[i]));
        total += t;
    }
    return total;
}

std::complex<double> MultiPoly::eval(const std::vector<std::complex<double>>& point) const {
    assert(static_cast<int>(point.size()) == var_count(n_));
    std::complex<double> total = 0.0;
    for (const auto& [m, c] : terms_) {
        std::complex<double> t = c.to_double();
        for (size_t i = 0; i < m.size(); ++i)
            for (int e = 0; e < m[i]; ++e) t *= point[i];
        total += t;
    }
    return total;
}

MultiPoly MultiPoly::substitute(int slot, const MultiPoly& value) const {
    assert(value.n() == n_);
    // Group by exponent of `slot` and reuse powers of the substituted value.
    std::map<int, MultiPoly> by_exp;
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        int e = rest[slot];
        rest[slot] = 0;
        auto it = by_exp.find(e);
        if (it == by_exp.end()) it = by_exp.emplace(e, MultiPoly(n_)).first;
        it->second.add_term(rest, c);
    }
    MultiPoly r(n_);
    MultiPoly power = MultiPoly::constant(n_, Rational(1));
    int cur = 0;
    for (const auto& [e, part] : by_exp) {
        while (cur < e) {
            power *= value;
            ++cur;
        }
        r += part * power;
    }
    return r;
}

MultiPoly MultiPoly::substitute_zero(const std::vector<int>& slots) const {
    MultiPoly r(n_);
    for (const auto& [m, c] : terms_) {
        bool kill = false;
        for (int s : slots)
            if (m[s] > 0) { kill = true; break; }
        if (!kill) r.add_term(m, c);
    }
    return r;
}

MultiPoly MultiPoly::rename_slots(const std::vector<int>& perm) const {
    MultiPoly r(n_);
    for (const auto& [m, c] : terms_) {
        Monomial t(m.size(), 0);
        Monomial seen = m;
        for (size_t i = 0; i < perm.size(); ++i) {
            if (perm[i] < 0) continue;
            t[i] = m[perm[i]];
            seen[perm[i]] = 0;
        }
        assert(mono_degree(seen) == 0 && "rename_slots drops used variables");
        r.add_term(t, c);
    }
    return r;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c.abs();
        bool neg = c.sign() < 0;
        if (first) {
            if (neg) out << '-';
        } else {
            out << (neg ? '-' : '+');
        }
        first = false;
        bool has_vars = mono_degree(m) > 0;
        if (!has_vars || !a.is_one()) {
            out << a.str();
            if (has_vars) out << '*';
        }
        bool first_var = true;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!first_var) out << '*';
            first_var = false;
            out << slot_name(static_cast<int>(i), n_);
            if (m[i] > 1) out << '^' << m[i];
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Exact division and gcd
// ---------------------------------------------------------------------------

bool try_divide_exact(const MultiPoly& a, const MultiPoly& b, MultiPoly& quotient) {
    assert(a.n() == b.n());
    if (b.is_zero()) return false;
    MultiPoly q(a.n());
    MultiPoly rem = a;
    const auto& [lm, lc] = b.leading_term();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading_term();
        Monomial qm(rm.size());
        bool div = true;
        for (size_t i = 0; i < rm.size(); ++i) {
            qm[i] = rm[i] - lm[i];
            if (qm[i] < 0) { div = false; break; }
        }
        if (!div) return false; // single-divisor division: any stuck term means b does not divide a
        Rational qc = rc / lc;
        MultiPoly t = MultiPoly::from_monomial(a.n(), qm, qc);
        q += t;
        rem -= t * b;
    }
    quotient = std::move(q);
    return true;
}

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly q(a.n());
    if (!try_divide_exact(a, b, q))
        throw ZeroDegree("inexact polynomial division");
    return q;
}

bool divides(const MultiPoly& b, const MultiPoly& a) {
    if (a.is_zero()) return !b.is_zero();
    MultiPoly q(a.n());
    return try_divide_exact(a, b, q);
}

namespace {

// Rational scalar c such that p/c has integer-coprime coefficients with
// positive leading coefficient.
Rational signed_content(const MultiPoly& p) {
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : p.terms()) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
        num_gcd = g;
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
        den_lcm = l;
    }
    if (num_gcd == 0) return Rational(1);
    mpq_class content(num_gcd, den_lcm);
    content.canonicalize();
    Rational r{content};
    return p.leading_coeff().sign() < 0 ? -r : r;
}

// Integer-coefficient polynomials in the slots below `top` viewed as
// univariate in `top`: coefficient of top^e.
std::map<int, MultiPoly> collect_by_slot(const MultiPoly& p, int top) {
    std::map<int, MultiPoly> coeffs;
    for (const auto& [m, c] : p.terms()) {
        Monomial rest = m;
        int e = rest[top];
        rest[top] = 0;
        auto it = coeffs.find(e);
        if (it == coeffs.end()) it = coeffs.emplace(e, MultiPoly(p.n())).first;
        it->second.add_term(rest, c);
    }
    return coeffs;
}

int top_slot(const MultiPoly& a, const MultiPoly& b) {
    int nvars = var_count(a.n());
    for (int s = nvars - 1; s >= 0; --s)
        if (a.uses_slot(s) || b.uses_slot(s)) return s;
    return -1;
}

MultiPoly gcd_primitive(MultiPoly a, MultiPoly b);
bool certified_coprime(const MultiPoly& a, const MultiPoly& b);

constexpr std::uint64_t kModulus = 1000000007;

std::uint64_t pow_mod(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    base %= kModulus;
    while (e > 0) {
        if (e & 1u) r = r * base % kModulus;
        base = base * base % kModulus;
        e >>= 1u;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t x) { return pow_mod(x, kModulus - 2); }

std::uint64_t rational_mod(const Rational& q, bool& ok) {
    std::uint64_t num = mpz_fdiv_ui(q.numerator().get_mpz_t(), kModulus);
    std::uint64_t den = mpz_fdiv_ui(q.denominator().get_mpz_t(), kModulus);
    if (den == 0) {
        ok = false;
        return 0;
    }
    return num * inv_mod(den) % kModulus;
}

// Dense coefficient list of p in the variable `v` with every other slot
// evaluated at the point, all arithmetic mod a fixed prime.
std::vector<std::uint64_t> eval_to_univariate_mod(const MultiPoly& p, int v,
                                                  const std::vector<std::uint64_t>& pt,
                                                  bool& ok) {
    std::vector<std::uint64_t> c(p.degree_in(v) + 1, 0);
    for (const auto& [m, coeff] : p.terms()) {
        std::uint64_t t = rational_mod(coeff, ok);
        if (!ok) return {};
        for (size_t s = 0; s < m.size(); ++s)
            if (static_cast<int>(s) != v && m[s] > 0)
                t = t * pow_mod(pt[s], static_cast<unsigned>(m[s])) % kModulus;
        c[m[v]] = (c[m[v]] + t) % kModulus;
    }
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

int univariate_gcd_degree_mod(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
    auto strip = [](std::vector<std::uint64_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    strip(a);
    strip(b);
    while (!b.empty()) {
        std::uint64_t lead = inv_mod(b.back());
        while (a.size() >= b.size()) {
            std::uint64_t f = a.back() * lead % kModulus;
            size_t off = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i)
                a[off + i] = (a[off + i] + kModulus - f * b[i] % kModulus) % kModulus;
            strip(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

// Certified coprimality test. Returning true proves gcd(a, b) is constant:
// for each shared variable v, an integer specialization that keeps lc_v(a)
// nonzero mod p and has univariate gcd of degree 0 mod p forces
// deg_v(gcd) = 0 (the mod-p gcd degree dominates the rational one when the
// leading coefficient survives). No false positives; false means unknown
// and the caller falls back to the full PRS.
bool certified_coprime(const MultiPoly& a, const MultiPoly& b) {
    int nvars = var_count(a.n());
    std::vector<int> shared;
    for (int s = 0; s < nvars; ++s)
        if (a.uses_slot(s) && b.uses_slot(s)) shared.push_back(s);
    if (shared.empty()) return true; // primitive inputs with disjoint support
    static const std::uint64_t points[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    constexpr int npoints = sizeof(points) / sizeof(points[0]);
    for (int v : shared) {
        bool certified = false;
        for (int attempt = 0; attempt < 4 && !certified; ++attempt) {
            std::vector<std::uint64_t> pt(nvars, 1);
            for (int s = 0; s < nvars; ++s)
                pt[s] = points[(s * 5 + attempt * 7 + v) % npoints];
            bool ok = true;
            auto av = eval_to_univariate_mod(a, v, pt, ok);
            if (!ok || static_cast<int>(av.size()) - 1 != a.degree_in(v)) continue;
            auto bv = eval_to_univariate_mod(b, v, pt, ok);
            if (!ok || bv.empty()) continue;
            certified = univariate_gcd_degree_mod(std::move(av), std::move(bv)) == 0;
        }
        if (!certified) return false;
    }
    return true;
}

// gcd of the coefficient list (content of p as a univariate in `top`).
MultiPoly poly_content(const MultiPoly& p, int top) {
    MultiPoly g(p.n());
    for (const auto& [e, part] : collect_by_slot(p, top)) {
        g = gcd_primitive(g, part);
        if (g.is_constant()) break;
    }
    return g;
}

// Pure pseudo-remainder lc_v(b)^(delta+1) * a mod b; the exact power is
// kept even when intermediate leading terms cancel, as the subresultant
// divisions below rely on it.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, int top, int n) {
    auto bc = collect_by_slot(b, top);
    int db = bc.rbegin()->first;
    const MultiPoly lb = bc.rbegin()->second;
    MultiPoly r = a;
    int e = collect_by_slot(a, top).rbegin()->first - db + 1;
    while (!r.is_zero()) {
        auto rc = collect_by_slot(r, top);
        int dr = rc.rbegin()->first;
        if (dr < db) break;
        const MultiPoly lr = rc.rbegin()->second;
        MultiPoly shift_b(n);
        for (const auto& [m, c] : b.terms()) {
            Monomial t = m;
            t[top] += dr - db;
            shift_b.add_term(t, c);
        }
        r = r * lb - shift_b * lr;
        --e;
    }
    for (; e > 0; --e) r = r * lb;
    return r;
}

// Both inputs integer-coefficient and nonzero; result primitive.
// Subresultant PRS (Collins): polynomial content is extracted once at entry
// and once at exit; the chain divisions r / (g h^delta) are exact and keep
// coefficient growth polynomial.
MultiPoly gcd_primitive(MultiPoly a, MultiPoly b) {
    if (a.is_zero()) return normalize_primitive(b);
    if (b.is_zero()) return normalize_primitive(a);
    if (certified_coprime(a, b)) return MultiPoly::constant(a.n(), Rational(1));
    int top = top_slot(a, b);
    if (top < 0) return MultiPoly::constant(a.n(), Rational(1));
    if (!a.uses_slot(top) || !b.uses_slot(top)) {
        // One side is free of the top variable: gcd divides that side's
        // content, so recurse against the other side's content.
        const MultiPoly& free = a.uses_slot(top) ? b : a;
        const MultiPoly& other = a.uses_slot(top) ? a : b;
        return gcd_primitive(poly_content(other, top), free);
    }
    int n = a.n();
    MultiPoly ca = poly_content(a, top);
    MultiPoly cb = poly_content(b, top);
    MultiPoly u = divide_exact(a, ca);
    MultiPoly v = divide_exact(b, cb);
    MultiPoly c = gcd_primitive(std::move(ca), std::move(cb));
    if (u.degree_in(top) < v.degree_in(top)) std::swap(u, v);
    MultiPoly g = MultiPoly::constant(n, Rational(1));
    MultiPoly h = MultiPoly::constant(n, Rational(1));
    while (true) {
        int delta = u.degree_in(top) - v.degree_in(top);
        MultiPoly r = pseudo_remainder(u, v, top, n);
        if (r.is_zero()) break;
        if (!r.uses_slot(top)) return normalize_primitive(c); // coprime in `top`
        u = std::move(v);
        MultiPoly hd = h;
        for (int i = 1; i < delta; ++i) hd *= h; // h^delta (h^1 when delta = 0, unused then)
        v = divide_exact(r, g * (delta == 0 ? MultiPoly::constant(n, Rational(1)) : hd));
        g = collect_by_slot(u, top).rbegin()->second;
        if (delta >= 1) {
            // h <- g^delta / h^(delta-1)
            MultiPoly gd = g;
            for (int i = 1; i < delta; ++i) gd *= g;
            if (delta == 1) {
                h = gd;
            } else {
                MultiPoly hprev = h;
                for (int i = 1; i < delta - 1; ++i) hprev *= h;
                h = divide_exact(gd, hprev);
            }
        }
    }
    return normalize_primitive(c * divide_exact(v, poly_content(v, top)));
}

} // namespace

MultiPoly normalize_primitive(const MultiPoly& p) {
    if (p.is_zero()) return p;
    MultiPoly r = p;
    r *= signed_content(p).inverse();
    return r;
}

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    assert(a.n() == b.n());
    if (a.is_zero()) return normalize_primitive(b);
    if (b.is_zero()) return normalize_primitive(a);
    return gcd_primitive(normalize_primitive(a), normalize_primitive(b));
}

} // namespace abeltrace
