#include "abeltrace/linalg.hpp"

#include "abeltrace/errors.hpp"

#include <cassert>

namespace abeltrace {

namespace {

int ambient(const RatMatrix& m) {
    assert(!m.empty() && !m[0].empty());
    return m[0][0].n();
}

// Clears denominators row by row and strips each row's rational content so
// Bareiss works on small integers. The determinant of the original matrix is
// det(rows) * numeric_scale / scale_product.
struct ClearedSystem {
    std::vector<std::vector<MultiPoly>> rows;
    MultiPoly scale_product;
    Rational numeric_scale;
};

ClearedSystem clear_rows(const RatMatrix& a, const std::vector<RatFunc>* rhs) {
    int n = ambient(a);
    ClearedSystem out{{}, MultiPoly::constant(n, Rational(1)), Rational(1)};
    for (size_t i = 0; i < a.size(); ++i) {
        MultiPoly lcm = MultiPoly::constant(n, Rational(1));
        auto fold = [&](const RatFunc& e) {
            if (e.den().is_one()) return;
            MultiPoly g = poly_gcd(lcm, e.den());
            lcm = lcm * divide_exact(e.den(), g);
        };
        for (const auto& e : a[i]) fold(e);
        if (rhs) fold((*rhs)[i]);
        std::vector<MultiPoly> row;
        row.reserve(a[i].size() + (rhs ? 1 : 0));
        auto cleared = [&](const RatFunc& e) {
            return e.num() * divide_exact(lcm, e.den());
        };
        for (const auto& e : a[i]) row.push_back(cleared(e));
        if (rhs) row.push_back(cleared((*rhs)[i]));
        // strip the row's rational content
        mpz_class num_gcd = 0, den_lcm = 1;
        for (const auto& p : row)
            for (const auto& [m, c] : p.terms()) {
                mpz_class g, l;
                mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
                num_gcd = g;
                mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
                den_lcm = l;
            }
        if (num_gcd != 0 && (num_gcd != 1 || den_lcm != 1)) {
            mpq_class q(num_gcd, den_lcm);
            q.canonicalize();
            Rational content{q};
            Rational inv = content.inverse();
            for (auto& p : row) p *= inv;
            out.numeric_scale *= content;
        }
        out.rows.push_back(std::move(row));
        out.scale_product *= lcm;
    }
    return out;
}

// Fraction-free elimination in place; returns {determinant of the polynomial
// matrix restricted to the first m columns, true if nonsingular}. The rows
// may carry one extra augmented column which is transformed along.
struct BareissResult {
    MultiPoly det;
    bool nonsingular;
};

BareissResult bareiss(std::vector<std::vector<MultiPoly>>& m, size_t square_cols, int n) {
    int sign = 1;
    MultiPoly prev = MultiPoly::constant(n, Rational(1));
    for (size_t k = 0; k < square_cols; ++k) {
        size_t pivot = k;
        while (pivot < m.size() && m[pivot][k].is_zero()) ++pivot;
        if (pivot == m.size()) return {MultiPoly(n), false};
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < m.size(); ++i) {
            for (size_t j = k + 1; j < m[i].size(); ++j)
                m[i][j] = divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = MultiPoly(n);
        }
        prev = m[k][k];
    }
    MultiPoly det = m[square_cols - 1][square_cols - 1];
    if (sign < 0) det = -det;
    return {det, true};
}

RatFunc detail_field_det(const RatMatrix& a);

} // namespace

RatFunc det_ratfunc(const RatMatrix& a) {
    assert(!a.empty());
    int n = ambient(a);
    bool polynomial = true;
    for (const auto& row : a)
        for (const auto& e : row) polynomial = polynomial && e.is_polynomial();
    if (!polynomial) return detail_field_det(a);
    auto sys = clear_rows(a, nullptr);
    auto res = bareiss(sys.rows, a.size(), n);
    if (!res.nonsingular) return RatFunc(n);
    RatFunc det(res.det, sys.scale_product);
    return det * RatFunc::constant(n, sys.numeric_scale);
}

namespace {

// Elimination over the field M with reduced rational arithmetic. For systems
// whose entries carry large denominators this beats clearing them first: the
// cleared polynomial entries multiply into far bigger objects than the
// reduced fractions ever reach.
LinearSolveResult solve_field(RatMatrix m, std::vector<RatFunc> rhs) {
    int n = m[0][0].n();
    size_t rows = m.size();
    RatFunc det = RatFunc::constant(n, Rational(1));
    for (size_t k = 0; k < rows; ++k) {
        size_t pivot = k;
        size_t best = SIZE_MAX;
        for (size_t r = k; r < rows; ++r) {
            if (m[r][k].is_zero()) continue;
            size_t weight = m[r][k].num().terms().size() + m[r][k].den().terms().size();
            if (weight < best) {
                best = weight;
                pivot = r;
            }
        }
        if (best == SIZE_MAX) return {{}, RatFunc(n)};
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            std::swap(rhs[pivot], rhs[k]);
            det = -det;
        }
        det *= m[k][k];
        RatFunc inv = m[k][k].inverse();
        for (size_t j = k; j < rows; ++j) m[k][j] *= inv;
        rhs[k] *= inv;
        for (size_t i = k + 1; i < rows; ++i) {
            if (m[i][k].is_zero()) continue;
            RatFunc f = m[i][k];
            for (size_t j = k; j < rows; ++j) m[i][j] -= f * m[k][j];
            rhs[i] -= f * rhs[k];
        }
    }
    std::vector<RatFunc> x(rows, RatFunc(n));
    for (size_t ii = rows; ii-- > 0;) {
        RatFunc acc = rhs[ii];
        for (size_t j = ii + 1; j < rows; ++j) acc -= m[ii][j] * x[j];
        x[ii] = acc; // diagonal already 1
    }
    return {std::move(x), std::move(det)};
}

RatFunc detail_field_det(const RatMatrix& a) {
    RatMatrix m = a;
    int n = m[0][0].n();
    size_t rows = m.size();
    RatFunc det = RatFunc::constant(n, Rational(1));
    for (size_t k = 0; k < rows; ++k) {
        size_t pivot = k;
        size_t best = SIZE_MAX;
        for (size_t r = k; r < rows; ++r) {
            if (m[r][k].is_zero()) continue;
            size_t weight = m[r][k].num().terms().size() + m[r][k].den().terms().size();
            if (weight < best) {
                best = weight;
                pivot = r;
            }
        }
        if (best == SIZE_MAX) return RatFunc(n);
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            det = -det;
        }
        det *= m[k][k];
        RatFunc inv = m[k][k].inverse();
        for (size_t j = k; j < rows; ++j) m[k][j] *= inv;
        for (size_t i = k + 1; i < rows; ++i) {
            if (m[i][k].is_zero()) continue;
            RatFunc f = m[i][k];
            for (size_t j = k; j < rows; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

bool all_polynomial(const RatMatrix& a, const std::vector<RatFunc>& rhs) {
    for (const auto& row : a)
        for (const auto& e : row)
            if (!e.is_polynomial()) return false;
    for (const auto& e : rhs)
        if (!e.is_polynomial()) return false;
    return true;
}

} // namespace

LinearSolveResult solve_linear(const RatMatrix& a, const std::vector<RatFunc>& rhs) {
    assert(!a.empty() && a.size() == rhs.size());
    int n = ambient(a);
    size_t m = a.size();
    if (!all_polynomial(a, rhs)) return solve_field(a, rhs);
    // Fraction-free route for polynomial systems.
    auto sys = clear_rows(a, &rhs);
    auto res = bareiss(sys.rows, m, n);
    if (!res.nonsingular) return {{}, RatFunc(n)};
    RatFunc det = RatFunc(res.det, sys.scale_product) * RatFunc::constant(n, sys.numeric_scale);
    // Back-substitution on the triangular polynomial system over M.
    std::vector<RatFunc> x(m, RatFunc(n));
    for (size_t ii = m; ii-- > 0;) {
        RatFunc acc = RatFunc(sys.rows[ii][m], MultiPoly::constant(n, Rational(1)));
        for (size_t j = ii + 1; j < m; ++j)
            acc -= RatFunc::from_poly(sys.rows[ii][j]) * x[j];
        x[ii] = acc / RatFunc::from_poly(sys.rows[ii][ii]);
    }
    return {std::move(x), std::move(det)};
}

int rank_ratfunc(const RatMatrix& a) {
    if (a.empty()) return 0;
    RatMatrix m = a;
    size_t rows = m.size(), cols = m[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pivot = rank;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        RatFunc inv = m[rank][col].inverse();
        for (size_t j = col; j < cols; ++j) m[rank][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col].is_zero()) continue;
            RatFunc f = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

} // namespace abeltrace
