#pragma once

#include "abeltrace/residue.hpp"

#include <optional>
#include <vector>

namespace abeltrace {

// Effective cycle sum(k_i * {f_i = 0}) of hypersurface germs along the
// vertical line x = 0. Each f_i lives in the (x, y) variables and must cut
// the line properly: f_i(0, y) not identically zero, of positive y-degree.
class Cycle {
public:
    struct Component {
        MultiPoly f;
        int multiplicity;
    };

    Cycle(int n, std::vector<Component> components);
    static Cycle single(MultiPoly f) { return Cycle(f.n(), {{std::move(f), 1}}); }

    int n() const { return n_; }
    const std::vector<Component>& components() const { return comps_; }
    int vertical_degree() const; // sum of k_i * deg_y f_i(0, y)

private:
    int n_;
    std::vector<Component> comps_;
};

// Quotient of two polynomials in (x, y) restricted to the cycle.
struct MeroFunc {
    MultiPoly num;
    MultiPoly den;

    static MeroFunc poly(MultiPoly p) {
        MultiPoly one = MultiPoly::constant(p.n(), Rational(1));
        return {std::move(p), std::move(one)};
    }
};

// The tilt f~(y,a,b) = f(ay+b, y), monicized. d is the vertical degree and
// equals deg Q; lc is the discarded Y-leading coefficient of the raw tilt.
struct TiltedCycle {
    UniPolyK Q;
    int d;
    RatFunc lc;
};

struct TiltDegrees {
    int germ_degree; // deg_y f(0, y), the intersection count at a = 0
    int poly_degree; // deg_Y f(ay+b, y) over Q(a, b)
};

// x_i -> a_i*y + b_i on a polynomial in (x, y); result collected in Y over M.
UniPolyK tilt_poly(const MultiPoly& p, int n);

// Raw degrees per design note: when they differ the global polynomial model
// does not exist and tilt() raises DegreeDropAtInfinity reporting both.
std::vector<TiltDegrees> tilt_degrees(const Cycle& v);

TiltedCycle tilt(const Cycle& v);

struct TraceData {
    std::vector<RatFunc> u;                 // power sums, u[0] = d
    std::optional<std::vector<RatFunc>> v;  // traces of y^k * h when present
};

// Coefficients (w_0..w_n) of the trace form of h dx.
struct TraceForm {
    std::vector<RatFunc> w;
};

// Newton power sums u_0..u_m from the coefficients of Q (no residues used;
// the residue route is the cross-check, not the implementation).
TraceData power_sums(const TiltedCycle& t, int m);
TraceData power_sums(const Cycle& v, int m);

bool is_reduced(const Cycle& v);
void require_reduced(const Cycle& v); // throws NotReduced

// v_k = Res[Y^k h~ dQ/dY / Q] for k = 0..m; V must be reduced.
TraceData trace_function(const Cycle& v, const MeroFunc& h, int m);

// w_k = Res[Y^k h~ (dF/dY - sum_i a_i dF/db_i) / F], F = Pi(V).
TraceForm trace_form(const Cycle& v, const MeroFunc& h);
std::vector<RatFunc> trace_form_coeffs(const Cycle& v, const MeroFunc& h, int kmax);

// dF/dY - sum_i a_i * dF/db_i, the tilt of the vertical derivative.
UniPolyK vertical_derivative(const UniPolyK& f);

} // namespace abeltrace
