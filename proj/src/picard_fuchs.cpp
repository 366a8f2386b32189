#include "tropmirror/picard_fuchs.hpp"

#include <array>
#include <cmath>

#include "tropmirror/errors.hpp"

namespace tropmirror {

namespace {

// Polynomial in L of degree <= 2, stored as coefficients of 1, L, L^2.
using LPoly = std::array<Rational, 3>;

LPoly apply_D(const LPoly& p) { return {p[1], 2 * p[2], Rational(0)}; }

LPoly add(const LPoly& a, const LPoly& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

LPoly scale(const LPoly& a, const Rational& c) { return {a[0] * c, a[1] * c, a[2] * c}; }

// R(x) = 3x(3x+1)(3x+2) = 27x^3 + 27x^2 + 6x, applied as R(c + D) via Taylor
// expansion in the nilpotent D.
LPoly apply_R_shifted(const Rational& c, const LPoly& p) {
    const Rational r0 = 27 * c * c * c + 27 * c * c + 6 * c;
    const Rational r1 = 81 * c * c + 54 * c + 6;
    const Rational r2 = 81 * c + 27;
    const Rational r3 = 27;
    const LPoly d1 = apply_D(p), d2 = apply_D(d1), d3 = apply_D(d2);
    return add(add(scale(p, r0), scale(d1, r1)), add(scale(d2, r2), scale(d3, r3)));
}

// (d + D)^{-3} = d^{-3} sum_k (-1)^k C(k+2,2) (D/d)^k
LPoly apply_inverse_cube(int d, const LPoly& p) {
    if (d == 0) throw InvariantError("frobenius recurrence: singular step at degree 0");
    const Rational dd(d);
    LPoly result{0, 0, 0}, term = p;
    Rational factor = 1 / (dd * dd * dd);
    for (int k = 0; k < 3; ++k) {
        const Rational binom((k + 2) * (k + 1) / 2);
        result = add(result, scale(term, factor * binom * (k % 2 ? -1 : 1)));
        term = apply_D(term);
        factor /= dd;
    }
    return result;
}

LogSeries solve_recurrence(const LPoly& initial, int N) {
    std::vector<Rational> c0(N + 1), c1(N + 1), c2(N + 1);
    LPoly p = initial;
    for (int d = 0; d <= N; ++d) {
        if (d > 0) p = apply_inverse_cube(d, apply_R_shifted(Rational(d - 1), p));
        c0[d] = p[0];
        c1[d] = p[1];
        c2[d] = p[2];
    }
    return LogSeries(PowerSeries("Q", c0), PowerSeries("Q", c1), PowerSeries("Q", c2));
}

}  // namespace

LogSeries pf_apply(const LogSeries& a) {
    if (a.order() < 1) throw PreconditionError("pf_apply: order must be at least 1");
    const LogSeries t1 = log_theta(a), t2 = log_theta(t1), t3 = log_theta(t2);
    const LogSeries R = t3 * Rational(27) + t2 * Rational(27) + t1 * Rational(6);
    const LogSeries shifted(ps_shift(R.c0()), ps_shift(R.c1()), ps_shift(R.c2()));
    return (t3 - shifted).truncated(a.order() - 1);
}

Rational closed_form_I1_coeff(int d) {
    if (d < 1) throw PreconditionError("closed_form_I1_coeff: degree must be positive");
    const Integer f = factorial(d);
    Rational r(factorial(3 * d), Integer(d) * f * f * f);
    r.canonicalize();
    return r;
}

FrobeniusBasis frobenius_basis(int N) {
    if (N < 3) throw PreconditionError("frobenius_basis: order must be at least 3");
    LogSeries I0 = solve_recurrence({1, 0, 0}, N);
    LogSeries I1 = solve_recurrence({0, 1, 0}, N);
    LogSeries I2 = solve_recurrence({0, 0, Rational(1, 2)}, N);
    if (!(I0 == LogSeries::holomorphic(PowerSeries::constant("Q", N, 1))))
        throw InvariantError("frobenius_basis: I0 is not the constant 1");
    if (I1.c1() != PowerSeries::constant("Q", N, 1) || !I1.c2().is_zero())
        throw InvariantError("frobenius_basis: I1 log parts are not L");
    if (I2.c1() != I1.c0() || I2.c2() != PowerSeries::constant("Q", N, Rational(1, 2)))
        throw InvariantError("frobenius_basis: I2 log parts do not match I1");
    return FrobeniusBasis{I0, I1, I2, N};
}

FrobeniusBasis basis_from_parts(const PowerSeries& I1hol, const PowerSeries& I2hol) {
    if (I1hol.variable() != "Q" || I2hol.variable() != "Q")
        throw PreconditionError("basis_from_parts: series must be in Q");
    if (I1hol.coefficient(0) != 0 || I2hol.coefficient(0) != 0)
        throw PreconditionError("basis_from_parts: holomorphic parts must vanish at Q = 0");
    const int N = std::min(I1hol.order(), I2hol.order());
    const PowerSeries one = PowerSeries::constant("Q", N, 1);
    const PowerSeries zero("Q", N);
    const PowerSeries h1 = I1hol.truncated(N), h2 = I2hol.truncated(N);
    return FrobeniusBasis{LogSeries(one, zero, zero), LogSeries(h1, one, zero),
                          LogSeries(h2, h1, one * Rational(1, 2)), N};
}

double convergence_radius_estimate(const PowerSeries& series, int window) {
    const int N = series.order();
    if (window < 2) throw PreconditionError("convergence_radius_estimate: window must be >= 2");
    if (N - window < 0) throw PreconditionError("convergence_radius_estimate: series too short");
    for (int n = N - window; n <= N; ++n)
        if (series.coefficient(n) == 0 || n == 0)
            throw PreconditionError(
                "convergence_radius_estimate: need window+1 nonzero trailing coefficients");
    // least squares r_n = R + s / n
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int n = N - window + 1; n <= N; ++n) {
        const Rational ratio = series.coefficient(n) / series.coefficient(n - 1);
        const double x = 1.0 / n, y = ratio.get_d();
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double m = window;
    const double denom = m * sxx - sx * sx;
    const double slope = (m * sxy - sx * sy) / denom;
    const double R = (sy - slope * sx) / m;
    if (!std::isfinite(R) || R == 0)
        throw PreconditionError("convergence_radius_estimate: degenerate coefficient ratios");
    return std::abs(1.0 / R);
}

}  // namespace tropmirror
