#include "tropmirror/mirror_family.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "tropmirror/errors.hpp"

namespace tropmirror {

namespace {

template <typename T>
std::pair<T, T> residuals_impl(const MirrorPointT<T>& p) {
    if (p.X == T(0) && p.Y == T(0) && p.Z == T(0) && p.U == T(0))
        throw PreconditionError("residuals: all homogeneous coordinates vanish");
    return {p.X * p.Y * p.Z - p.U * p.U * p.U, p.W * p.U - p.t * (p.X + p.Y + p.Z)};
}

}  // namespace

std::pair<Complex, Complex> residuals(const MirrorPoint& p) { return residuals_impl(p); }

std::pair<Rational, Rational> residuals(const RationalMirrorPoint& p) {
    auto [a, b] = residuals_impl(p);
    return {Rational(a), Rational(b)};
}

Complex superpotential(const TorusPoint& p, Complex t) {
    if (p.x == 0.0 || p.y == 0.0) throw PreconditionError("superpotential: torus coordinates must be nonzero");
    return t * (p.x + p.y + 1.0 / (p.x * p.y));
}

Rational superpotential(const RationalTorusPoint& p, const Rational& t) {
    if (p.x == 0 || p.y == 0) throw PreconditionError("superpotential: torus coordinates must be nonzero");
    return Rational(t * (p.x + p.y + 1 / (p.x * p.y)));
}

MirrorPoint lift(const TorusPoint& p, Complex t) {
    return {p.x, p.y, 1.0 / (p.x * p.y), 1.0, superpotential(p, t), t};
}

RationalMirrorPoint lift(const RationalTorusPoint& p, const Rational& t) {
    return {p.x, p.y, Rational(1 / (p.x * p.y)), 1, superpotential(p, t), t};
}

WMinimum w_min_positive(double t) {
    if (!(t > 0) || !std::isfinite(t)) throw PreconditionError("w_min_positive: t must be positive");
    // x = e^u, y = e^v: g = e^u + e^v + e^{-u-v} is strictly convex
    double u = 0.7, v = -0.4;
    for (int it = 1; it <= 200; ++it) {
        const double a = std::exp(u), b = std::exp(v), c = std::exp(-u - v);
        const double gu = a - c, gv = b - c;
        if (std::hypot(gu, gv) < FamilyTolerances::minimizer)
            return {t * (a + b + c), a, b, it};
        const double huu = a + c, hvv = b + c, huv = c;
        const double det = huu * hvv - huv * huv;
        double du = (hvv * gu - huv * gv) / det, dv = (huu * gv - huv * gu) / det;
        // damp long steps far from the minimum
        const double len = std::hypot(du, dv);
        if (len > 1.0) {
            du /= len;
            dv /= len;
        }
        u -= du;
        v -= dv;
    }
    std::ostringstream msg;
    msg << "w_min_positive: Newton iteration did not converge for t = " << t << " (last u = " << u
        << ", v = " << v << ")";
    throw ConvergenceError(msg.str());
}

SingularityVerdict fiber_singularity_test(Complex t) {
    if (t == 0.0) return {true, 0.0, 0.0};  // the fiber degenerates to the toric boundary
    // gradient of x + y + 1/(xy) vanishes at x = y = w, w^3 = 1
    SingularityVerdict verdict{false, 0.0, INFINITY};
    for (int k = 0; k < 3; ++k) {
        const Complex w = std::polar(1.0, 2 * std::numbers::pi * k / 3);
        const Complex F = superpotential(TorusPoint{w, w}, t) - 1.0;
        const double r = std::abs(F);
        if (r < verdict.min_residual) {
            verdict.min_residual = r;
            verdict.critical_point = w;
        }
    }
    verdict.singular = verdict.min_residual < FamilyTolerances::singular_fiber * std::max(1.0, std::abs(t));
    return verdict;
}

double torus_period_quadrature(double t, int grid) {
    if (!(std::abs(t) < 1.0 / 3)) throw PreconditionError("torus_period_quadrature: need |t| < 1/3");
    if (grid < 1) throw PreconditionError("torus_period_quadrature: grid must be positive");
    const double h = 2 * std::numbers::pi / grid;
    double sum = 0;
    for (int i = 0; i < grid; ++i) {
        const Complex x = std::polar(1.0, i * h);
        for (int j = 0; j < grid; ++j) {
            const Complex y = std::polar(1.0, j * h);
            sum += std::real(1.0 / (1.0 - t * (x + y + 1.0 / (x * y))));
        }
    }
    return sum / (static_cast<double>(grid) * grid);
}

double period_series_partial_sum(const Rational& t, int max_d) {
    Rational sum = 0;
    Rational t3 = t * t * t, p = 1;
    for (int d = 0; d <= max_d; ++d) {
        const Integer f = factorial(d);
        Rational c(factorial(3 * d), f * f * f);
        c.canonicalize();
        sum += c * p;
        p *= t3;
    }
    return sum.get_d();
}

Integer constant_term_power(int n) {
    if (n < 0) throw PreconditionError("constant_term_power: negative exponent");
    // x^i y^j (xy)^{-k}: constant iff i = k and j = k
    Integer total = 0;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) {
            const int k = n - i - j;
            if (i != k || j != k) continue;
            total += factorial(n) / (factorial(i) * factorial(j) * factorial(k));
        }
    return total;
}

}  // namespace tropmirror
