#pragma once

#include <complex>
#include <utility>

#include "tropmirror/rational.hpp"

namespace tropmirror {

using Complex = std::complex<double>;

// Tolerances used by the floating-point checks of this module.
struct FamilyTolerances {
    static constexpr double minimizer = 1e-13;       // gradient norm at the minimum
    static constexpr double singular_fiber = 1e-12;  // |F| at a critical point
};

template <typename T>
struct MirrorPointT {
    T X, Y, Z, U, W, t;
};
using MirrorPoint = MirrorPointT<Complex>;
using RationalMirrorPoint = MirrorPointT<Rational>;

// chart U = 1, X = x, Y = y, Z = 1/(xy)
template <typename T>
struct TorusPointT {
    T x, y;
};
using TorusPoint = TorusPointT<Complex>;
using RationalTorusPoint = TorusPointT<Rational>;

// (XYZ - U^3, WU - t(X+Y+Z))
std::pair<Complex, Complex> residuals(const MirrorPoint& p);
std::pair<Rational, Rational> residuals(const RationalMirrorPoint& p);

Complex superpotential(const TorusPoint& p, Complex t);
Rational superpotential(const RationalTorusPoint& p, const Rational& t);

MirrorPoint lift(const TorusPoint& p, Complex t);
RationalMirrorPoint lift(const RationalTorusPoint& p, const Rational& t);

struct WMinimum {
    double value;
    double x;
    double y;
    int iterations;
};

// Minimum of t(x + y + 1/(xy)) over x, y > 0 (Newton in log coordinates).
WMinimum w_min_positive(double t);

struct SingularityVerdict {
    bool singular;
    Complex critical_point;  // (x = y) of the singular point, if any
    double min_residual;     // min |t(x+y+1/(xy)) - 1| over critical points
};

SingularityVerdict fiber_singularity_test(Complex t);

double torus_period_quadrature(double t, int grid);

// sum_{d <= max_d} (3d)!/(d!)^3 t^{3d}, summed exactly then rounded
double period_series_partial_sum(const Rational& t, int max_d);

// constant term of (x + y + 1/(xy))^n by enumeration of (i, j, k), i + j + k = n
Integer constant_term_power(int n);

}  // namespace tropmirror
