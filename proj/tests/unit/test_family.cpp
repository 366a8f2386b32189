#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "test_support.hpp"
#include "tropmirror/errors.hpp"
#include "tropmirror/mirror_family.hpp"

using namespace tropmirror;

TEST_CASE("mirror equations") {
    // t = 0, U = 0 with XYZ = 0
    const auto [e1, e2] = residuals(MirrorPoint{0.0, 1.0, 2.0, 0.0, 5.0, 0.0});
    CHECK(std::abs(e1) == 0.0);
    CHECK(std::abs(e2) == 0.0);
    const auto [f1, f2] = residuals(RationalMirrorPoint{1, 1, 1, 1, 3, 1});
    CHECK(f1 == 0);
    CHECK(f2 == 0);
    const auto [g1, g2] = residuals(RationalMirrorPoint{2, 1, 1, 1, 1, 1});
    CHECK(g1 == 1);
    CHECK(g2 == -3);
}

TEST_CASE("torus points lift exactly") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        Rational x = testsupport::random_rational(rng), y = testsupport::random_rational(rng);
        if (x == 0 || y == 0) continue;
        const Rational t = testsupport::random_rational(rng);
        const RationalMirrorPoint p = lift(RationalTorusPoint{x, y}, t);
        const auto [a, b] = residuals(p);
        CHECK(a == 0);
        CHECK(b == 0);
        CHECK(p.W == superpotential(RationalTorusPoint{x, y}, t));
    }
    const MirrorPoint c = lift(TorusPoint{Complex(0.3, 1.1), Complex(-2, 0.5)}, Complex(0.2, 0.1));
    const auto [a, b] = residuals(c);
    CHECK(std::abs(a) < 1e-14);
    CHECK(std::abs(b) < 1e-14);
}

TEST_CASE("minimum of W on the positive locus") {
    for (double t : {1e-3, 0.01, 0.1, 0.25, 1.0 / 3, 0.5, 1.0, 2.0, 7.5, 100.0}) {
        const WMinimum m = w_min_positive(t);
        CHECK(std::abs(m.value - 3 * t) <= 1e-10 * std::max(1.0, t));
        CHECK(std::abs(m.x - 1) < 1e-8);
        CHECK(std::abs(m.y - 1) < 1e-8);
    }
    // scaling in t
    CHECK(w_min_positive(4.0).value == doctest::Approx(4 * w_min_positive(1.0).value).epsilon(1e-12));
    CHECK_THROWS_AS(w_min_positive(0.0), PreconditionError);
    CHECK_THROWS_AS(w_min_positive(-1.0), PreconditionError);
}

TEST_CASE("singular fibers") {
    const double r = 1.0 / 3;
    for (int k = 0; k < 3; ++k) {
        const Complex t = std::polar(r, 2 * std::numbers::pi * k / 3);
        const SingularityVerdict v = fiber_singularity_test(t);
        CHECK(v.singular);
        CHECK(v.min_residual < 1e-12);
        // the critical point is a cube root of unity
        CHECK(std::abs(std::pow(v.critical_point, 3) - 1.0) < 1e-12);
    }
    for (Complex t : {Complex(0.1, 0), Complex(0.34, 0), Complex(-1.0 / 3, 0), Complex(0, 1.0 / 3),
                      Complex(0.3333, 0), Complex(1, 1)})
        CHECK(!fiber_singularity_test(t).singular);
    CHECK(fiber_singularity_test(Complex(0, 0)).singular);  // degenerate fiber
    // invariance under t -> zeta t
    const Complex zeta = std::polar(1.0, 2 * std::numbers::pi / 3);
    for (Complex t : {Complex(0.2, 0.05), Complex(1.0 / 3, 0), Complex(-0.4, 0.1)})
        CHECK(fiber_singularity_test(t).singular == fiber_singularity_test(zeta * t).singular);
}

TEST_CASE("constant terms") {
    CHECK(constant_term_power(0) == 1);
    CHECK(constant_term_power(1) == 0);
    CHECK(constant_term_power(3) == 6);
    CHECK(constant_term_power(6) == 90);
    CHECK(constant_term_power(9) == 1680);
    CHECK(constant_term_power(4) == 0);
}

TEST_CASE("period quadrature") {
    CHECK(torus_period_quadrature(0.0, 8) == doctest::Approx(1.0).epsilon(1e-15));
    const double exact = period_series_partial_sum(Rational(1, 10), 30);
    CHECK(std::abs(torus_period_quadrature(0.1, 512) - exact) / exact <= 1e-8);
    // error decreases with the grid while above rounding level
    const double e3 = period_series_partial_sum(Rational(3, 10), 400);
    double last = INFINITY;
    for (int g : {4, 8, 16, 32}) {
        const double err = std::abs(torus_period_quadrature(0.3, g) - e3);
        CHECK(err < last);
        last = err;
    }
    CHECK_THROWS_AS(torus_period_quadrature(1.0 / 3, 64), PreconditionError);
    CHECK_THROWS_AS(torus_period_quadrature(-0.5, 64), PreconditionError);
    CHECK_THROWS_AS(torus_period_quadrature(0.1, 0), PreconditionError);
}
