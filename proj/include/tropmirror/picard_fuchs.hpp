#pragma once

#include "tropmirror/log_series.hpp"

namespace tropmirror {

// I0 = 1, I1 = L + I1hol, I2 = 1/2 L^2 + I1hol L + I2hol
// (the same as -1/2 L^2 + I1 L + I2hol).
struct FrobeniusBasis {
    LogSeries I0;
    LogSeries I1;
    LogSeries I2;
    int order;

    PowerSeries I1hol() const { return I1.c0(); }
    PowerSeries I2hol() const { return I2.c0(); }
};

// theta^3 - 3Q theta(3theta+1)(3theta+2); result has order N-1.
LogSeries pf_apply(const LogSeries& a);

Rational closed_form_I1_coeff(int d);

FrobeniusBasis frobenius_basis(int N);

// Builds a basis from given holomorphic parts (used for degenerate checks).
FrobeniusBasis basis_from_parts(const PowerSeries& I1hol, const PowerSeries& I2hol);

// Ratio test on the trailing `window` coefficients, with the ratios
// extrapolated linearly in 1/n to remove the leading power-law correction.
double convergence_radius_estimate(const PowerSeries& series, int window);

}  // namespace tropmirror
