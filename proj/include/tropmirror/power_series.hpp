#pragma once

#include <string>
#include <vector>

#include "tropmirror/rational.hpp"

namespace tropmirror {

// Truncated power series sum_{i<=N} a_i x^i over the rationals.
// Binary operations truncate to the smaller order and reject mixed variables.
class PowerSeries {
public:
    PowerSeries(std::string variable, int order);
    PowerSeries(std::string variable, std::vector<Rational> coefficients);

    static PowerSeries constant(const std::string& variable, int order, const Rational& c);
    static PowerSeries monomial(const std::string& variable, int order, int degree,
                                const Rational& c = 1);

    const std::string& variable() const { return variable_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    // Zero for indices past the truncation order.
    Rational coefficient(int i) const;

    PowerSeries truncated(int order) const;
    PowerSeries renamed(const std::string& variable) const;
    bool is_zero() const;

    PowerSeries operator-() const;
    PowerSeries operator*(const Rational& c) const;

    friend bool operator==(const PowerSeries& a, const PowerSeries& b);

private:
    std::string variable_;
    std::vector<Rational> coeffs_;
};

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);

PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b);
// x d/dx
PowerSeries ps_theta(const PowerSeries& a);
// x * a, keeping the order of a
PowerSeries ps_shift(const PowerSeries& a, int by = 1);
// requires a(0) = 0
PowerSeries ps_exp(const PowerSeries& a);
// log(1 + a), requires a(0) = 0
PowerSeries ps_log1p(const PowerSeries& a);
// 1 / a, requires a(0) != 0
PowerSeries ps_inverse(const PowerSeries& a);
// outer(inner(y)); requires inner(0) = 0. Result carries inner's variable.
PowerSeries ps_compose(const PowerSeries& outer, const PowerSeries& inner);
// compositional inverse of a with a(0) = 0, a_1 = 1 (Lagrange inversion)
PowerSeries ps_revert(const PowerSeries& a, const std::string& new_variable = "");

}  // namespace tropmirror
