#include "tropmirror/power_series.hpp"

#include <algorithm>

#include "tropmirror/errors.hpp"

namespace tropmirror {

namespace {

void require_same_variable(const PowerSeries& a, const PowerSeries& b, const char* op) {
    if (a.variable() != b.variable())
        throw PreconditionError(std::string(op) + ": variable mismatch '" + a.variable() +
                                "' vs '" + b.variable() + "'");
}

}  // namespace

PowerSeries::PowerSeries(std::string variable, int order) : variable_(std::move(variable)) {
    if (order < 0) throw PreconditionError("PowerSeries: negative order");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

PowerSeries::PowerSeries(std::string variable, std::vector<Rational> coefficients)
    : variable_(std::move(variable)), coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw PreconditionError("PowerSeries: need at least one coefficient");
    for (auto& c : coeffs_) c.canonicalize();
}

PowerSeries PowerSeries::constant(const std::string& variable, int order, const Rational& c) {
    PowerSeries s(variable, order);
    s.coeffs_[0] = c;
    return s;
}

PowerSeries PowerSeries::monomial(const std::string& variable, int order, int degree,
                                  const Rational& c) {
    if (degree < 0) throw PreconditionError("PowerSeries::monomial: negative degree");
    PowerSeries s(variable, order);
    if (degree <= order) s.coeffs_[degree] = c;
    return s;
}

Rational PowerSeries::coefficient(int i) const {
    if (i < 0 || i > order()) return 0;
    return coeffs_[i];
}

PowerSeries PowerSeries::truncated(int new_order) const {
    if (new_order < 0) throw PreconditionError("truncated: negative order");
    if (new_order > order()) throw PreconditionError("truncated: cannot raise the order");
    return PowerSeries(variable_, std::vector<Rational>(coeffs_.begin(),
                                                        coeffs_.begin() + new_order + 1));
}

PowerSeries PowerSeries::renamed(const std::string& variable) const {
    return PowerSeries(variable, coeffs_);
}

bool PowerSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

PowerSeries PowerSeries::operator-() const { return *this * Rational(-1); }

PowerSeries PowerSeries::operator*(const Rational& c) const {
    PowerSeries r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.variable_ == b.variable_ && a.coeffs_ == b.coeffs_;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    require_same_variable(a, b, "add");
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = a.coefficients()[i] + b.coefficients()[i];
    return PowerSeries(a.variable(), std::move(c));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + (-b); }

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) { return ps_mul(a, b); }

PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) {
    require_same_variable(a, b, "mul");
    const int n = std::min(a.order(), b.order());
    const auto& x = a.coefficients();
    const auto& y = b.coefficients();
    std::vector<Rational> c(n + 1, Rational(0));
    for (int i = 0; i <= n; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) c[i + j] += x[i] * y[j];
    }
    return PowerSeries(a.variable(), std::move(c));
}

PowerSeries ps_theta(const PowerSeries& a) {
    std::vector<Rational> c = a.coefficients();
    for (int i = 0; i <= a.order(); ++i) c[i] *= i;
    return PowerSeries(a.variable(), std::move(c));
}

PowerSeries ps_shift(const PowerSeries& a, int by) {
    if (by < 0) throw PreconditionError("ps_shift: negative shift");
    std::vector<Rational> c(a.order() + 1, Rational(0));
    for (int i = 0; i + by <= a.order(); ++i) c[i + by] = a.coefficients()[i];
    return PowerSeries(a.variable(), std::move(c));
}

PowerSeries ps_exp(const PowerSeries& a) {
    if (a.coefficient(0) != 0) throw PreconditionError("ps_exp: constant term must vanish");
    const int n = a.order();
    const auto& x = a.coefficients();
    std::vector<Rational> b(n + 1, Rational(0));
    b[0] = 1;
    // n b_n = sum_k k a_k b_{n-k}
    for (int m = 1; m <= n; ++m) {
        Rational s = 0;
        for (int k = 1; k <= m; ++k)
            if (x[k] != 0) s += Rational(k) * x[k] * b[m - k];
        b[m] = s / m;
    }
    return PowerSeries(a.variable(), std::move(b));
}

PowerSeries ps_log1p(const PowerSeries& a) {
    if (a.coefficient(0) != 0) throw PreconditionError("ps_log1p: constant term must vanish");
    const int n = a.order();
    const auto& x = a.coefficients();
    std::vector<Rational> g(n + 1, Rational(0));
    for (int m = 1; m <= n; ++m) {
        Rational s = Rational(m) * x[m];
        for (int k = 1; k < m; ++k)
            if (x[m - k] != 0) s -= Rational(k) * g[k] * x[m - k];
        g[m] = s / m;
    }
    return PowerSeries(a.variable(), std::move(g));
}

PowerSeries ps_inverse(const PowerSeries& a) {
    if (a.coefficient(0) == 0) throw PreconditionError("ps_inverse: constant term is zero");
    const int n = a.order();
    const auto& x = a.coefficients();
    std::vector<Rational> b(n + 1, Rational(0));
    b[0] = 1 / x[0];
    for (int m = 1; m <= n; ++m) {
        Rational s = 0;
        for (int k = 1; k <= m; ++k)
            if (x[k] != 0) s += x[k] * b[m - k];
        b[m] = -s * b[0];
    }
    return PowerSeries(a.variable(), std::move(b));
}

PowerSeries ps_compose(const PowerSeries& outer, const PowerSeries& inner) {
    if (inner.coefficient(0) != 0)
        throw PreconditionError("ps_compose: inner series must have zero constant term");
    const int n = std::min(outer.order(), inner.order());
    const PowerSeries in = inner.truncated(n);
    PowerSeries r = PowerSeries::constant(inner.variable(), n, outer.coefficient(n));
    for (int i = n - 1; i >= 0; --i)
        r = ps_mul(r, in) + PowerSeries::constant(inner.variable(), n, outer.coefficient(i));
    return r;
}

PowerSeries ps_revert(const PowerSeries& a, const std::string& new_variable) {
    if (a.coefficient(0) != 0 || a.coefficient(1) != 1)
        throw PreconditionError("ps_revert: series must be normalized (a0 = 0, a1 = 1)");
    const std::string var = new_variable.empty() ? a.variable() : new_variable;
    const int n = a.order();
    std::vector<Rational> b(n + 1, Rational(0));
    if (n >= 1) b[1] = 1;
    if (n < 2) return PowerSeries(var, std::move(b));
    // [x^m] b = (1/m) [z^{m-1}] h^m,  h = z / a(z)
    std::vector<Rational> q(a.coefficients().begin() + 1, a.coefficients().end());
    const PowerSeries h = ps_inverse(PowerSeries(a.variable(), q));
    PowerSeries hp = h;
    for (int m = 2; m <= n; ++m) {
        hp = ps_mul(hp, h);
        b[m] = hp.coefficient(m - 1) / m;
    }
    return PowerSeries(var, std::move(b));
}

}  // namespace tropmirror
