#include "tropmirror/log_series.hpp"

#include "tropmirror/errors.hpp"

namespace tropmirror {

LogSeries::LogSeries(PowerSeries c0, PowerSeries c1, PowerSeries c2)
    : parts_{std::move(c0), std::move(c1), std::move(c2)} {
    for (int k = 1; k < 3; ++k) {
        if (parts_[k].variable() != parts_[0].variable())
            throw PreconditionError("LogSeries: parts use different variables");
        if (parts_[k].order() != parts_[0].order())
            throw PreconditionError("LogSeries: parts have different orders");
    }
}

LogSeries LogSeries::holomorphic(const PowerSeries& c0) {
    const PowerSeries z(c0.variable(), c0.order());
    return LogSeries(c0, z, z);
}

LogSeries LogSeries::zero(const std::string& variable, int order) {
    const PowerSeries z(variable, order);
    return LogSeries(z, z, z);
}

const PowerSeries& LogSeries::part(int k) const {
    if (k < 0 || k > 2) throw PreconditionError("LogSeries::part: index out of range");
    return parts_[k];
}

LogSeries LogSeries::truncated(int order) const {
    return LogSeries(parts_[0].truncated(order), parts_[1].truncated(order),
                     parts_[2].truncated(order));
}

bool LogSeries::is_zero() const {
    return parts_[0].is_zero() && parts_[1].is_zero() && parts_[2].is_zero();
}

LogSeries LogSeries::operator-() const { return *this * Rational(-1); }

LogSeries LogSeries::operator*(const Rational& c) const {
    return LogSeries(parts_[0] * c, parts_[1] * c, parts_[2] * c);
}

bool operator==(const LogSeries& a, const LogSeries& b) {
    return a.parts_[0] == b.parts_[0] && a.parts_[1] == b.parts_[1] && a.parts_[2] == b.parts_[2];
}

LogSeries operator+(const LogSeries& a, const LogSeries& b) {
    return LogSeries(a.c0() + b.c0(), a.c1() + b.c1(), a.c2() + b.c2());
}

LogSeries operator-(const LogSeries& a, const LogSeries& b) { return a + (-b); }

LogSeries log_theta(const LogSeries& a) {
    // theta(sum c_k L^k) = sum theta(c_k) L^k + sum k c_k L^{k-1}
    return LogSeries(ps_theta(a.c0()) + a.c1(),
                     ps_theta(a.c1()) + a.c2() * Rational(2),
                     ps_theta(a.c2()));
}

LogSeries log_scale(const LogSeries& a, const PowerSeries& b) {
    return LogSeries(ps_mul(a.c0(), b), ps_mul(a.c1(), b), ps_mul(a.c2(), b));
}

LogSeries logseries_mul(const LogSeries& a, const LogSeries& b) {
    const PowerSeries l3 = ps_mul(a.c1(), b.c2()) + ps_mul(a.c2(), b.c1());
    const PowerSeries l4 = ps_mul(a.c2(), b.c2());
    if (!l3.is_zero() || !l4.is_zero())
        throw PreconditionError("logseries_mul: product has log degree above 2");
    return LogSeries(ps_mul(a.c0(), b.c0()),
                     ps_mul(a.c0(), b.c1()) + ps_mul(a.c1(), b.c0()),
                     ps_mul(a.c0(), b.c2()) + ps_mul(a.c1(), b.c1()) + ps_mul(a.c2(), b.c0()));
}

}  // namespace tropmirror
