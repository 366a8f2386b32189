#pragma once

#include "tropmirror/power_series.hpp"

namespace tropmirror {

// c0(Q) + c1(Q) L + c2(Q) L^2 with L = log Q. All parts share variable and order.
class LogSeries {
public:
    LogSeries(PowerSeries c0, PowerSeries c1, PowerSeries c2);
    static LogSeries holomorphic(const PowerSeries& c0);
    static LogSeries zero(const std::string& variable, int order);

    const PowerSeries& part(int k) const;
    const PowerSeries& c0() const { return parts_[0]; }
    const PowerSeries& c1() const { return parts_[1]; }
    const PowerSeries& c2() const { return parts_[2]; }
    int order() const { return parts_[0].order(); }
    const std::string& variable() const { return parts_[0].variable(); }

    LogSeries truncated(int order) const;
    bool is_zero() const;

    LogSeries operator-() const;
    LogSeries operator*(const Rational& c) const;
    friend bool operator==(const LogSeries& a, const LogSeries& b);

private:
    PowerSeries parts_[3];
};

LogSeries operator+(const LogSeries& a, const LogSeries& b);
LogSeries operator-(const LogSeries& a, const LogSeries& b);

// theta = Q d/dQ, acting on L by theta L = 1
LogSeries log_theta(const LogSeries& a);
// Multiply by a holomorphic series.
LogSeries log_scale(const LogSeries& a, const PowerSeries& b);
// Rejects products whose L^3 or L^4 parts are nonzero.
LogSeries logseries_mul(const LogSeries& a, const LogSeries& b);

}  // namespace tropmirror
