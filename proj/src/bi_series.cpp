#include "tropmirror/bi_series.hpp"

#include <algorithm>

#include "tropmirror/errors.hpp"

namespace tropmirror {

BiSeries::BiSeries(int order) : order_(order) {
    if (order < 0) throw PreconditionError("BiSeries: negative order");
}

BiSeries BiSeries::one(int order) {
    BiSeries r(order);
    r.add_term(0, 0, 1);
    return r;
}

Rational BiSeries::coefficient(int d_t, int d_w) const {
    auto it = terms_.find({d_t, d_w});
    return it == terms_.end() ? Rational(0) : it->second;
}

void BiSeries::add_term(int d_t, int d_w, const Rational& c) {
    if (d_t < 0 || d_w > 0)
        throw PreconditionError("BiSeries: exponent outside d_t >= 0, d_w <= 0");
    if (d_t > order_ || c == 0) return;
    auto [it, inserted] = terms_.try_emplace({d_t, d_w}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
    BiSeries r(std::min(a.order(), b.order()));
    for (const auto& [k, c] : a.terms()) r.add_term(k.first, k.second, c);
    for (const auto& [k, c] : b.terms()) r.add_term(k.first, k.second, c);
    return r;
}

BiSeries operator-(const BiSeries& a, const BiSeries& b) {
    BiSeries r(std::min(a.order(), b.order()));
    for (const auto& [k, c] : a.terms()) r.add_term(k.first, k.second, c);
    for (const auto& [k, c] : b.terms()) r.add_term(k.first, k.second, -c);
    return r;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    BiSeries r(std::min(a.order(), b.order()));
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

BiSeries bi_log(const BiSeries& f) {
    if (f.coefficient(0, 0) != 1) throw PreconditionError("bi_log: constant term must be 1");
    BiSeries g(f.order());
    for (const auto& [k, c] : f.terms()) {
        if (k.first == 0 && k.second != 0)
            throw PreconditionError("bi_log: argument must be 1 modulo t");
        if (k.first > 0) g.add_term(k.first, k.second, c);
    }
    // log(1+g) = sum (-1)^{i+1} g^i / i; g^i vanishes once i exceeds the order
    BiSeries result(f.order()), power = g;
    for (int i = 1; i <= f.order() && !power.terms().empty(); ++i) {
        Rational s(i % 2 ? 1 : -1, i);
        for (const auto& [k, c] : power.terms()) result.add_term(k.first, k.second, s * c);
        power = power * g;
    }
    return result;
}

BiSeries bi_exp(const BiSeries& g) {
    for (const auto& [k, c] : g.terms())
        if (k.first == 0) throw PreconditionError("bi_exp: argument must vanish modulo t");
    BiSeries result = BiSeries::one(g.order()), power = BiSeries::one(g.order());
    for (int i = 1; i <= g.order(); ++i) {
        power = power * g;
        if (power.terms().empty()) break;
        const Rational inv = Rational(1) / Rational(factorial(i));
        for (const auto& [k, c] : power.terms()) result.add_term(k.first, k.second, c * inv);
    }
    return result;
}

}  // namespace tropmirror
