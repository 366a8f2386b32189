#pragma once

#include <random>

#include "tropmirror/power_series.hpp"

namespace testsupport {

inline tropmirror::Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    return tropmirror::make_rational(num(rng), den(rng));
}

inline tropmirror::PowerSeries random_series(std::mt19937& rng, const std::string& var, int order,
                                             bool zero_constant = false) {
    std::vector<tropmirror::Rational> c(order + 1);
    for (auto& x : c) x = random_rational(rng);
    if (zero_constant) c[0] = 0;
    return tropmirror::PowerSeries(var, c);
}

inline tropmirror::PowerSeries series(const std::string& var, std::initializer_list<long> c) {
    std::vector<tropmirror::Rational> v;
    for (long x : c) v.emplace_back(x);
    return tropmirror::PowerSeries(var, v);
}

}  // namespace testsupport
