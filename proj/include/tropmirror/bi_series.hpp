#pragma once

#include <map>
#include <utility>

#include "tropmirror/rational.hpp"

namespace tropmirror {

// Truncated series in t and w^{-1}: sum c(d_t, d_w) t^{d_t} w^{d_w}, d_t <= k, d_w <= 0.
class BiSeries {
public:
    using Key = std::pair<int, int>;  // (d_t, d_w)

    explicit BiSeries(int order);
    static BiSeries one(int order);

    int order() const { return order_; }
    const std::map<Key, Rational>& terms() const { return terms_; }
    Rational coefficient(int d_t, int d_w) const;

    // Adds c to the term; terms above the order are dropped silently,
    // exponents outside d_t >= 0, d_w <= 0 are rejected.
    void add_term(int d_t, int d_w, const Rational& c);

    friend bool operator==(const BiSeries& a, const BiSeries& b) {
        return a.order_ == b.order_ && a.terms_ == b.terms_;
    }

private:
    int order_;
    std::map<Key, Rational> terms_;
};

BiSeries operator+(const BiSeries& a, const BiSeries& b);
BiSeries operator-(const BiSeries& a, const BiSeries& b);
BiSeries operator*(const BiSeries& a, const BiSeries& b);
// log f, requires f = 1 + O(t)
BiSeries bi_log(const BiSeries& f);
// exp g, requires g = O(t)
BiSeries bi_exp(const BiSeries& g);

}  // namespace tropmirror
