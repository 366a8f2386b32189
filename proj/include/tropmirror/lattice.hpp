#pragma once

#include <compare>
#include <cstdint>
#include <numeric>

#include "tropmirror/rational.hpp"

namespace tropmirror {

struct Vec2 {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend auto operator<=>(const Vec2&, const Vec2&) = default;
    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(std::int64_t c) const { return {x * c, y * c}; }
    bool is_zero() const { return x == 0 && y == 0; }
};

inline std::int64_t dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline std::int64_t cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline std::int64_t content(const Vec2& v) { return std::gcd(v.x, v.y); }
inline Vec2 primitive(const Vec2& v) {
    const auto g = content(v);
    return g == 0 ? v : Vec2{v.x / g, v.y / g};
}

// Counterclockwise angular order of directions, starting at angle 0.
inline bool angle_less(const Vec2& a, const Vec2& b) {
    auto half = [](const Vec2& v) { return (v.y < 0 || (v.y == 0 && v.x < 0)) ? 1 : 0; };
    const int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

struct RPoint {
    Rational x;
    Rational y;

    friend bool operator==(const RPoint& a, const RPoint& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(const RPoint& a, const RPoint& b) {
        return a.y < b.y || (a.y == b.y && a.x < b.x);
    }
    RPoint operator+(const RPoint& o) const { return {x + o.x, y + o.y}; }
    RPoint offset(const Vec2& d, const Rational& s) const {
        return {x + s * Rational(static_cast<long>(d.x)), y + s * Rational(static_cast<long>(d.y))};
    }
};

inline RPoint to_point(const Vec2& v) {
    return {Rational(static_cast<long>(v.x)), Rational(static_cast<long>(v.y))};
}

inline Integer floor_of(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace tropmirror
