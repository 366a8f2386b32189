#include <doctest.h>

#include "test_support.hpp"
#include "tropmirror/bi_series.hpp"
#include "tropmirror/errors.hpp"
#include "tropmirror/log_series.hpp"
#include "tropmirror/series_json.hpp"

using namespace tropmirror;
using testsupport::random_series;
using testsupport::series;

namespace {

bool all_reduced(const PowerSeries& s) {
    for (const auto& c : s.coefficients())
        if (!is_reduced(c)) return false;
    return true;
}

// b with a(b(x)) = x by solving one coefficient at a time
PowerSeries revert_by_composition(const PowerSeries& a) {
    std::vector<Rational> b(a.order() + 1, Rational(0));
    b[1] = 1;
    for (int n = 2; n <= a.order(); ++n) {
        const PowerSeries comp = ps_compose(a, PowerSeries(a.variable(), b));
        b[n] = -comp.coefficient(n);
    }
    return PowerSeries(a.variable(), b);
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("9")) == "9/1");
    CHECK(to_string(parse_rational("-0/5")) == "0/1");
    CHECK_THROWS_AS(parse_rational("1/0"), PreconditionError);
    CHECK_THROWS_AS(parse_rational("1.5"), PreconditionError);
    CHECK_THROWS_AS(parse_rational("3/-4"), PreconditionError);
    CHECK(is_reduced(make_rational(-10, 4)));
    CHECK(make_rational(-10, 4) == Rational(-5, 2));
}

TEST_CASE("ps_mul examples") {
    CHECK(ps_mul(series("Q", {1, 1, 0}), series("Q", {1, -1, 0})) == series("Q", {1, 0, -1}));
    const PowerSeries f = series("Q", {3, -1, 4, 1});
    CHECK(ps_mul(f, PowerSeries::constant("Q", 3, 1)) == f);
    const PowerSeries g = series("Q", {1, 1, 1, 1});
    CHECK(ps_mul(g, g) == series("Q", {1, 2, 3, 4}));
}

TEST_CASE("binary operations truncate to the smaller order and reject mixed variables") {
    const PowerSeries a = series("Q", {1, 2, 3, 4, 5});
    const PowerSeries b = series("Q", {1, 1});
    CHECK((a * b).order() == 1);
    CHECK((a + b).order() == 1);
    CHECK_THROWS_AS(ps_mul(a, series("t", {1, 1})), PreconditionError);
    CHECK_THROWS_AS(a + series("t", {1}), PreconditionError);
}

TEST_CASE("exp and log1p") {
    CHECK(ps_exp(PowerSeries("Q", 5)) == PowerSeries::constant("Q", 5, 1));
    CHECK(ps_exp(series("Q", {0, 6, 0})) == series("Q", {1, 6, 18}));
    CHECK_THROWS_AS(ps_exp(series("Q", {1, 1})), PreconditionError);
    CHECK_THROWS_AS(ps_log1p(series("Q", {1, 1})), PreconditionError);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        const PowerSeries a = random_series(rng, "Q", 10, true);
        const PowerSeries e = ps_exp(a);
        CHECK(ps_log1p(e - PowerSeries::constant("Q", 10, 1)) == a);
        CHECK(all_reduced(e));
    }
}

TEST_CASE("compose") {
    const PowerSeries f = series("Q", {2, -3, 5, 7});
    CHECK(ps_compose(f, series("Q", {0, 1, 0, 0})) == f);
    CHECK(ps_compose(series("Q", {1, 1, 0, 0, 0}), series("Q", {0, 0, 1, 0, 0})) == series("Q", {1, 0, 1, 0, 0}));
    // exp(log(1 + Q)) = 1 + Q; exp series coefficients 1/n! written out
    std::vector<Rational> e(11), l(11);
    e[0] = 1;
    for (int n = 1; n <= 10; ++n) {
        e[n] = e[n - 1] / n;
        l[n] = Rational(n % 2 ? 1 : -1, n);
    }
    const PowerSeries composed = ps_compose(PowerSeries("Q", e), PowerSeries("Q", l));
    std::vector<Rational> expect(11, Rational(0));
    expect[0] = expect[1] = 1;
    CHECK(composed == PowerSeries("Q", expect));
    CHECK_THROWS_AS(ps_compose(f, series("Q", {1, 1})), PreconditionError);
}

TEST_CASE("revert") {
    CHECK(ps_revert(series("Q", {0, 1, 0, 0})) == series("Q", {0, 1, 0, 0}));
    const PowerSeries a = series("Q", {0, 1, 1, 0, 0});
    CHECK(ps_revert(a) == series("Q", {0, 1, -1, 2, -5}));
    CHECK(revert_by_composition(a) == series("Q", {0, 1, -1, 2, -5}));
    CHECK_THROWS_AS(ps_revert(series("Q", {0, 2, 1})), PreconditionError);
    CHECK_THROWS_AS(ps_revert(series("Q", {1, 1, 1})), PreconditionError);
    CHECK(ps_revert(a, "qtilde").variable() == "qtilde");
}

TEST_CASE("revert round trip on random normalized series") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Rational> c = random_series(rng, "Q", 12).coefficients();
        c[0] = 0;
        c[1] = 1;
        const PowerSeries a("Q", c);
        const PowerSeries b = ps_revert(a);
        CHECK(ps_compose(a, b) == series("Q", {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
        CHECK(ps_compose(b, a) == series("Q", {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
        CHECK(b == revert_by_composition(a));
    }
}

TEST_CASE("ring axioms on random series") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const PowerSeries a = random_series(rng, "Q", 16), b = random_series(rng, "Q", 16),
                          c = random_series(rng, "Q", 16);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(all_reduced(a * b));
    }
}

TEST_CASE("theta on log series") {
    const int N = 4;
    const PowerSeries zero("Q", N), one = PowerSeries::constant("Q", N, 1);
    const LogSeries L(zero, one, zero), L2(zero, zero, one);
    CHECK(log_theta(L) == LogSeries::holomorphic(one));
    CHECK(log_theta(L2) == L * Rational(2));
    const PowerSeries q3 = PowerSeries::monomial("Q", N, 3);
    CHECK(log_theta(LogSeries::holomorphic(q3)) == LogSeries::holomorphic(q3 * Rational(3)));
}

TEST_CASE("logseries_mul") {
    const int N = 3;
    const PowerSeries zero("Q", N), one = PowerSeries::constant("Q", N, 1), q = PowerSeries::monomial("Q", N, 1);
    const LogSeries L(zero, one, zero);
    CHECK(logseries_mul(L, L) == LogSeries(zero, zero, one));
    const PowerSeries c = series("Q", {1, 2, 0, 1}), d = series("Q", {3, 0, 1, 1});
    CHECK(logseries_mul(LogSeries::holomorphic(c), LogSeries::holomorphic(d)) == LogSeries::holomorphic(c * d));
    const LogSeries a(q, one, zero), b(-q, one, zero);
    CHECK(logseries_mul(a, b) == LogSeries(-(q * q), zero, one));
    CHECK_THROWS_AS(logseries_mul(L, LogSeries(zero, zero, one)), PreconditionError);
}

TEST_CASE("Leibniz rule for theta") {
    std::mt19937 rng(5);
    const PowerSeries zero("Q", 8);
    for (int trial = 0; trial < 5; ++trial) {
        const LogSeries a(random_series(rng, "Q", 8), random_series(rng, "Q", 8), zero);
        const LogSeries b(random_series(rng, "Q", 8), random_series(rng, "Q", 8), zero);
        CHECK(log_theta(logseries_mul(a, b)) == logseries_mul(log_theta(a), b) + logseries_mul(a, log_theta(b)));
    }
}

TEST_CASE("json round trip") {
    const PowerSeries s = series("Q", {1, -2, 3}) * Rational(1, 3);
    const auto j = to_json(s);
    CHECK(j["coefficients"][0] == "1/3");
    CHECK(j["coefficients"][1] == "-2/3");
    CHECK(j["order"] == 2);
    CHECK(power_series_from_json(j) == s);
    const LogSeries l(s, s, s);
    CHECK(log_series_from_json(to_json(l)) == l);
    CHECK(to_json(l).contains("L2"));
    auto bad = j;
    bad["order"] = 5;
    CHECK_THROWS_AS(power_series_from_json(bad), PreconditionError);
}

TEST_CASE("bivariate series") {
    BiSeries f = BiSeries::one(9);
    f.add_term(3, -3, 9);
    CHECK(f.coefficient(3, -3) == 9);
    CHECK_THROWS_AS(f.add_term(1, 1, 1), PreconditionError);
    f.add_term(12, -12, 5);  // above the order
    CHECK(f.terms().size() == 2);
    const BiSeries g = bi_log(f);
    CHECK(g.coefficient(3, -3) == 9);
    CHECK(g.coefficient(6, -6) == Rational(-81, 2));
    CHECK(bi_exp(g) == f);
    BiSeries h(4);
    h.add_term(1, 0, 2);
    h.add_term(1, 0, -2);
    CHECK(h.terms().empty());
}
