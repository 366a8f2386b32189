#include <doctest.h>

#include "test_support.hpp"
#include "tropmirror/errors.hpp"
#include "tropmirror/mirror_map.hpp"

using namespace tropmirror;
using testsupport::series;

TEST_CASE("canonical map") {
    const FrobeniusBasis b = frobenius_basis(8);
    const CanonicalMap m = canonical_map(b);
    CHECK(m.qtilde_of_Q.coefficient(0) == 0);
    CHECK(m.qtilde_of_Q.coefficient(1) == 1);
    CHECK(m.qtilde_of_Q.coefficient(2) == 6);
    CHECK(m.Q_of_qtilde.coefficient(2) == -6);
    CHECK(m.Q_of_qtilde.variable() == "qtilde");
    std::vector<Rational> id(9, Rational(0));
    id[1] = 1;
    CHECK(ps_compose(m.qtilde_of_Q, m.Q_of_qtilde) == PowerSeries("qtilde", id));
    CHECK(ps_compose(m.Q_of_qtilde, m.qtilde_of_Q) == PowerSeries("Q", id));

    const FrobeniusBasis trivial = basis_from_parts(PowerSeries("Q", 5), PowerSeries("Q", 5));
    const CanonicalMap t = canonical_map(trivial);
    CHECK(t.qtilde_of_Q == series("Q", {0, 1, 0, 0, 0, 0}));
    CHECK(t.Q_of_qtilde == series("qtilde", {0, 1, 0, 0, 0, 0}));
}

TEST_CASE("N_d from periods") {
    const FrobeniusBasis b = frobenius_basis(10);
    const NdTable t = extract_nd_period(b, canonical_map(b), 4);
    CHECK(t.source == "period-pipeline");
    CHECK(t.N(1) == 9);
    CHECK(t.N(2) == Rational(135, 4));
    CHECK(t.N(3) == 244);
    CHECK(t.N(4) == Rational(36999, 16));
    CHECK_NOTHROW(require_first_invariant(t));

    const FrobeniusBasis trivial = basis_from_parts(PowerSeries("Q", 6), PowerSeries("Q", 6));
    const NdTable z = extract_nd_period(trivial, canonical_map(trivial), 5);
    for (const auto& v : z.values) CHECK(v == 0);
    CHECK_THROWS_AS(require_first_invariant(z), InvariantError);
    CHECK_THROWS_AS(extract_nd_period(b, canonical_map(b), 11), PreconditionError);
}

TEST_CASE("log parts cancel at every order") {
    for (int N = 3; N <= 20; ++N) CHECK_NOTHROW(log_cancelled_remainder(frobenius_basis(N)));
    // a basis with the wrong L coefficient must be caught
    FrobeniusBasis b = frobenius_basis(6);
    b.I2 = LogSeries(b.I2.c0(), b.I2.c1() * Rational(2), b.I2.c2());
    CHECK_THROWS_AS(log_cancelled_remainder(b), InvariantError);
}

TEST_CASE("extraction is stable in the order") {
    const FrobeniusBasis lo = frobenius_basis(6), hi = frobenius_basis(15);
    const NdTable a = extract_nd_period(lo, canonical_map(lo), 6);
    const NdTable c = extract_nd_period(hi, canonical_map(hi), 15);
    for (int d = 1; d <= 6; ++d) CHECK(a.N(d) == c.N(d));
}

TEST_CASE("NdTable json") {
    const FrobeniusBasis b = frobenius_basis(5);
    const NdTable t = extract_nd_period(b, canonical_map(b), 3);
    const auto j = to_json(t);
    CHECK(j["N"]["1"] == "9/1");
    CHECK(j["N"]["2"] == "135/4");
    CHECK(j["source"] == "period-pipeline");
    const NdTable back = nd_table_from_json(j);
    CHECK(back.values == t.values);
}

TEST_CASE("B-model potential") {
    const FrobeniusBasis b = frobenius_basis(5);
    const NdTable t = extract_nd_period(b, canonical_map(b), 2);
    const BModelPotential p1 = b_model_potential(t, 1);
    CHECK(p1.render(false) == "1/2·log²(t³) + c + 9·t³");
    CHECK(potential_derivative(p1).render() == "9·log t + 27·t³");
    CHECK(p1.render(true).find("-4.93480220054") != std::string::npos);
    const BModelPotential p0 = b_model_potential(t, 0);
    CHECK(p0.render(false) == "1/2·log²(t³) + c");
    const PotentialDerivative d2 = potential_derivative(b_model_potential(t, 2));
    CHECK(d2.log_coeff == 9);
    CHECK(d2.coeffs[1] == Rational(405, 2));
    CHECK(potential_constant_numeric() == doctest::Approx(-4.934802200544679).epsilon(1e-14));
}

TEST_CASE("q and t conventions") {
    const QtRelationVerdict v = q_t_relation_check();
    CHECK(v.holds);
    CHECK(v.samples > 0);
    const auto pi1 = pi1_period(0.7, 0.7);
    CHECK(pi1.real() == doctest::Approx(0.0));
    CHECK(pi1.imag() == doctest::Approx(3.141592653589793));
    const auto q1 = -std::exp(pi1_period(1.0, 0.2)), q2 = -std::exp(pi1_period(1.0, 0.4));
    CHECK(std::abs(q2 / q1 - 8.0) < 1e-12);
}
