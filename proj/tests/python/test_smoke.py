from fractions import Fraction

import pytest

import tropmirror as tm


def test_closed_form_coefficients():
    assert [tm.closed_form_I1_coeff(d) for d in (1, 2, 3)] == ["6/1", "45/1", "560/1"]


def test_basis_matches_closed_form():
    basis = tm.frobenius_basis(12)
    for d in range(1, 13):
        assert basis["I1hol"][d] == tm.closed_form_I1_coeff(d)


def test_pipelines_agree():
    period = tm.nd_table(3, "period")
    scattering = tm.nd_table(3, "scattering")
    assert period == scattering == [Fraction(9), Fraction(135, 4), Fraction(244)]


def test_verify_passes():
    report = tm.verify(2)
    assert report["passed"]
    assert report["period"] == ["9/1", "135/4"]


def test_scatter_log_fout():
    out = tm.scatter(3)
    assert out["log_fout"] == [(3, -3, "27/1")]


def test_svg_is_deterministic():
    assert tm.render_diagram(3) == tm.render_diagram(3)


def test_family_numerics():
    value, x, y = tm.w_min_positive(0.5)
    assert value == pytest.approx(1.5, abs=1e-10)
    assert tm.fiber_is_singular(1 / 3)
    assert not tm.fiber_is_singular(0.1)
    assert tm.torus_period_quadrature(0.0, 8) == pytest.approx(1.0)


def test_radius():
    assert tm.convergence_radius_estimate(60, 10) == pytest.approx(1 / 27, rel=0.02)


def test_bad_input_raises():
    with pytest.raises(ValueError):
        tm.closed_form_I1_coeff(0)
    with pytest.raises(ValueError):
        tm.torus_period_quadrature(0.5, 8)
