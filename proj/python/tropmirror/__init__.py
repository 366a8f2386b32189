from fractions import Fraction

from ._core import (
    InvariantError,
    PreconditionError,
    closed_form_I1_coeff,
    convergence_radius_estimate,
    extract_nd_period,
    extract_nd_scattering,
    fiber_is_singular,
    frobenius_basis,
    render_diagram,
    scatter,
    torus_period_quadrature,
    verify,
    w_min_positive,
)


def nd_table(max_degree, pipeline="period"):
    """N_d as Fractions, d = 1..max_degree."""
    fn = extract_nd_period if pipeline == "period" else extract_nd_scattering
    return [Fraction(v) for v in fn(max_degree)]
