"""Tests for Macaulay resultants and the E-characteristic polynomial."""

import math

import numpy as np
import pytest

from octupolar.errors import DegenerateConfigurationError, ParameterError
from octupolar.params import OctupolarParams
from octupolar.resultants import (
    HomQuadratic,
    UnivariatePoly,
    build_macaulay,
    echar_coeff_top,
    echar_poly,
    gradient_quadratics,
    poly_real_roots,
    resultant_closed_form,
    resultant_via_macaulay,
)

TOL = 1e-12
REL_TOL = 1e-8
ROOT_TOL = 1e-10


def seeded_params(rng, alpha2_min=0.0):
    while True:
        rho = math.sqrt(rng.uniform(0.0, 1.0)) * 0.5
        chi = rng.uniform(-math.pi, math.pi)
        alpha0 = rho * math.cos(chi)
        beta3 = -0.5 + rho * math.sin(chi)
        alpha2 = rng.uniform(0.0, 0.7)
        if alpha2 >= alpha2_min:
            return OctupolarParams(alpha0, beta3, alpha2)


def test_hom_quadratic_validation():
    with pytest.raises(ParameterError):
        HomQuadratic(3, {(1, 0, 0): 1.0})
    with pytest.raises(ParameterError):
        HomQuadratic(5, {})
    q = HomQuadratic(3, {(1, 1, 0): 2.0, (0, 0, 2): 0.0})
    assert q.coeffs == {(1, 1, 0): 2.0}
    assert q([1.0, 3.0, 5.0]) == 6.0


def test_macaulay_layout_three_variables():
    """Degree-4 monomials in 3 variables: 15 total, 12 reduced."""
    quads = gradient_quadratics(OctupolarParams(0.1, -0.4, 0.2))
    system = build_macaulay(quads)
    assert system.matrix.shape == (15, 15)
    assert int(system.reduced_mask.sum()) == 12
    assert system.dprime().shape == (3, 3)


def test_trivial_system_resultant_is_one():
    quads = [
        HomQuadratic(3, {(2, 0, 0): 1.0}),
        HomQuadratic(3, {(0, 2, 0): 1.0}),
        HomQuadratic(3, {(0, 0, 2): 1.0}),
    ]
    res = build_macaulay(quads).det_ratio()
    assert abs(res - 1.0) <= 1e-12


def test_scaled_trivial_system_degree():
    """Res is degree 4 in each equation's coefficients: (2*3*5)^4."""
    quads = [
        HomQuadratic(3, {(2, 0, 0): 2.0}),
        HomQuadratic(3, {(0, 2, 0): 3.0}),
        HomQuadratic(3, {(0, 0, 2): 5.0}),
    ]
    res = build_macaulay(quads).det_ratio()
    assert abs(res - 30.0**4) <= 1e-8 * 30.0**4


def test_macaulay_matches_closed_form():
    rng = np.random.default_rng(13)
    for _ in range(25):
        p = seeded_params(rng, alpha2_min=0.05)
        via = resultant_via_macaulay(p)
        closed = resultant_closed_form(p)
        assert abs(abs(via) - abs(closed)) <= REL_TOL * max(1.0, abs(closed))


def test_macaulay_degenerate_at_alpha2_zero():
    p = OctupolarParams(0.1, -0.4, 0.0)
    assert resultant_closed_form(p) == 0.0
    with pytest.raises(DegenerateConfigurationError):
        resultant_via_macaulay(p)


def test_echar_poly_shape_and_parity():
    """Degree 14, even, and divisible by lambda^2 - 1."""
    rng = np.random.default_rng(17)
    for _ in range(10):
        p = seeded_params(rng)
        phi = echar_poly(p)
        assert phi.degree == 14
        scale = np.abs(phi.coeffs).max()
        assert np.abs(phi.coeffs[1::2]).max() <= 1e-6 * scale
        assert abs(phi(1.0)) <= 1e-6 * scale
        assert abs(phi(-1.0)) <= 1e-6 * scale


def test_echar_constant_term_is_squared_resultant():
    rng = np.random.default_rng(19)
    for _ in range(10):
        p = seeded_params(rng)
        phi = echar_poly(p)
        res = resultant_closed_form(p)
        assert abs(phi(0.0) - res * res) <= 1e-6 * max(1.0, res * res)


def test_echar_top_coefficient_magnitude():
    rng = np.random.default_rng(23)
    for _ in range(10):
        p = seeded_params(rng)
        phi = echar_poly(p)
        top = phi.coeffs[14]
        closed = echar_coeff_top(p)
        assert abs(abs(top) - abs(closed)) <= REL_TOL * max(1.0, abs(closed))


def test_echar_apex_display():
    """phi = 19683 lambda^6 (lambda^2-1)^4 at the dome apex."""
    p = OctupolarParams(0.0, -0.5, math.sqrt(0.5))
    phi = echar_poly(p)
    expect = np.zeros(15)
    expect[6::2] = 19683.0 * np.array([1.0, -4.0, 6.0, -4.0, 1.0])
    got = np.zeros(15)
    got[: len(phi.coeffs)] = phi.coeffs
    assert np.abs(got - expect).max() <= 1e-6 * np.abs(expect).max()


def test_univariate_poly_trims_and_evaluates():
    poly = UnivariatePoly([1.0, 2.0, 0.0, 0.0])
    assert poly.degree == 1
    assert poly(3.0) == 7.0
    assert poly.deriv()(3.0) == 2.0
    with pytest.raises(ParameterError):
        UnivariatePoly([])


def test_poly_real_roots_multiplicities():
    """(x-1)^2 (x+2) (x^2+1): double root 1, simple root -2."""
    import numpy.polynomial.polynomial as npoly

    coeffs = npoly.polymul(npoly.polymul([1.0, -2.0, 1.0], [2.0, 1.0]), [1.0, 0.0, 1.0])
    roots = poly_real_roots(UnivariatePoly(coeffs))
    assert len(roots) == 2
    (r1, m1), (r2, m2) = sorted(roots)
    assert abs(r1 + 2.0) <= ROOT_TOL and m1 == 1
    assert abs(r2 - 1.0) <= 1e-6 and m2 == 2


def test_poly_real_roots_interval_and_zero_root():
    """x^3 (x-1/2): triple root at 0 and a simple root at 1/2."""
    poly = UnivariatePoly([0.0, 0.0, 0.0, -0.5, 1.0])
    roots = dict(poly_real_roots(poly))
    assert roots[0.0] == 3
    assert any(abs(r - 0.5) <= ROOT_TOL for r in roots)
    inside = poly_real_roots(poly, interval=(0.1, 1.0))
    assert len(inside) == 1 and abs(inside[0][0] - 0.5) <= ROOT_TOL
