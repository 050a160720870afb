"""Tests for parameterizations, admissibility, and the normal form."""

import math

import numpy as np
import pytest

from octupolar.errors import ParameterError
from octupolar.params import (
    GeneralParams,
    OctupolarParams,
    PolarPoint,
    admissible,
    build_general,
    build_tensor,
    normal_form,
    polar_to_params,
)
from octupolar.tensor3 import Rotation3, is_traceless, rotate

TOL = 1e-12
NF_TOL = 1e-8


def random_rotation(rng):
    q, r = np.linalg.qr(rng.standard_normal((3, 3)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return Rotation3(q)


def test_params_validation():
    with pytest.raises(ParameterError):
        OctupolarParams(0.0, 0.0, -0.1)
    with pytest.raises(ParameterError):
        OctupolarParams(math.nan, 0.0, 0.0)
    p = OctupolarParams(0.1, -0.4, 0.2)
    assert p.astuple() == (0.1, -0.4, 0.2)


def test_build_tensor_reduced_pattern():
    p = OctupolarParams(0.3, -0.6, 0.25)
    t = build_tensor(p)
    u = t.unique_entries()
    assert u[(1, 1, 2)] == -p.alpha2
    assert u[(1, 1, 3)] == p.beta3
    assert u[(1, 2, 3)] == p.alpha0
    assert u[(2, 2, 2)] == p.alpha2
    assert u[(2, 2, 3)] == -1.0 - p.beta3
    assert u[(3, 3, 3)] == 1.0
    assert u[(1, 1, 1)] == 0.0
    assert u[(1, 2, 2)] == 0.0
    assert u[(1, 3, 3)] == 0.0
    assert u[(2, 3, 3)] == 0.0
    assert is_traceless(t, tol=TOL)


def test_build_general_traceless():
    rng = np.random.default_rng(3)
    for _ in range(20):
        g = GeneralParams(*rng.uniform(-1.0, 1.0, size=7))
        t = build_general(g)
        assert is_traceless(t, tol=TOL)
        assert t.entry(1, 3, 3) == -g.alpha1 - g.beta1
        assert t.entry(2, 3, 3) == g.beta2


def test_admissible_margin():
    """margin = 3 - 4 alpha0^2 - 4 beta3^2 - 4 beta3."""
    inside = admissible(0.0, -0.5)
    assert inside.inside and abs(inside.margin - 4.0) <= TOL
    boundary = admissible(0.0, 0.5)
    assert boundary.inside and abs(boundary.margin) <= TOL
    outside = admissible(0.0, 2.0)
    assert not outside.inside
    assert abs(outside.margin - (3.0 - 16.0 - 8.0)) <= TOL


def test_polar_point_wrap_and_bounds():
    with pytest.raises(ParameterError):
        PolarPoint(0.75, 0.0)
    with pytest.raises(ParameterError):
        PolarPoint(-0.1, 0.0)
    pt = PolarPoint(0.25, 3.0 * math.pi)
    assert abs(pt.chi - math.pi) <= TOL


def test_polar_to_params_round_trip():
    rng = np.random.default_rng(5)
    for _ in range(50):
        rho = rng.uniform(0.0, 0.5)
        chi = rng.uniform(-math.pi, math.pi)
        alpha0, beta3 = polar_to_params(PolarPoint(rho, chi))
        assert abs(alpha0 - rho * math.cos(chi)) <= TOL
        assert abs(beta3 - (-0.5 + rho * math.sin(chi))) <= TOL
        # every point of the closed base disk is admissible
        assert admissible(alpha0, beta3).inside


def polar_of(alpha0, beta3):
    return math.hypot(alpha0, beta3 + 0.5), math.atan2(beta3 + 0.5, alpha0)


def test_normal_form_recovers_params_up_to_threefold_symmetry():
    """A rotated, scaled reduced tensor reduces back to the same orbit.

    The reduced form is unique only up to the tensor's three-fold
    symmetry, which shifts the disk angle chi by multiples of 2*pi/3;
    rho, alpha2, and the scale are invariants.  alpha2 stays well below
    the dome so the north pole is the unique global maximizer.
    """
    rng = np.random.default_rng(9)
    safe = [
        OctupolarParams(0.0, -0.8, 0.2),
        OctupolarParams(0.1, -0.8, 0.3),
        OctupolarParams(0.2, -0.55, 0.1),
        OctupolarParams(-0.15, -0.35, 0.2),
        OctupolarParams(0.05, -0.5, 0.45),
    ]
    for p in safe:
        t = build_tensor(p)
        scale = rng.uniform(0.5, 2.0)
        q = random_rotation(rng)
        rotated = rotate(t, q)
        scaled = type(rotated)(rotated.array * scale)
        nf = normal_form(scaled)
        assert not nf.degenerate
        rho, chi = polar_of(p.alpha0, p.beta3)
        rho_nf, chi_nf = polar_of(nf.params.alpha0, nf.params.beta3)
        assert abs(rho_nf - rho) <= NF_TOL
        shift = math.remainder(chi_nf - chi, 2.0 * math.pi / 3.0)
        assert abs(shift) <= NF_TOL
        assert abs(nf.params.alpha2 - p.alpha2) <= NF_TOL
        assert abs(nf.scale - scale) <= NF_TOL * max(1.0, scale)
