"""Tests for Z-eigenpair computation and critical-point classification."""

import math

import numpy as np
import pytest

from octupolar.errors import DegenerateConfigurationError, DomainError, ParameterError
from octupolar.params import OctupolarParams, build_tensor
from octupolar.spectra import (
    KIND_DEGENERATE,
    KIND_MAXIMUM,
    SolverConfig,
    ZEigenpair,
    count_maxima,
    projected_hessian,
    sigma_invariant,
    z_eigenpairs,
)
from octupolar.tensor3 import Rotation3, contract, rotate

ANGLE_TOL = 1e-8
LAM_TOL = 1e-9
SIGMA_TOL = 1e-8

APEX = OctupolarParams(0.0, -0.5, math.sqrt(0.5))
BASE = OctupolarParams(0.0, 0.0, 0.0)

APEX_VECTORS = [
    (0.0, 0.0, 1.0),
    (0.0, 2.0 * math.sqrt(2.0) / 3.0, -1.0 / 3.0),
    (math.sqrt(6.0) / 3.0, -math.sqrt(2.0) / 3.0, -1.0 / 3.0),
    (-math.sqrt(6.0) / 3.0, -math.sqrt(2.0) / 3.0, -1.0 / 3.0),
]

BASE_VECTORS = [
    (0.0, 0.0, 1.0),
    (0.0, math.sqrt(3.0) / 2.0, -0.5),
    (0.0, -math.sqrt(3.0) / 2.0, -0.5),
]


def angular_error(x, v):
    """Rotation angle between unit vectors, accurate near zero."""
    d = np.linalg.norm(np.asarray(x) - np.asarray(v))
    return 2.0 * math.asin(min(1.0, 0.5 * d))


def match_vectors(pairs, targets, lam):
    """Greedy-match eigenvectors with the given lambda to target vectors."""
    got = [e for e in pairs if abs(e.lam - lam) <= 1e-7]
    errors = []
    for v in targets:
        best = min(angular_error(e.x, v) for e in got)
        errors.append(best)
    return max(errors)


def test_solver_config_validation():
    with pytest.raises(ParameterError):
        SolverConfig(n_starts=0)
    with pytest.raises(ParameterError):
        SolverConfig(residual_tol=-1.0)
    cfg = SolverConfig(n_starts=500, seed=3)
    assert cfg.n_starts == 500


def test_apex_tetrahedral_maxima():
    """Four maxima at lambda = 1 along the tetrahedral directions."""
    pairs = z_eigenpairs(build_tensor(APEX))
    maxima = [e for e in pairs if e.kind == KIND_MAXIMUM and e.lam > 1e-8]
    assert len(maxima) == 4
    assert all(abs(e.lam - 1.0) <= LAM_TOL for e in maxima)
    assert match_vectors(maxima, APEX_VECTORS, 1.0) <= ANGLE_TOL
    for e in maxima:
        assert abs(e.mu2 - 2.0) <= 1e-6 and abs(e.mu3 - 2.0) <= 1e-6


def test_base_point_three_maxima_and_monkey_saddle():
    """Three maxima at lambda = 1 plus a degenerate flat direction."""
    pairs = z_eigenpairs(build_tensor(BASE))
    maxima = [e for e in pairs if e.kind == KIND_MAXIMUM and e.lam > 1e-8]
    assert len(maxima) == 3
    assert all(abs(e.lam - 1.0) <= LAM_TOL for e in maxima)
    assert match_vectors(maxima, BASE_VECTORS, 1.0) <= ANGLE_TOL
    degenerate = [e for e in pairs if e.kind == KIND_DEGENERATE]
    assert len(degenerate) >= 1
    e = degenerate[0]
    assert abs(e.lam) <= 1e-9
    assert angular_error(e.x, (1.0, 0.0, 0.0)) <= 1e-5


def test_north_pole_eigenpair_and_margin():
    """(0,0,1) is always a Z-eigenvector with lambda = 1; mu2*mu3 is the
    admissibility margin there."""
    rng = np.random.default_rng(31)
    for _ in range(10):
        rho = 0.5 * math.sqrt(rng.uniform(0.0, 1.0))
        chi = rng.uniform(-math.pi, math.pi)
        p = OctupolarParams(
            rho * math.cos(chi), -0.5 + rho * math.sin(chi), rng.uniform(0.0, 0.6)
        )
        pairs = z_eigenpairs(build_tensor(p))
        pole = min(pairs, key=lambda e: angular_error(e.x, (0.0, 0.0, 1.0)))
        assert angular_error(pole.x, (0.0, 0.0, 1.0)) <= 1e-7
        assert abs(pole.lam - 1.0) <= 1e-9
        margin = 3.0 - 4.0 * p.alpha0**2 - 4.0 * p.beta3**2 - 4.0 * p.beta3
        assert abs(pole.mu2 * pole.mu3 - margin) <= 1e-7 * max(1.0, abs(margin))


def test_residuals_are_eigen_equations():
    """Every returned pair satisfies A x^2 = lambda x."""
    t = build_tensor(OctupolarParams(0.12, -0.61, 0.21))
    for e in z_eigenpairs(t):
        resid = contract(t, np.asarray(e.x), 2) - e.lam * np.asarray(e.x)
        assert np.abs(resid).max() <= 1e-10
        assert abs(np.linalg.norm(e.x) - 1.0) <= 1e-12


def test_sigma_matches_hessian_product():
    rng = np.random.default_rng(37)
    for _ in range(5):
        rho = 0.5 * math.sqrt(rng.uniform(0.0, 1.0))
        chi = rng.uniform(-math.pi, math.pi)
        p = OctupolarParams(
            rho * math.cos(chi), -0.5 + rho * math.sin(chi), rng.uniform(0.0, 0.6)
        )
        t = build_tensor(p)
        for e in z_eigenpairs(t):
            sigma = sigma_invariant(t, np.asarray(e.x), e.lam)
            assert abs(sigma - e.mu2 * e.mu3) <= SIGMA_TOL * max(1.0, abs(sigma))


def test_projected_hessian_annihilates_eigenvector():
    t = build_tensor(OctupolarParams(0.1, -0.7, 0.3))
    for e in z_eigenpairs(t):
        h = projected_hessian(t, np.asarray(e.x), e.lam)
        assert np.abs(h - h.T).max() <= 1e-12
        assert np.abs(h @ np.asarray(e.x)).max() <= 1e-9


def test_spectrum_rotation_invariance():
    """The lambda multiset is invariant under proper rotations."""
    rng = np.random.default_rng(41)
    t = build_tensor(OctupolarParams(0.15, -0.55, 0.25))
    lams = np.array(sorted(e.lam for e in z_eigenpairs(t)))
    for _ in range(5):
        q, r = np.linalg.qr(rng.standard_normal((3, 3)))
        q = q * np.sign(np.diag(r))
        if np.linalg.det(q) < 0:
            q[:, 0] = -q[:, 0]
        rt = rotate(t, Rotation3(q))
        rlams = np.array(sorted(e.lam for e in z_eigenpairs(rt)))
        assert len(rlams) == len(lams)
        assert np.abs(rlams - lams).max() <= 1e-8


def test_count_maxima_anchors():
    assert count_maxima(APEX) == 4
    assert count_maxima(BASE) == 3
    assert count_maxima(OctupolarParams(0.0, -0.8, 0.25)) == 4
    assert count_maxima(OctupolarParams(0.0, -0.8, 0.05)) == 3
    with pytest.raises(DomainError):
        count_maxima(OctupolarParams(0.0, 2.0, 0.0))


def test_eigenpair_record_fields():
    e = ZEigenpair(lam=1.0, x=(0.0, 0.0, 1.0), mu2=2.0, mu3=1.0, kind=KIND_MAXIMUM)
    assert e.kind == "Maximum"


def test_gradient_matches_finite_differences():
    """d/dt Phi(x(t)) along tangent u equals 3 (A x^2) . u."""
    rng = np.random.default_rng(43)
    t = build_tensor(OctupolarParams(0.2, -0.6, 0.3))
    for _ in range(10):
        x = rng.standard_normal(3)
        x /= np.linalg.norm(x)
        u = rng.standard_normal(3)
        u -= (u @ x) * x
        u /= np.linalg.norm(u)
        h = 1e-6

        def phi_along(s):
            y = math.cos(s) * x + math.sin(s) * u
            return contract(t, y, 3)

        fd = (phi_along(h) - phi_along(-h)) / (2.0 * h)
        analytic = 3.0 * float(contract(t, x, 2) @ u)
        assert abs(fd - analytic) <= 1e-5 * max(1.0, abs(analytic))


def test_hessian_matches_finite_differences():
    """u^T H u = -f''(0)/3 for f(s) = Phi(cos(s) x + sin(s) u) at eigenpairs."""
    rng = np.random.default_rng(47)
    t = build_tensor(OctupolarParams(0.1, -0.6, 0.2))
    for e in z_eigenpairs(t):
        x = np.asarray(e.x)
        h = projected_hessian(t, x, e.lam)
        for _ in range(3):
            u = rng.standard_normal(3)
            u -= (u @ x) * x
            u /= np.linalg.norm(u)
            eps = 1e-4

            def phi_along(s):
                y = math.cos(s) * x + math.sin(s) * u
                return contract(t, y, 3)

            second = (phi_along(eps) - 2.0 * phi_along(0.0) + phi_along(-eps)) / eps**2
            assert abs(u @ h @ u - (-second / 3.0)) <= 1e-5 * max(1.0, abs(second))
