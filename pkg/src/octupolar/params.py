"""Octupolar parameter families and the reduced normal form.

A symmetric traceless third-order tensor has 7 independent components;
after rotating a unit maximizer of the cubic form to the north pole and
killing the ``a111`` component by an in-plane rotation, three parameters
``(alpha0, beta3, alpha2)`` remain, with ``a333`` normalized to 1 and
``alpha2 >= 0``.  This module builds tensors from both parameterizations,
tests admissibility of the generalized parameters, and computes the
reduction (rotation, scale and parameters) for an arbitrary tensor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NumericalFailureError, ParameterError
from .tensor3 import Rotation3, SymTensor3, build_symmetric, is_traceless, rotate

__all__ = [
    "OctupolarParams",
    "GeneralParams",
    "PolarPoint",
    "AdmissibleResult",
    "NormalForm",
    "build_tensor",
    "build_general",
    "admissible",
    "polar_to_params",
    "normal_form",
]


@dataclass(frozen=True)
class OctupolarParams:
    """Reduced parameters ``(alpha0, beta3, alpha2)`` with ``alpha2 >= 0``."""

    alpha0: float
    beta3: float
    alpha2: float

    def __post_init__(self):
        for name in ("alpha0", "beta3", "alpha2"):
            if not math.isfinite(getattr(self, name)):
                raise ParameterError(f"{name} must be finite")
        if self.alpha2 < 0:
            raise ParameterError(f"alpha2 must be nonnegative, got {self.alpha2}")

    def astuple(self) -> tuple[float, float, float]:
        return (self.alpha0, self.beta3, self.alpha2)


@dataclass(frozen=True)
class GeneralParams:
    """Seven-parameter traceless family before any normalization."""

    alpha0: float = 0.0
    alpha1: float = 0.0
    alpha2: float = 0.0
    alpha3: float = 0.0
    beta1: float = 0.0
    beta2: float = 0.0
    beta3: float = 0.0

    def __post_init__(self):
        for name in ("alpha0", "alpha1", "alpha2", "alpha3", "beta1", "beta2", "beta3"):
            if not math.isfinite(getattr(self, name)):
                raise ParameterError(f"{name} must be finite")


@dataclass(frozen=True)
class PolarPoint:
    """Polar coordinates on the admissible parameter disk.

    ``rho`` is the distance from the disk center ``(alpha0, beta3) =
    (0, -1/2)`` and must lie in ``[0, 1/2]``; ``chi`` is the polar angle,
    normalized into ``(-pi, pi]``.
    """

    rho: float
    chi: float

    def __post_init__(self):
        if not (math.isfinite(self.rho) and math.isfinite(self.chi)):
            raise ParameterError("rho and chi must be finite")
        if not 0.0 <= self.rho <= 0.5:
            raise ParameterError(f"rho must lie in [0, 1/2], got {self.rho}")
        chi = math.remainder(self.chi, 2.0 * math.pi)
        if chi <= -math.pi:
            chi = math.pi
        object.__setattr__(self, "chi", chi)


@dataclass(frozen=True)
class AdmissibleResult:
    inside: bool
    margin: float


@dataclass(frozen=True)
class NormalForm:
    """Outcome of the reduction to the three-parameter normal form."""

    q: Rotation3
    scale: float
    params: OctupolarParams
    degenerate: bool = False
    boundary: bool = False


def build_tensor(p: OctupolarParams) -> SymTensor3:
    """Reduced octupolar tensor with ``a333 = 1``."""
    a0, b3, a2 = p.alpha0, p.beta3, p.alpha2
    return build_general(
        GeneralParams(alpha0=a0, alpha2=a2, alpha3=1.0, beta3=b3)
    )


def build_general(g: GeneralParams) -> SymTensor3:
    """Traceless symmetric tensor of the seven-parameter family."""
    entries = {
        (1, 1, 1): g.alpha1,
        (1, 1, 2): -g.alpha2 - g.beta2,
        (1, 1, 3): g.beta3,
        (1, 2, 2): g.beta1,
        (1, 2, 3): g.alpha0,
        (1, 3, 3): -g.alpha1 - g.beta1,
        (2, 2, 2): g.alpha2,
        (2, 2, 3): -g.alpha3 - g.beta3,
        (2, 3, 3): g.beta2,
        (3, 3, 3): g.alpha3,
    }
    return build_symmetric(entries)


def admissible(alpha0: float, beta3: float) -> AdmissibleResult:
    """Whether ``(alpha0, beta3)`` admits the normal form with a333 = 1.

    The margin ``3 - 4 alpha0^2 - 4 beta3^2 - 4 beta3`` is nonnegative
    exactly on the disk ``alpha0^2 + (beta3 + 1/2)^2 <= 1``.
    """
    if not (math.isfinite(alpha0) and math.isfinite(beta3)):
        raise ParameterError("alpha0 and beta3 must be finite")
    margin = 3.0 - 4.0 * alpha0**2 - 4.0 * beta3**2 - 4.0 * beta3
    return AdmissibleResult(inside=margin >= 0.0, margin=margin)


def polar_to_params(pt: PolarPoint) -> tuple[float, float]:
    """Map disk polar coordinates to ``(alpha0, beta3)``.

    The disk of interest is centered at ``(0, -1/2)`` so that
    ``alpha0 = rho cos chi`` and ``beta3 = -1/2 + rho sin chi``.
    """
    return (pt.rho * math.cos(pt.chi), -0.5 + pt.rho * math.sin(pt.chi))


def _frame_with_pole(x: np.ndarray) -> np.ndarray:
    """Right-handed orthonormal rows (u, v, x): maps x to the north pole."""
    e = np.zeros(3)
    e[int(np.argmin(np.abs(x)))] = 1.0
    u = e - (e @ x) * x
    u /= np.linalg.norm(u)
    v = np.cross(x, u)
    return np.vstack([u, v, x])


def _rz(theta: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def normal_form(t: SymTensor3, tol: float = 1e-9) -> NormalForm:
    """Rotate and scale ``t`` into the reduced three-parameter form.

    Returns a rotation ``q`` and positive ``scale`` such that
    ``rotate(t, q)`` equals ``scale * build_tensor(params)`` entrywise
    within ``tol * scale``.  The zero tensor (all entries below ``tol``)
    yields the degenerate result with ``scale = 0``.

    The maximizer sent to the north pole is the one with the largest
    cubic-form value; among numerically tied maximizers the one with the
    lexicographically largest coordinate vector is chosen, and the
    in-plane angle is the smallest ``theta >= 0`` that kills ``a111``
    while keeping ``a222 >= 0``.
    """
    from .spectra import SolverConfig, z_eigenpairs

    scale_raw = t.norm_max()
    if scale_raw < tol:
        return NormalForm(
            q=Rotation3(np.eye(3)),
            scale=0.0,
            params=OctupolarParams(0.0, 0.0, 0.0),
            degenerate=True,
        )
    if not is_traceless(t, tol=max(tol, 1e-10) * max(1.0, scale_raw)):
        raise ParameterError("tensor is not traceless within tolerance")

    pairs = z_eigenpairs(t, SolverConfig())
    lam_max = max(p.lam for p in pairs)
    if lam_max <= 0.0:
        raise NumericalFailureError("no positive critical value found")
    tied = [p for p in pairs if p.lam >= lam_max - 1e-9 * max(1.0, lam_max)]
    x_star = max((tuple(p.x) for p in tied))
    x_star = np.array(x_star)

    q1 = _frame_with_pole(x_star)
    t1 = rotate(t, q1)
    scale = t1.entry(3, 3, 3)
    if scale <= 0.0:
        raise NumericalFailureError("maximizer produced nonpositive a333")

    # Sample the in-plane angle; a111(theta) is odd under theta -> theta+pi
    # so sign changes bracket every zero.
    n_grid = 1440
    thetas = np.linspace(0.0, 2.0 * math.pi, n_grid, endpoint=False)

    def a111(theta: float) -> float:
        return rotate(t1, _rz(theta)).entry(1, 1, 1)

    def a222(theta: float) -> float:
        return rotate(t1, _rz(theta)).entry(2, 2, 2)

    vals = np.array([a111(th) for th in thetas])
    candidates = []
    if np.abs(vals).max() < 1e-13 * scale:
        candidates = list(thetas)  # a111 vanishes identically
    else:
        from scipy.optimize import brentq

        for i in range(n_grid):
            va, vb = vals[i], vals[(i + 1) % n_grid]
            ta, tb = thetas[i], thetas[i] + (thetas[1] - thetas[0])
            if va == 0.0:
                candidates.append(ta)
            elif va * vb < 0.0:
                candidates.append(brentq(a111, ta, tb, xtol=4e-16, rtol=8.9e-16))
    candidates = sorted(candidates)
    theta_star = None
    for th in candidates:
        if a222(th) >= -1e-12 * scale:
            theta_star = th
            break
    if theta_star is None:
        raise NumericalFailureError("no in-plane angle with a222 >= 0 found")

    q = Rotation3(_rz(theta_star) @ q1, tol=1e-9)
    t2 = rotate(t, q)
    p = OctupolarParams(
        alpha0=t2.entry(1, 2, 3) / scale,
        beta3=t2.entry(1, 1, 3) / scale,
        alpha2=max(0.0, t2.entry(2, 2, 2) / scale),
    )
    check = rotate(t, q).array / scale - build_general(
        GeneralParams(alpha0=p.alpha0, alpha2=p.alpha2, alpha3=1.0, beta3=p.beta3)
    ).array
    if np.abs(check).max() > tol:
        raise NumericalFailureError(
            f"normal form verification failed: defect {np.abs(check).max():.3e} > {tol:.3e}"
        )
    marg = admissible(p.alpha0, p.beta3).margin
    return NormalForm(q=q, scale=scale, params=p, boundary=abs(marg) <= 1e-9)
