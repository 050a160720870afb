"""Spectral analysis on the unit sphere: eigenpairs of the cubic form.

Finds all real stationary pairs A x^2 = lambda x with ||x|| = 1 by dense
deterministic multistart, classifies the critical points of the restricted
cubic through the projected Hessian, and counts maxima.
"""

from __future__ import annotations

import dataclasses
import math

import numpy as np

from .errors import (
    DegenerateConfigurationError,
    DomainError,
    NumericalFailureError,
    ParameterError,
)
from .params import OctupolarParams, admissible, build_tensor
from .tensor3 import SymTensor3

try:  # pragma: no cover - exercised indirectly through either backend
    from . import _kernels as _impl

    HAVE_COMPILED = True
except ImportError:  # pragma: no cover
    from . import _kernels_py as _impl

    HAVE_COMPILED = False

KIND_MAXIMUM = "Maximum"
KIND_MINIMUM = "Minimum"
KIND_SADDLE = "Saddle"
KIND_DEGENERATE = "Degenerate"


@dataclasses.dataclass(frozen=True)
class SolverConfig:
    """Multistart solver settings; results depend only on these values."""

    n_starts: int = 2000
    seed: int = 0
    max_iter: int = 100
    residual_tol: float = 1e-11
    step_tol: float = 1e-14
    angle_tol: float = 1e-6
    degenerate_tol: float = 1e-7
    positive_tol: float = 1e-8

    def __post_init__(self) -> None:
        if self.n_starts < 12:
            raise ParameterError(f"n_starts must be at least 12, got {self.n_starts}")
        if self.max_iter < 1:
            raise ParameterError(f"max_iter must be positive, got {self.max_iter}")
        for name in ("residual_tol", "step_tol", "angle_tol", "degenerate_tol", "positive_tol"):
            value = getattr(self, name)
            if not (value > 0.0 and math.isfinite(value)):
                raise ParameterError(f"{name} must be a positive finite real, got {value}")


@dataclasses.dataclass(frozen=True)
class ZEigenpair:
    """Stationary pair (lambda, x) with projected-Hessian eigenvalues.

    mu2 >= mu3 are the two eigenvalues of the projected Hessian transverse
    to x (the third, along x, vanishes at stationary pairs).
    """

    lam: float
    x: np.ndarray
    mu2: float
    mu3: float
    kind: str


def _fibonacci_sphere(n: int) -> np.ndarray:
    """n nearly uniform unit vectors (offset Fibonacci lattice)."""
    i = np.arange(n, dtype=float)
    z = 1.0 - (2.0 * i + 1.0) / n
    phi = i * (math.pi * (3.0 - math.sqrt(5.0)))
    r = np.sqrt(np.maximum(0.0, 1.0 - z * z))
    return np.column_stack((r * np.cos(phi), r * np.sin(phi), z))


def _start_points(cfg: SolverConfig) -> np.ndarray:
    pts = _fibonacci_sphere(cfg.n_starts)
    # A seeded rotation decorrelates the lattice from the coordinate axes
    # (many interesting tensors have axis-aligned eigenvectors).
    rng = np.random.default_rng(cfg.seed)
    q, r = np.linalg.qr(rng.standard_normal((3, 3)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0.0:
        q[:, 0] = -q[:, 0]
    return pts @ q.T


def projected_hessian(t: SymTensor3, x: np.ndarray, lam: float) -> np.ndarray:
    """Projected Hessian lam (I + x x^T) - 2 (A.x) at a unit direction.

    At a stationary pair the matrix kills x itself; its two transverse
    eigenvalues classify the critical point.
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (3,):
        raise ParameterError(f"x must be a 3-vector, got shape {x.shape}")
    if abs(np.linalg.norm(x) - 1.0) > 1e-8:
        raise ParameterError("x must be a unit vector")
    return lam * (np.eye(3) + np.outer(x, x)) - 2.0 * (t.array @ x)


def _transverse_mus(t: SymTensor3, x: np.ndarray, lam: float) -> tuple[float, float]:
    """Eigenvalues of the projected Hessian transverse to x, mu2 >= mu3."""
    h = projected_hessian(t, x, lam)
    vals, vecs = np.linalg.eigh(h)
    along = np.abs(vecs.T @ x).argmax()
    mus = sorted((vals[i] for i in range(3) if i != along), reverse=True)
    return float(mus[0]), float(mus[1])


def _classify(lam: float, mu2: float, mu3: float, tol: float) -> str:
    gate = tol * max(1.0, abs(lam))
    if min(abs(mu2), abs(mu3)) <= gate:
        return KIND_DEGENERATE
    if mu2 > 0.0 and mu3 > 0.0:
        return KIND_MAXIMUM
    if mu2 < 0.0 and mu3 < 0.0:
        return KIND_MINIMUM
    return KIND_SADDLE


def z_eigenpairs(t: SymTensor3, cfg: SolverConfig | None = None) -> list[ZEigenpair]:
    """All stationary pairs A x^2 = lambda x, ||x|| = 1, from multistart.

    Pairs come in antipodal images (lambda, x) / (-lambda, -x); the
    lambda >= 0 representative is returned, sorted by lambda descending.
    Every entry satisfies ||A x^2 - lambda x|| <= cfg.residual_tol scaled
    by the tensor's largest entry.
    """
    if not isinstance(t, SymTensor3):
        raise ParameterError("t must be a SymTensor3")
    if cfg is None:
        cfg = SolverConfig()
    scale = t.norm_max()
    if scale == 0.0:
        raise DegenerateConfigurationError(
            "zero tensor: every direction is stationary with lambda = 0"
        )
    a = np.ascontiguousarray(t.array / scale)
    # Refine to machine precision regardless of the acceptance tolerance:
    # stopping at cfg.residual_tol would freeze starts on a ring of
    # near-solutions around degenerate critical points, defeating dedup.
    xs, lams, resids = _impl.refine(
        a, _start_points(cfg), cfg.max_iter, min(cfg.residual_tol, 1e-15), cfg.step_tol
    )
    ok = resids <= cfg.residual_tol
    if not ok.any():
        raise NumericalFailureError("no start converged; solver configuration unusable")
    xs, lams = xs[ok], lams[ok]

    # Antipodal representative: lambda >= 0; for lambda ~ 0 orient the
    # largest component positive so x and -x collapse together.
    flip = lams < 0.0
    xs[flip] = -xs[flip]
    lams[flip] = -lams[flip]
    near0 = lams <= cfg.positive_tol
    if near0.any():
        sub = xs[near0]
        lead = np.take_along_axis(
            sub, np.abs(sub).argmax(axis=1)[:, None], axis=1
        ).ravel()
        sub[lead < 0.0] = -sub[lead < 0.0]
        xs[near0] = sub

    order = np.argsort(-lams, kind="stable")
    xs, lams = xs[order], lams[order]
    cos_gate = math.cos(cfg.angle_tol)
    reps: list[np.ndarray] = []
    for xi, li in zip(xs, lams):
        found = False
        for xr in reps:
            if float(xi @ xr) >= cos_gate:
                found = True
                break
        if not found:
            reps.append(xi)

    pairs = []
    arr = t.array
    for x in reps:
        x = x / np.linalg.norm(x)
        g = (arr @ x) @ x
        lam = float(x @ g)
        if lam < -scale * cfg.positive_tol:  # rounding across zero after rescaling
            lam, x, g = -lam, -x, -g
        if np.linalg.norm(g - lam * x) > cfg.residual_tol * max(1.0, scale):
            continue
        mu2, mu3 = _transverse_mus(t, x, lam)
        kind = _classify(lam, mu2, mu3, cfg.degenerate_tol)
        pairs.append(ZEigenpair(lam, x, mu2, mu3, kind))
    if not pairs:
        raise NumericalFailureError("all converged starts failed the residual bound")
    pairs.sort(key=lambda e: (-e.lam, -e.x[0], -e.x[1], -e.x[2]))
    return pairs


def sigma_invariant(t: SymTensor3, x: np.ndarray, lam: float) -> float:
    """Sum of 2x2 principal minors of the projected Hessian, closed form.

    Valid for the reduced three-parameter tensor; equals mu2 * mu3 at any
    stationary pair.
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (3,):
        raise ParameterError(f"x must be a 3-vector, got shape {x.shape}")
    if abs(np.linalg.norm(x) - 1.0) > 1e-8:
        raise ParameterError("x must be a unit vector")
    a0 = t.entry(1, 2, 3)
    b3 = t.entry(1, 1, 3)
    a2 = t.entry(2, 2, 2)
    expect = {
        (1, 1, 1): 0.0,
        (1, 1, 2): -a2,
        (1, 2, 2): 0.0,
        (1, 3, 3): 0.0,
        (2, 2, 3): -1.0 - b3,
        (2, 3, 3): 0.0,
        (3, 3, 3): 1.0,
    }
    for idx, val in expect.items():
        if abs(t.entry(*idx) - val) > 1e-8:
            raise ParameterError(
                "tensor is not in the reduced three-parameter form"
            )
    x1, x2, x3 = x
    return 7.0 * lam * lam - 4.0 * (
        (a0 * a0 + a2 * a2 + b3 * b3) * x1 * x1
        + (a0 * a0 + a2 * a2 + (b3 + 1.0) ** 2) * x2 * x2
        + (a0 * a0 + b3 * b3 + b3 + 1.0) * x3 * x3
        - 2.0 * a0 * x1 * x2
        - 2.0 * a0 * a2 * x1 * x3
        - a2 * (2.0 * b3 + 1.0) * x2 * x3
    )


def count_maxima(p: OctupolarParams, cfg: SolverConfig | None = None) -> int:
    """Number of local maxima of the cubic form with positive value.

    Antipodal minima are not counted.  A degenerate classification among
    the positive pairs means the parameters sit on or near a transition
    surface, where no count is reliable.
    """
    if not admissible(p.alpha0, p.beta3).inside:
        raise DomainError(
            f"parameters ({p.alpha0}, {p.beta3}, {p.alpha2}) are not admissible"
        )
    if cfg is None:
        cfg = SolverConfig()
    pairs = z_eigenpairs(build_tensor(p), cfg)
    positive = [e for e in pairs if e.lam > cfg.positive_tol]
    if any(e.kind == KIND_DEGENERATE for e in positive):
        raise DegenerateConfigurationError(
            "degenerate critical point with positive value; count is unreliable"
        )
    return sum(1 for e in positive if e.kind == KIND_MAXIMUM)
