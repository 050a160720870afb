"""Macaulay resultants and the E-characteristic polynomial.

For ``n`` homogeneous quadratics in ``n`` variables the Macaulay matrix
``D`` is indexed by the monomials of total degree ``d = n + 1``.  Each
monomial ``x^v`` is assigned to the first variable ``x_i`` whose square
divides it, and contributes the row ``x^v / x_i^2 * F_i``.  The classical
quotient ``det D / det D'`` -- where ``D'`` keeps only the rows and
columns of monomials divisible by at least two distinct squares -- equals
the resultant of the system.

Two systems matter here: the gradient system ``A x^2 = 0`` of a reduced
octupolar tensor (n = 3, a 15x15 matrix with a 3x3 minor), and its
homogenization with the sphere constraint and a spectral parameter
``lambda`` (n = 4, 56x56 with a 24x24 minor), whose resultant as a
function of ``lambda`` is the E-characteristic polynomial: an even
polynomial of degree 14 divisible by ``lambda^2 - 1``.  The latter is
recovered by sampling the determinant quotient at fixed ``lambda`` values
and fitting.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import (
    DegenerateConfigurationError,
    NumericalFailureError,
    ParameterError,
)
from .params import OctupolarParams

__all__ = [
    "HomQuadratic",
    "MacaulaySystem",
    "UnivariatePoly",
    "build_macaulay",
    "gradient_quadratics",
    "echar_quadratics",
    "resultant_via_macaulay",
    "resultant_closed_form",
    "echar_poly",
    "echar_coeff_top",
    "poly_real_roots",
]

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class HomQuadratic:
    """Homogeneous quadratic in ``n`` variables as an exponent-tuple map."""

    n: int
    coeffs: dict[Monomial, float] = field(repr=False)

    def __post_init__(self):
        if self.n not in (3, 4):
            raise ParameterError(f"n must be 3 or 4, got {self.n}")
        clean = {}
        for exp, c in self.coeffs.items():
            if len(exp) != self.n or any(e < 0 for e in exp) or sum(exp) != 2:
                raise ParameterError(f"monomial {exp} is not degree-2 in {self.n} variables")
            if not math.isfinite(c):
                raise ParameterError(f"coefficient of {exp} is not finite")
            if c != 0.0:
                clean[tuple(exp)] = float(c)
        object.__setattr__(self, "coeffs", clean)

    def __call__(self, x) -> float:
        x = np.asarray(x, dtype=float)
        return float(
            sum(c * np.prod(x**np.array(exp)) for exp, c in self.coeffs.items())
        )


@lru_cache(maxsize=None)
def _monomial_layout(n: int):
    """Ordered degree-(n+1) monomials, their class, and the reduced mask.

    Monomials are grouped by the first variable whose square divides them
    and listed lexicographically descending inside each group; a monomial
    is *reduced* when exactly one variable's square divides it.
    """
    d = n + 1
    all_exps = [
        exp
        for exp in itertools.product(range(d + 1), repeat=n)
        if sum(exp) == d
    ]

    def owner(exp):
        for i, e in enumerate(exp):
            if e >= 2:
                return i
        raise AssertionError("degree n+1 monomial must contain a square")

    ordered = sorted(all_exps, key=lambda e: (owner(e), tuple(-v for v in e)))
    index = {exp: i for i, exp in enumerate(ordered)}
    reduced = np.array(
        [sum(1 for e in exp if e >= 2) == 1 for exp in ordered], dtype=bool
    )
    owners = [owner(exp) for exp in ordered]
    return ordered, index, owners, reduced


@dataclass(frozen=True)
class MacaulaySystem:
    """Macaulay matrix of ``n`` quadratics together with its minor data."""

    n: int
    matrix: np.ndarray = field(repr=False)
    monomials: tuple[Monomial, ...] = field(repr=False)
    reduced_mask: np.ndarray = field(repr=False)

    @property
    def degree(self) -> int:
        return self.n + 1

    @property
    def size(self) -> int:
        return len(self.monomials)

    def dprime(self) -> np.ndarray:
        """Submatrix on the non-reduced monomials (extraneous factor)."""
        keep = ~self.reduced_mask
        return self.matrix[np.ix_(keep, keep)]

    def det_ratio(self, rcond_min: float = 1e-12) -> float:
        """``det D / det D'``; the resultant of the system.

        Raises :class:`DegenerateConfigurationError` when ``D'`` is
        singular to working precision, in which case the construction
        carries no information.
        """
        dp = self.dprime()
        sv = np.linalg.svd(dp, compute_uv=False)
        if sv[0] == 0.0 or sv[-1] / sv[0] < rcond_min:
            raise DegenerateConfigurationError(
                "extraneous minor is numerically singular"
            )
        sign_d, logdet_d = np.linalg.slogdet(self.matrix)
        sign_p, logdet_p = np.linalg.slogdet(dp)
        if sign_d == 0.0:
            return 0.0
        return float(sign_d * sign_p * np.exp(logdet_d - logdet_p))


def build_macaulay(quads) -> MacaulaySystem:
    """Assemble the Macaulay matrix of ``n`` quadratics in ``n`` variables.

    ``quads[i]`` is the equation paired with variable ``i``: rows owned by
    ``x_i^2`` are ``x^v / x_i^2 * quads[i]``.
    """
    quads = tuple(quads)
    n = len(quads)
    if n not in (3, 4):
        raise ParameterError(f"expected 3 or 4 quadratics, got {n}")
    for q in quads:
        if not isinstance(q, HomQuadratic):
            raise ParameterError("system entries must be HomQuadratic")
        if q.n != n:
            raise ParameterError(
                f"quadratic in {q.n} variables cannot join an n={n} system"
            )
    ordered, index, owners, reduced = _monomial_layout(n)
    size = len(ordered)
    mat = np.zeros((size, size))
    for row, exp in enumerate(ordered):
        i = owners[row]
        base = list(exp)
        base[i] -= 2
        for term, c in quads[i].coeffs.items():
            col = index[tuple(b + t for b, t in zip(base, term))]
            mat[row, col] += c
    return MacaulaySystem(
        n=n, matrix=mat, monomials=tuple(ordered), reduced_mask=reduced
    )


def gradient_quadratics(p: OctupolarParams) -> tuple[HomQuadratic, ...]:
    """The system ``A x^2 = 0`` arranged so variable ``x_i`` owns the
    equation whose quadratic carries the matching square terms."""
    a0, b3, a2 = p.alpha0, p.beta3, p.alpha2
    f1 = HomQuadratic(3, {
        (2, 0, 0): -a2,
        (0, 2, 0): a2,
        (1, 0, 1): 2.0 * a0,
        (0, 1, 1): -2.0 * (1.0 + b3),
    })
    f2 = HomQuadratic(3, {
        (2, 0, 0): b3,
        (0, 2, 0): -(1.0 + b3),
        (0, 0, 2): 1.0,
        (1, 1, 0): 2.0 * a0,
    })
    f3 = HomQuadratic(3, {
        (1, 1, 0): -2.0 * a2,
        (1, 0, 1): 2.0 * b3,
        (0, 1, 1): 2.0 * a0,
    })
    return (f1, f2, f3)


def echar_quadratics(p: OctupolarParams, lam: float) -> tuple[HomQuadratic, ...]:
    """Homogenized spectral system in variables ``(x0, x1, x2, x3)``.

    ``x0`` owns the sphere equation.  The three gradient components are
    assigned to ``x1``, ``x2``, ``x3`` so that every owner's square
    actually occurs in its equation where possible; the natural
    "same-index" assignment leaves the extraneous minor identically
    singular, while this one keeps it well conditioned.
    """
    a0, b3, a2 = p.alpha0, p.beta3, p.alpha2
    sphere = HomQuadratic(4, {
        (2, 0, 0, 0): -1.0,
        (0, 2, 0, 0): 1.0,
        (0, 0, 2, 0): 1.0,
        (0, 0, 0, 2): 1.0,
    })
    # (T x^2)_3 - lam x0 x3, owned by x1
    q1 = HomQuadratic(4, {
        (0, 2, 0, 0): b3,
        (0, 0, 2, 0): -(1.0 + b3),
        (0, 0, 0, 2): 1.0,
        (0, 1, 1, 0): 2.0 * a0,
        (1, 0, 0, 1): -lam,
    })
    # (T x^2)_2 - lam x0 x2, owned by x2
    q2 = HomQuadratic(4, {
        (0, 2, 0, 0): -a2,
        (0, 0, 2, 0): a2,
        (0, 1, 0, 1): 2.0 * a0,
        (0, 0, 1, 1): -2.0 * (1.0 + b3),
        (1, 0, 1, 0): -lam,
    })
    # (T x^2)_1 - lam x0 x1, owned by x3
    q3 = HomQuadratic(4, {
        (0, 1, 1, 0): -2.0 * a2,
        (0, 1, 0, 1): 2.0 * b3,
        (0, 0, 1, 1): 2.0 * a0,
        (1, 1, 0, 0): -lam,
    })
    return (sphere, q1, q2, q3)


def resultant_via_macaulay(p: OctupolarParams, rcond_min: float = 1e-12) -> float:
    """Resultant of ``A x^2`` as the Macaulay determinant quotient."""
    return build_macaulay(gradient_quadratics(p)).det_ratio(rcond_min=rcond_min)


def resultant_closed_form(p: OctupolarParams) -> float:
    """Closed-form resultant of the gradient system ``A x^2 = 0``."""
    a0, b3, a2 = p.alpha0, p.beta3, p.alpha2
    a0_2, a2_2, b = a0 * a0, a2 * a2, b3
    inner = (
        48.0 * a0_2**4 * b
        + 4.0 * a0_2**3 * (a2_2 + b * (32.0 * b**2 + 24.0 * b - 9.0))
        + 3.0 * a0_2**2 * (
            a2_2 * (52.0 * b**2 + 28.0 * b - 1.0)
            + 4.0 * b**2 * (8.0 * b**3 + 8.0 * b**2 - 9.0 * b - 9.0)
        )
        + 6.0 * a0_2 * (
            a2_2**2 * (4.0 * b + 1.0)
            - a2_2 * b * (14.0 * b**3 + 36.0 * b**2 + 35.0 * b + 10.0)
            - 2.0 * b**3 * (b + 1.0) ** 2 * (8.0 * b + 9.0)
        )
        + (a2_2 - 4.0 * (b + 1.0) ** 3) * (a2_2 - b**2 * (2.0 * b + 3.0)) ** 2
    )
    return 16.0 * a2_2 * inner


def echar_coeff_top(p: OctupolarParams) -> float:
    """Closed form for the top (degree-12) coefficient of
    ``phi(lambda) / (lambda^2 - 1)``, equal to the leading coefficient of
    the E-characteristic polynomial itself."""
    a0, b, a2 = p.alpha0, p.beta3, p.alpha2
    a0_2, t = a0 * a0, a2 * a2
    return (
        82944.0 * a0_2**5
        - 11520.0 * a0_2**4 * (t - 36.0 * b**2 - 36.0 * b + 1.0)
        - 320.0 * a0_2**3 * (
            2.0 * t * (72.0 * b**2 - 1053.0 * b - 577.0)
            + 73.0 * t**2
            - 2592.0 * b**4 - 5184.0 * b**3 - 2448.0 * b**2 + 144.0 * b + 73.0
        )
        - 240.0 * a0_2**2 * (
            t**3
            - t**2 * (1583.0 * b**2 + 1208.0 * b + 922.0)
            + t * (288.0 * b**4 - 4424.0 * b**3 - 7328.0 * b**2 - 116.0 * b + 1203.0)
            - (2.0 * b + 1.0) ** 2
            * (864.0 * b**4 + 1728.0 * b**3 + 576.0 * b**2 - 288.0 * b - 1.0)
        )
        + 60.0 * a0_2 * (
            32.0 * t**4
            + t**3 * (-8.0 * b**2 + 1992.0 * b + 678.0)
            - t**2 * (6168.0 * b**4 + 13336.0 * b**3 + 5042.0 * b**2 - 4376.0 * b + 1083.0)
            - 2.0 * t * (
                384.0 * b**6 - 848.0 * b**5 - 4080.0 * b**4 - 80.0 * b**3
                + 4580.0 * b**2 + 437.0 * b - 714.0
            )
            + 8.0 * (2.0 * b + 1.0) ** 4
            * (54.0 * b**4 + 108.0 * b**3 + 21.0 * b**2 - 33.0 * b + 4.0)
        )
        + (t + (3.0 * b + 4.0) ** 2)
        * (
            16.0 * t**2
            + t * (-12.0 * b**2 - 132.0 * b + 37.0)
            + 4.0 * (2.0 * b + 1.0) ** 3 * (3.0 * b - 1.0)
        ) ** 2
    )


@dataclass(frozen=True)
class UnivariatePoly:
    """Real polynomial stored by ascending coefficients."""

    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coeffs, dtype=float))
        if c.ndim != 1 or c.size == 0:
            raise ParameterError("coefficients must form a nonempty 1-d array")
        if not np.isfinite(c).all():
            raise ParameterError("coefficients must be finite")
        nz = np.nonzero(c)[0]
        c = c[: nz[-1] + 1] if nz.size else c[:1]
        c = c.copy()
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        return npoly.polyval(x, self.coeffs)

    def deriv(self, order: int = 1) -> "UnivariatePoly":
        return UnivariatePoly(npoly.polyder(self.coeffs, order))

    def scaled(self, factor: float) -> "UnivariatePoly":
        return UnivariatePoly(self.coeffs * factor)

    def __repr__(self):
        return f"UnivariatePoly(degree={self.degree})"


def _chebyshev_nodes(lo: float, hi: float, n: int) -> np.ndarray:
    k = np.arange(n)
    return 0.5 * (lo + hi) + 0.5 * (hi - lo) * np.cos(np.pi * (2 * k + 1) / (2 * n))


def _quadratic_matrix(q: HomQuadratic) -> np.ndarray:
    m = np.zeros((q.n, q.n))
    for exp, c in q.coeffs.items():
        idx = [i for i, e in enumerate(exp) for _ in range(e)]
        i, j = idx
        if i == j:
            m[i, i] = c
        else:
            m[i, j] = m[j, i] = 0.5 * c
    return m


def _rotate_quadratic(q: HomQuadratic, b: np.ndarray) -> HomQuadratic:
    """The quadratic ``x -> q(B x)`` (coefficient matrix ``B^T M B``)."""
    m = b.T @ _quadratic_matrix(q) @ b
    coeffs: dict[Monomial, float] = {}
    n = q.n
    for i in range(n):
        for j in range(i, n):
            exp = [0] * n
            exp[i] += 1
            exp[j] += 1
            c = m[i, i] if i == j else 2.0 * m[i, j]
            if c != 0.0:
                coeffs[tuple(exp)] = c
    return HomQuadratic(n, coeffs)


def _special_rotation(n: int, seed: int) -> np.ndarray:
    """Deterministic proper rotation used to regularize sparse systems."""
    rng = np.random.default_rng(seed)
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    q = q @ np.diag(np.sign(np.diag(r)))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


def _echar_matrix_pair(p: OctupolarParams, rotation: np.ndarray | None):
    """Macaulay matrix of the spectral system split as ``D0 + lam * D1``.

    The optional variable rotation leaves the resultant unchanged (the
    transformation factor is a power of ``det B = 1``) but makes the
    extraneous minor generically nonsingular even when the raw system is
    too sparse, as happens at parameter points with many zero entries.
    """
    q0 = echar_quadratics(p, 0.0)
    q1 = echar_quadratics(p, 1.0)
    if rotation is not None:
        q0 = tuple(_rotate_quadratic(q, rotation) for q in q0)
        q1 = tuple(_rotate_quadratic(q, rotation) for q in q1)
    d0 = build_macaulay(q0).matrix
    sys1 = build_macaulay(q1)
    d1 = sys1.matrix - d0
    return d0, d1, ~sys1.reduced_mask


def echar_poly(
    p: OctupolarParams,
    rcond_min: float = 1e-9,
    fit_tol: float = 1e-6,
    parity_tol: float = 1e-6,
) -> UnivariatePoly:
    """E-characteristic polynomial via sampled determinant quotients.

    The quotient ``det D(lambda) / det D'(lambda)`` of the homogenized
    spectral system is evaluated at a deliberately sign-asymmetric set of
    nodes and fitted by a degree-14 polynomial.  Odd coefficients must
    vanish to ``parity_tol`` (relative), the even-only refit must
    reproduce the samples to ``fit_tol`` (relative), and the overall sign
    is normalized so the constant term is nonnegative; if the constant
    term vanishes, the leading coefficient is matched to the sign of its
    closed form, :func:`echar_coeff_top`.
    """
    # 41 primary nodes plus reserves, all avoiding lambda = 0.
    nodes = list(_chebyshev_nodes(0.08, 2.1, 24)) + list(
        _chebyshev_nodes(-2.2, -0.06, 17)
    )
    nodes += list(_chebyshev_nodes(2.12, 2.5, 8)) + list(
        _chebyshev_nodes(-2.5, -2.22, 8)
    )

    def quotient(d0m, d1m, sub, lam):
        """(det D / det D', minor rcond) at lam, or None when singular."""
        dmat = d0m + lam * d1m
        dp = dmat[sub]
        sv = np.linalg.svd(dp, compute_uv=False)
        if sv[0] == 0.0 or sv[-1] / sv[0] < rcond_min:
            return None
        sign_d, logdet_d = np.linalg.slogdet(dmat)
        sign_p, logdet_p = np.linalg.slogdet(dp)
        val = 0.0 if sign_d == 0.0 else sign_d * sign_p * math.exp(logdet_d - logdet_p)
        return val, sv[-1] / sv[0]

    frames = [
        _echar_matrix_pair(p, rot)
        for rot in (None, _special_rotation(4, 20), _special_rotation(4, 21))
    ]
    frames = [(d0, d1, np.ix_(keep, keep)) for d0, d1, keep in frames]

    # Samples from different variable frames may disagree by a global
    # sign, so a single frame must serve the whole fit.  Frames are
    # ranked by the conditioning of their minors: a frame whose minor is
    # barely nonsingular fills the nodes with noisy quotients, so prefer
    # the frame with the best median rcond among those with enough
    # samples.
    candidates = []
    for frame in frames:
        d0, d1, sub = frame
        lams, vals, rcs = [], [], []
        for lam in nodes:
            if len(lams) >= 41:
                break
            got = quotient(d0, d1, sub, lam)
            if got is not None:
                lams.append(lam)
                vals.append(got[0])
                rcs.append(got[1])
        quality = float(np.median(rcs)) if rcs else 0.0
        candidates.append((frame, lams, vals, quality))
        if len(lams) >= 41 and quality >= 1e-6:
            break
    filled = [c for c in candidates if len(c[1]) >= 36]
    pool = filled if filled else candidates
    fit_frame, lams, vals, _ = max(pool, key=lambda c: (len(c[1]) >= 36, c[3], len(c[1])))
    if len(lams) < 30:
        raise NumericalFailureError(
            f"only {len(lams)} usable spectral samples; system too degenerate"
        )
    lams = np.array(lams)
    vals = np.array(vals)

    # The sampled values span ~14 orders of magnitude across the node
    # range, so fit with per-sample relative weights.
    s = float(np.abs(lams).max())
    w = 1.0 / np.maximum(np.abs(vals), 1e-6 * np.abs(vals).max() + 1e-300)

    # Full degree-14 fit first, to test parity honestly.
    design = np.vander(lams / s, 15, increasing=True)
    full, *_ = np.linalg.lstsq(design * w[:, None], vals * w, rcond=None)
    even_scale = np.abs(full[0::2]).max()
    odd_scale = np.abs(full[1::2]).max()
    if odd_scale > parity_tol * max(even_scale, 1e-300):
        raise NumericalFailureError(
            f"even-parity violation: odd/even coefficient ratio {odd_scale / even_scale:.3e}"
        )

    # Refit with even powers only and unscale.
    design_even = np.vander((lams / s) ** 2, 8, increasing=True)
    even, *_ = np.linalg.lstsq(design_even * w[:, None], vals * w, rcond=None)
    coeffs = np.zeros(15)
    coeffs[0::2] = even / s ** (2 * np.arange(8))
    fitted = npoly.polyval(lams, coeffs)
    resid = float((np.abs(fitted - vals) * w).max())
    if resid > fit_tol:
        raise NumericalFailureError(f"spectral fit residual {resid:.3e} too large")

    # The constant term admits a direct sample: the quotient at lambda = 0
    # is exact up to determinant rounding, far better than any fitted
    # value.  The fit frame gives it with the matching sign; when its
    # minor is singular at 0, another frame still pins the magnitude.
    c0_exact = False
    got = quotient(*fit_frame, 0.0)
    direct = None if got is None else got[0]
    if direct is None:
        for frame in frames:
            if frame is fit_frame:
                continue
            got = quotient(*frame, 0.0)
            if got is not None:
                v = got[0]
                direct = math.copysign(abs(v), coeffs[0]) if coeffs[0] != 0.0 else abs(v)
                break
    if direct is not None:
        if abs(direct - coeffs[0]) > 1e-5 * np.abs(coeffs).max():
            raise NumericalFailureError(
                "fitted constant term disagrees with its direct sample"
            )
        coeffs[0] = direct
        c0_exact = True

    cmax = np.abs(coeffs).max()
    c0_floor = 1e-11 if c0_exact else 1e-8 * cmax
    if abs(coeffs[0]) > c0_floor:
        sign = 1.0 if coeffs[0] > 0 else -1.0
    else:
        anchor = echar_coeff_top(p)
        ref = coeffs[14] if abs(coeffs[14]) > 1e-12 * cmax else coeffs[np.abs(coeffs).argmax()]
        if abs(anchor) > 1e-9:
            sign = 1.0 if anchor * ref > 0 else -1.0
        else:
            sign = 1.0 if ref > 0 else -1.0
    return UnivariatePoly(sign * coeffs)


def _derivative_scale(coeffs: np.ndarray, x: float) -> float:
    powers = np.abs(x) ** np.arange(len(coeffs))
    return float(np.abs(coeffs) @ np.maximum(powers, 0.0) + 1e-300)


def _polish_root(coeffs: np.ndarray, x0: float, mult: int) -> float:
    """Refine a root of known multiplicity via the (mult-1)st derivative,
    where it is simple and Newton reaches full precision."""
    q = npoly.polyder(coeffs, mult - 1) if mult > 1 else coeffs
    qd = npoly.polyder(q)
    x = x0
    for _ in range(100):
        fx = npoly.polyval(x, q)
        dx = npoly.polyval(x, qd)
        if dx == 0.0:
            break
        step = fx / dx
        x -= step
        if abs(step) <= 1e-15 * (1.0 + abs(x)):
            break
    return float(x)


def _verify_multiplicity(coeffs: np.ndarray, x: float, mult: int, theta: float = 1e-6) -> bool:
    """Derivatives below ``mult`` must vanish and the next one must not,
    measured relative to each derivative's own coefficient scale."""
    c = coeffs
    for j in range(mult + 1):
        ratio = abs(npoly.polyval(x, c)) / _derivative_scale(c, x)
        if j < mult and ratio > theta:
            return False
        if j == mult and ratio <= theta:
            return False
        c = npoly.polyder(c)
    return True


def _cluster(points: np.ndarray, radius: float) -> list[list[int]]:
    """Single-linkage clusters of complex points at the given radius."""
    order = np.argsort(points.real + 1e-9 * points.imag)
    groups: list[list[int]] = []
    for idx in order:
        placed = False
        for g in groups:
            if any(
                abs(points[idx] - points[j]) <= radius * (1.0 + abs(points[j]))
                for j in g
            ):
                g.append(idx)
                placed = True
                break
        if not placed:
            groups.append([idx])
    return groups


def poly_real_roots(
    poly: UnivariatePoly,
    interval: tuple[float, float] | None = None,
    tol: float = 1e-10,
) -> list[tuple[float, int]]:
    """Real roots with multiplicities, optionally restricted to an interval.

    Companion-matrix roots are clustered at growing radii; each candidate
    cluster of size ``m`` is polished on the (m-1)st derivative and kept
    only if the first ``m`` derivatives vanish there relative to their
    coefficient scales.  Clusters made of a conjugate pair away from the
    real axis are discarded as genuinely complex.  Roots closer than the
    cluster radius are merged, so that is the resolution limit.
    """
    coeffs = np.asarray(poly.coeffs, dtype=float)
    cmax = np.abs(coeffs).max()
    if cmax == 0.0:
        raise ParameterError("the zero polynomial has no isolated roots")
    # Drop numerically-zero leading coefficients for a stable companion.
    keep = np.nonzero(np.abs(coeffs) > 1e-13 * cmax)[0]
    coeffs = coeffs[: keep[-1] + 1]
    found: list[tuple[float, int]] = []

    # Numerically-zero trailing coefficients correspond to roots at 0.
    k0 = 0
    while k0 < len(coeffs) - 1 and abs(coeffs[k0]) <= 1e-10 * cmax:
        k0 += 1
    if k0 > 0:
        found.append((0.0, k0))
        coeffs = coeffs[k0:]

    if len(coeffs) > 1:
        roots = npoly.polyroots(coeffs)
        resolved: list[tuple[float, int]] | None = None
        for radius in (1e-8, 1e-6, 1e-4, 2e-3, 2e-2):
            attempt: list[tuple[float, int]] = []
            ok = True
            for group in _cluster(roots, radius):
                pts = roots[group]
                m = len(group)
                center = pts.mean()
                near_axis = abs(center.imag) <= max(radius, 1e-7) * (1.0 + abs(center.real))
                if not near_axis:
                    continue  # conjugate cluster off the axis: complex
                x = _polish_root(coeffs, float(center.real), m)
                if _verify_multiplicity(coeffs, x, m):
                    attempt.append((x, m))
                elif all(abs(z.imag) > 1e-7 * (1.0 + abs(z.real)) for z in pts):
                    continue  # near-axis but demonstrably complex members only
                else:
                    ok = False
                    break
            if ok:
                resolved = attempt
                break
        if resolved is None:
            # Last resort: treat near-real companion roots individually.
            resolved = []
            for z in roots:
                if abs(z.imag) <= 1e-7 * (1.0 + abs(z.real)):
                    resolved.append((_polish_root(coeffs, float(z.real), 1), 1))
        found.extend(resolved)

    # Merge coincident entries, clamp into the interval, and sort.
    merged: list[tuple[float, int]] = []
    for r, m in sorted(found):
        if merged and abs(r - merged[-1][0]) <= 1e-9 * (1.0 + abs(r)):
            merged[-1] = (merged[-1][0], merged[-1][1] + m)
        else:
            merged.append((r, m))
    if interval is not None:
        lo, hi = interval
        slack = max(tol, 1e-12)
        out = []
        for r, m in merged:
            if lo - slack * (1.0 + abs(lo)) <= r <= hi + slack * (1.0 + abs(hi)):
                out.append((min(max(r, lo), hi), m))
        merged = out
    return merged
