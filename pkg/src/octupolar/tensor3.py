"""Symmetric third-order tensors on R^3 and their orthogonal transforms.

A fully symmetric tensor ``T`` has 10 independent components ``t_ijk``
(indices 1 <= i <= j <= k <= 3).  This module stores the dense 3x3x3
array, exposes index-order-independent access, and implements the
contractions ``T x``, ``T x^2``, ``T x^3`` together with the orthogonal
push-forward ``[T Q^3]_ijk = sum_lmn t_lmn q_il q_jm q_kn``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import ParameterError

__all__ = [
    "SymTensor3",
    "Rotation3",
    "build_symmetric",
    "is_traceless",
    "rotate",
    "contract",
    "UNIQUE_INDICES",
]

# The 10 index triples (1-based, nondecreasing) that determine a
# symmetric third-order tensor.
UNIQUE_INDICES: tuple[tuple[int, int, int], ...] = tuple(
    (i, j, k)
    for i in range(1, 4)
    for j in range(i, 4)
    for k in range(j, 4)
)


@dataclass(frozen=True)
class SymTensor3:
    """Immutable symmetric third-order tensor backed by a dense array."""

    array: np.ndarray = field(repr=False)

    def __post_init__(self):
        arr = np.asarray(self.array, dtype=float)
        if arr.shape != (3, 3, 3):
            raise ParameterError(f"expected shape (3, 3, 3), got {arr.shape}")
        if not np.isfinite(arr).all():
            raise ParameterError("tensor entries must be finite")
        for perm in itertools.permutations((0, 1, 2)):
            if not np.array_equal(arr, arr.transpose(perm)):
                raise ParameterError("array is not symmetric under index permutations")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "array", arr)

    def entry(self, i: int, j: int, k: int) -> float:
        """Component ``t_ijk`` for 1-based indices, any index order."""
        for idx in (i, j, k):
            if idx not in (1, 2, 3):
                raise ParameterError(f"indices must be 1..3, got ({i}, {j}, {k})")
        return float(self.array[i - 1, j - 1, k - 1])

    def unique_entries(self) -> dict[tuple[int, int, int], float]:
        """The 10 independent components keyed by nondecreasing triples."""
        return {ijk: self.entry(*ijk) for ijk in UNIQUE_INDICES}

    def norm_max(self) -> float:
        """Largest absolute component."""
        return float(np.abs(self.array).max())

    def __repr__(self):
        parts = ", ".join(
            f"t{i}{j}{k}={v:.6g}" for (i, j, k), v in self.unique_entries().items() if v != 0.0
        )
        return f"SymTensor3({parts or '0'})"


@dataclass(frozen=True)
class Rotation3:
    """Orthogonal 3x3 matrix, validated at construction.

    ``tol`` bounds the allowed deviation of ``Q^T Q`` from the identity;
    it is stored so callers can see what was checked.
    """

    matrix: np.ndarray = field(repr=False)
    tol: float = 1e-10

    def __post_init__(self):
        q = np.asarray(self.matrix, dtype=float)
        if q.shape != (3, 3):
            raise ParameterError(f"expected shape (3, 3), got {q.shape}")
        if not np.isfinite(q).all():
            raise ParameterError("rotation entries must be finite")
        defect = np.abs(q.T @ q - np.eye(3)).max()
        if defect > self.tol:
            raise ParameterError(
                f"matrix is not orthogonal: |Q^T Q - I| = {defect:.3e} > tol = {self.tol:.3e}"
            )
        q = q.copy()
        q.flags.writeable = False
        object.__setattr__(self, "matrix", q)

    @property
    def det(self) -> float:
        return float(np.linalg.det(self.matrix))

    def compose(self, other: "Rotation3") -> "Rotation3":
        """Rotation acting as ``self`` after ``other``."""
        return Rotation3(self.matrix @ other.matrix, tol=max(self.tol, other.tol) * 4)


def build_symmetric(unique: dict[tuple[int, int, int], float]) -> SymTensor3:
    """Build a symmetric tensor from its 10 independent components.

    ``unique`` maps nondecreasing 1-based triples ``(i, j, k)`` to values.
    Every one of the 10 triples must appear exactly once.
    """
    missing = [ijk for ijk in UNIQUE_INDICES if ijk not in unique]
    if missing:
        raise ParameterError(f"missing components: {missing}")
    extra = [key for key in unique if key not in UNIQUE_INDICES]
    if extra:
        raise ParameterError(
            f"keys must be nondecreasing triples over 1..3, got unexpected {extra}"
        )
    arr = np.zeros((3, 3, 3))
    for (i, j, k), value in unique.items():
        if not np.isfinite(value):
            raise ParameterError(f"component {(i, j, k)} is not finite")
        for p, q, r in set(itertools.permutations((i - 1, j - 1, k - 1))):
            arr[p, q, r] = value
    return SymTensor3(arr)


def is_traceless(t: SymTensor3, tol: float = 1e-12) -> bool:
    """Check the three contracted-trace identities ``sum_j t_jji = 0``."""
    traces = np.einsum("jji->i", t.array)
    return bool(np.abs(traces).max() <= tol)


def _as_rotation(q, tol: float) -> Rotation3:
    if isinstance(q, Rotation3):
        return q
    return Rotation3(np.asarray(q, dtype=float), tol=tol)


def rotate(t: SymTensor3, q, tol: float = 1e-10) -> SymTensor3:
    """Push-forward of ``t`` by an orthogonal matrix.

    ``q`` may be a :class:`Rotation3` or a raw 3x3 array, in which case
    orthogonality is validated against ``tol`` first.
    """
    rot = _as_rotation(q, tol)
    m = rot.matrix
    out = np.einsum("lmn,il,jm,kn->ijk", t.array, m, m, m, optimize=True)
    # Symmetry is preserved only up to rounding; rebuild from one value
    # per index class so the result is exactly permutation-symmetric.
    sym = np.zeros_like(out)
    for i in range(3):
        for j in range(i, 3):
            for k in range(j, 3):
                perms = set(itertools.permutations((i, j, k)))
                value = sum(out[p] for p in perms) / len(perms)
                for p in perms:
                    sym[p] = value
    return SymTensor3(sym)


def contract(t: SymTensor3, x: np.ndarray, order: int):
    """Contract ``t`` with ``order`` copies of the vector ``x``.

    order 1 -> 3x3 matrix ``(T x)_ij``, order 2 -> vector ``(T x^2)_i``,
    order 3 -> scalar ``T x^3``.
    """
    v = np.asarray(x, dtype=float)
    if v.shape != (3,):
        raise ParameterError(f"expected a 3-vector, got shape {v.shape}")
    if not np.isfinite(v).all():
        raise ParameterError("vector entries must be finite")
    m = t.array @ v           # (T x)_ij = t_ijk x_k
    if order == 1:
        return m
    g = m @ v                 # (T x^2)_i = t_ijk x_j x_k
    if order == 2:
        return g
    if order == 3:
        return float(g @ v)   # T x^3
    raise ParameterError(f"order must be 1, 2 or 3, got {order}")
