"""Batched projected-Newton refinement of stationary directions (numpy).

Fallback implementation used when the compiled extension is unavailable.
Both backends expose the same ``refine`` signature and arithmetic.
"""

from __future__ import annotations

import numpy as np

STEP_CAP = 0.5


def _tangent_basis(x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Deterministic orthonormal tangent pair for each unit row of x."""
    n = x.shape[0]
    e = np.zeros_like(x)
    e[np.arange(n), np.argmin(np.abs(x), axis=1)] = 1.0
    u = e - np.einsum("ni,ni->n", e, x)[:, None] * x
    u /= np.linalg.norm(u, axis=1)[:, None]
    v = np.cross(x, u)
    return u, v


def refine(
    a: np.ndarray,
    x0: np.ndarray,
    max_iter: int,
    residual_tol: float,
    step_tol: float,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Drive unit-vector starts toward solutions of A x^2 = lambda x.

    a is a (3,3,3) fully symmetric array, x0 an (n,3) array of unit rows.
    Each start follows Newton steps in its tangent plane (the projected
    Jacobian is 2 U^T (A.x) U - lambda I) until the residual
    ||A x^2 - lambda x|| with lambda = x.A x^2 drops below residual_tol
    or the step shrinks below step_tol.  Returns (x, lam, resid).
    """
    x = np.array(x0, dtype=float)
    n = x.shape[0]
    done = np.zeros(n, dtype=bool)
    for _ in range(max_iter):
        idx = np.flatnonzero(~done)
        if idx.size == 0:
            break
        xa = x[idx]
        b = np.einsum("ijk,nk->nij", a, xa)
        g = np.einsum("nij,nj->ni", b, xa)
        lam = np.einsum("ni,ni->n", xa, g)
        r = g - lam[:, None] * xa
        conv = np.linalg.norm(r, axis=1) <= residual_tol
        done[idx[conv]] = True
        live = idx[~conv]
        if live.size == 0:
            continue
        xl = xa[~conv]
        bl = b[~conv]
        ll = lam[~conv]
        rl = r[~conv]
        u, v = _tangent_basis(xl)
        bu = np.einsum("nij,nj->ni", bl, u)
        bv = np.einsum("nij,nj->ni", bl, v)
        j11 = 2.0 * np.einsum("ni,ni->n", u, bu) - ll
        j12 = 2.0 * np.einsum("ni,ni->n", u, bv)
        j21 = 2.0 * np.einsum("ni,ni->n", v, bu)
        j22 = 2.0 * np.einsum("ni,ni->n", v, bv) - ll
        r1 = np.einsum("ni,ni->n", u, rl)
        r2 = np.einsum("ni,ni->n", v, rl)
        det = j11 * j22 - j12 * j21
        bad = np.abs(det) < 1e-14
        det_safe = np.where(bad, 1.0, det)
        s = (-r1 * j22 + r2 * j12) / det_safe
        t = (r1 * j21 - r2 * j11) / det_safe
        # Singular tangent Jacobian: fall back to a plain descent step.
        s = np.where(bad, -r1, s)
        t = np.where(bad, -r2, t)
        w = s[:, None] * u + t[:, None] * v
        wn = np.linalg.norm(w, axis=1)
        big = wn > STEP_CAP
        if big.any():
            w[big] *= (STEP_CAP / wn[big])[:, None]
        xn = xl + w
        xn /= np.linalg.norm(xn, axis=1)[:, None]
        x[live] = xn
        done[live] = wn <= step_tol
    b = np.einsum("ijk,nk->nij", a, x)
    g = np.einsum("nij,nj->ni", b, x)
    lam = np.einsum("ni,ni->n", x, g)
    resid = np.linalg.norm(g - lam[:, None] * x, axis=1)
    return x, lam, resid
