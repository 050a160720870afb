"""Dome and separatrix surfaces over the parameter disk.

The dome is the locus where the largest eigenvalue of the cubic form
first exceeds the north-pole value 1; the separatrix, inside the dome,
separates the four-maxima configuration from the three-maxima one.  Both
are evaluated from their closed-form polynomials in alpha2, with the
separatrix root validated against the brute-force maxima count.
"""

from __future__ import annotations

import dataclasses
import math

import numpy as np

from ._sepcoeffs import sep_coeffs
from .errors import DegenerateConfigurationError, DomainError, NumericalFailureError
from .params import OctupolarParams, PolarPoint, polar_to_params
from .resultants import UnivariatePoly, poly_real_roots
from .spectra import SolverConfig, count_maxima

FLAG_OUTSIDE_DISK = "OutsideDisk"
FLAG_SPURIOUS = "Spurious"
FLAG_DEGENERATE = "Degenerate"

DISK_TOL = 1e-12
ROOT_TOL = 1e-9


@dataclasses.dataclass(frozen=True)
class DomeFactors:
    """The three factors g1^3 g2 g3 of the lambda = 1 locus."""

    g1: float
    g2: float
    g3: float


@dataclasses.dataclass(frozen=True)
class CrossSection:
    """Closed-form dome and separatrix values on a meridian."""

    dome: float
    sepa: float


@dataclasses.dataclass(frozen=True)
class SurfaceSample:
    """One grid point of the surface sweep."""

    alpha0: float
    beta3: float
    rho: float
    chi: float
    dome_alpha2: float | None
    sepa_alpha2: float | None
    flags: frozenset[str]


def _base_margin(alpha0: float, beta3: float) -> float:
    """alpha0^2 + beta3^2 + beta3; nonpositive inside the base disk."""
    return alpha0 * alpha0 + beta3 * beta3 + beta3


def _g3_coeffs(alpha0: float, beta3: float) -> np.ndarray:
    s = alpha0 * alpha0
    b = beta3
    c6 = (2.0 * b - 1.0) * ((2.0 * b + 5.0) ** 2 - 12.0 * s)
    c4 = (
        -48.0 * s * s * (3.0 * b * b - 1.0)
        + 12.0 * s * (8.0 * b**4 + 24.0 * b**3 + 26.0 * b * b - 4.0 * b - 11.0)
        - 16.0 * b**6
        - 96.0 * b**5
        - 168.0 * b**4
        - 72.0 * b**3
        - 21.0 * b * b
        - 24.0 * b
        + 40.0
    )
    c2 = 8.0 * (
        8.0 * s**3
        + 6.0 * s * s * (4.0 * b * b - 2.0 * b - 5.0)
        + 3.0 * s * (8.0 * b**4 + 8.0 * b**3 - 12.0 * b * b - 3.0 * b + 6.0)
        + 8.0 * b**6
        + 36.0 * b**5
        + 42.0 * b**4
        + 3.0 * b**3
        - 9.0 * b * b
        - 2.0
    )
    c0 = -16.0 * _base_margin(alpha0, beta3) ** 2 * (
        4.0 * s + 4.0 * b * b + 4.0 * b - 3.0
    )
    return np.array([c0, 0.0, c2, 0.0, c4, 0.0, c6])


def dome_factors(alpha0: float, beta3: float, alpha2: float) -> DomeFactors:
    """Evaluate the three factors of the lambda = 1 locus at a point."""
    s = alpha0 * alpha0
    g1 = 3.0 - 4.0 * s - 4.0 * beta3 * beta3 - 4.0 * beta3
    t = 1.0 + 2.0 * beta3
    g2 = (
        64.0 * alpha2**4
        - 16.0 * alpha2 * alpha2 * t * (-12.0 * s + t * t)
        + (4.0 * s + t * t) ** 3
    )
    g3 = float(np.polyval(_g3_coeffs(alpha0, beta3)[::-1], alpha2))
    return DomeFactors(g1=g1, g2=g2, g3=g3)


def dome_poly(alpha0: float, beta3: float) -> UnivariatePoly:
    """g3 as a degree-6 polynomial in alpha2 (cubic in alpha2^2)."""
    return UnivariatePoly(_g3_coeffs(alpha0, beta3))


MERIDIAN_TOL = 1e-6


def _polar_of(alpha0: float, beta3: float) -> tuple[float, float]:
    """(rho, chi) with alpha0 = rho cos chi, beta3 = -1/2 + rho sin chi."""
    return math.hypot(alpha0, beta3 + 0.5), math.atan2(beta3 + 0.5, alpha0)


def _meridian_chi(alpha0: float, beta3: float) -> float | None:
    """-pi/2 or -pi/6 when the point sits on that meridian, else None."""
    rho, chi = _polar_of(alpha0, beta3)
    if rho <= 1e-12:
        return None
    for special in (-math.pi / 2.0, -math.pi / 6.0):
        if abs(chi - special) <= MERIDIAN_TOL:
            return special
    return None


def dome_alpha2(alpha0: float, beta3: float) -> float:
    """Smallest nonnegative root of g3 in alpha2, over the base disk."""
    if _base_margin(alpha0, beta3) > DISK_TOL:
        raise DomainError(
            f"({alpha0}, {beta3}) lies outside the base disk "
            "alpha0^2 + beta3^2 + beta3 <= 0"
        )
    special = _meridian_chi(alpha0, beta3)
    if special is not None:
        # Root conditioning degrades toward the base-circle tangency;
        # these meridians have exact closed forms.
        return cross_section(special, _polar_of(alpha0, beta3)[0]).dome
    roots = poly_real_roots(dome_poly(alpha0, beta3))
    candidates = sorted(r for r, _ in roots if r >= -ROOT_TOL)
    if not candidates:
        raise NumericalFailureError(
            f"g3 has no nonnegative real root at ({alpha0}, {beta3})"
        )
    return max(0.0, candidates[0])


def separatrix_poly(alpha0: float, beta3: float) -> UnivariatePoly:
    """The full separatrix polynomial in alpha2 (even, degree 16)."""
    s = alpha0 * alpha0
    prefactor = 1792.0 * (4.0 * s + 4.0 * beta3 * beta3 + 4.0 * beta3 - 3.0) ** 2
    coeffs = np.zeros(17)
    coeffs[0::2] = prefactor * sep_coeffs(alpha0, beta3)
    return UnivariatePoly(coeffs)


# Meridians where the separatrix touches the base circle at rho = 1/2.
_TANGENCY_CHIS = (-math.pi / 2.0, math.pi / 6.0, 5.0 * math.pi / 6.0)


def separatrix_alpha2(
    alpha0: float,
    beta3: float,
    cfg: SolverConfig | None = None,
) -> float | None:
    """Validated separatrix root in (0, dome], or None if all are spurious.

    Each polynomial root is checked against the brute-force count of
    maxima: slightly above the separatrix the cubic form has four maxima,
    slightly below three.  Probes sit at +-max(1e-3, 0.02*dome), clamped
    inside (0, dome).  Roots failing the check are discarded.  On the
    chi = -pi/2 and -pi/6 meridians the closed-form cross-sections are
    used instead of root finding.
    """
    if _base_margin(alpha0, beta3) > DISK_TOL:
        raise DomainError(
            f"({alpha0}, {beta3}) lies outside the base disk "
            "alpha0^2 + beta3^2 + beta3 <= 0"
        )
    rho, chi = _polar_of(alpha0, beta3)
    if rho <= 1e-12:
        # Disk center: the separatrix meets alpha2 = 0 here; the whole
        # segment up to the dome is the four-maxima state.
        return 0.0
    special = _meridian_chi(alpha0, beta3)
    if special is not None:
        section = cross_section(special, rho)
        if section.sepa > section.dome + ROOT_TOL:
            # Past the dome/separatrix crossing the root leaves the dome
            # and no longer marks a transition under it.
            return None
        if section.dome <= ROOT_TOL:
            # Base circle: only the tangency meridian keeps the contact
            # point; chi = -pi/6 exits through the dome before rho = 1/2.
            return 0.0 if special == -math.pi / 2.0 else None
        return section.sepa
    dome = dome_alpha2(alpha0, beta3)
    if dome <= ROOT_TOL:
        if any(abs(chi - t) <= MERIDIAN_TOL for t in _TANGENCY_CHIS):
            return 0.0
        return None
    roots = poly_real_roots(separatrix_poly(alpha0, beta3))
    candidates = sorted(r for r, _ in roots if ROOT_TOL < r <= dome * (1.0 + 1e-9))
    offset = max(1e-3, 0.02 * dome)
    degenerate_hits = 0
    for root in candidates:
        below = root - offset
        if below <= ROOT_TOL:
            below = 0.5 * root
        above = root + offset
        if above >= dome - ROOT_TOL:
            above = 0.5 * (root + dome)
        if not below < root < above:
            degenerate_hits += 1
            continue
        try:
            n_below = count_maxima(OctupolarParams(alpha0, beta3, below), cfg)
            n_above = count_maxima(OctupolarParams(alpha0, beta3, above), cfg)
        except DegenerateConfigurationError:
            degenerate_hits += 1
            continue
        if n_below == 3 and n_above == 4:
            return root
    if candidates and degenerate_hits == len(candidates):
        raise DegenerateConfigurationError(
            f"maxima count is degenerate around every separatrix candidate "
            f"at ({alpha0}, {beta3})"
        )
    return None


def cross_section(chi: float, rho: float) -> CrossSection:
    """Closed-form dome/separatrix values on the two special meridians."""
    if not 0.0 <= rho <= 0.5:
        raise DomainError(f"rho must lie in [0, 1/2], got {rho}")
    if abs(chi - (-math.pi / 2.0)) <= 1e-9:
        return CrossSection(
            dome=math.sqrt((1.0 - 2.0 * rho) / (2.0 - rho)),
            sepa=(2.0 * rho / math.sqrt(3.0))
            * math.sqrt((1.0 - 2.0 * rho) / (3.0 - rho)),
        )
    if abs(chi - (-math.pi / 6.0)) <= 1e-9:
        return CrossSection(
            dome=((1.0 - 2.0 * rho) / math.sqrt(2.0)) * math.sqrt(1.0 + rho),
            sepa=(2.0 * rho / math.sqrt(3.0))
            * math.sqrt((1.0 + 2.0 * rho) / (3.0 + rho)),
        )
    raise DomainError(
        f"closed-form cross-sections exist only for chi = -pi/2 or -pi/6, got {chi}"
    )


def sample_disk(
    n_rho: int, n_chi: int, cfg: SolverConfig | None = None
) -> list[SurfaceSample]:
    """Sweep the polar grid rho in [0, 1/2], chi in (-pi, pi]."""
    if n_rho < 2 or n_chi < 2:
        raise DomainError(f"grid must be at least 2x2, got {n_rho}x{n_chi}")
    rhos = np.linspace(0.0, 0.5, n_rho)
    chis = -math.pi + 2.0 * math.pi * (np.arange(n_chi) + 1.0) / n_chi
    samples = []
    for rho in rhos:
        for chi in chis:
            pt = PolarPoint(float(rho), float(chi))
            alpha0, beta3 = polar_to_params(pt)
            flags = set()
            dome = sepa = None
            try:
                dome = dome_alpha2(alpha0, beta3)
            except DomainError:
                flags.add(FLAG_OUTSIDE_DISK)
            if dome is not None:
                try:
                    sepa = separatrix_alpha2(alpha0, beta3, cfg)
                except DegenerateConfigurationError:
                    flags.add(FLAG_DEGENERATE)
                if sepa is None and FLAG_DEGENERATE not in flags:
                    flags.add(FLAG_SPURIOUS)
            if sepa is not None:
                flags.discard(FLAG_SPURIOUS)
            samples.append(
                SurfaceSample(
                    alpha0=alpha0,
                    beta3=beta3,
                    rho=float(rho),
                    chi=float(chi),
                    dome_alpha2=dome,
                    sepa_alpha2=sepa,
                    flags=frozenset(flags),
                )
            )
    return samples
