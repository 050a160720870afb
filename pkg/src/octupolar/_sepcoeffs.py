"""Static coefficient table for the separatrix polynomial.

The separatrix locus is 1792 (4 a0^2 + 4 b3^2 + 4 b3 - 3)^2 * S = 0 with
S = sum over i of d_{2i}(a0, b3) * alpha2^(2i), i = 0..8.  This module
holds the nine d-coefficients; each accepts scalars or numpy arrays.
"""

from __future__ import annotations

import numpy as np


def _pv(coeffs, x):
    """Evaluate a polynomial given descending coefficients."""
    return np.polyval(np.asarray(coeffs, dtype=float), x)


def d16(a0, b3):
    s = np.asarray(a0, dtype=float) ** 2
    return 27.0 * (
        -16.0 * s**2
        - 8.0 * s * _pv([4, -44, 13], b3)
        - (2.0 * b3 - 1.0) * (2.0 * b3 + 7.0) ** 3
    )


def d14(a0, b3):
    s = np.asarray(a0, dtype=float) ** 2
    return -54.0 * (
        128.0 * s**3
        - 16.0 * s**2 * _pv([48, 78, -29], b3)
        + 16.0 * s * _pv([72, 124, 190, -101, -69], b3)
        + (2.0 * b3 + 7.0) ** 2 * _pv([40, 44, 62, -47], b3)
    )


def d12(a0, b3):
    s = np.asarray(a0, dtype=float) ** 2
    return -9.0 * (
        4096.0 * s**4
        - 128.0 * s**3 * _pv([277, -92, -55], b3)
        + 48.0 * s**2 * _pv([152, 1944, -7094, -1548, 53], b3)
        + 8.0 * s * _pv([5648, 18912, 60408, 115368, 86625, -44964, -18410], b3)
        + _pv(
            [-1664, -22400, -124064, -377088, -624840, -383256, 109994, 181940, -17605],
            b3,
        )
    )


def d10(a0, b3):
    s = np.asarray(a0, dtype=float) ** 2
    return -2.0 * (
        22528.0 * s**5
        + 256.0 * s**4 * _pv([800, 3620, 599], b3)
        + 64.0 * s**3 * _pv([5440, -195290, -97221, -44476, 8375], b3)
        + 16.0 * s**2 * _pv(
            [12800, 1073640, 2832444, 2369838, -242151, -492540, -270455], b3
        )
        + 4.0 * s * _pv(
            [17920, -1188320, -6499376, -13648368, -10198728, 1289514, 3579185,
             123260, 206555],
            b3,
        )
        + _pv(
            [32768, 483200, 3111744, 10647136, 19890064, 19640424, 5479324,
             -6109790, -3422445, 504920, 3560],
            b3,
        )
    )


def d8(a0, b3):
    s = np.asarray(a0, dtype=float) ** 2
    return 5.0 * (
        40960.0 * s**6
        - 12288.0 * s**5 * _pv([97, 88, 44], b3)
        + 256.0 * s**4 * _pv([39921, 34176, 42870, 12132, 1667], b3)
        - 128.0 * s**3 * _pv(
            [141080, 419208, 389430, 82228, -15613, -100402, -37063], b3
        )
        + 48.0 * s**2 * _pv(
            [212768, 1023680, 1963504, 1378192, -304390, -508976, 63582, -57076,
             -52349],
            b3,
        )
        - 8.0 * s * _pv(
            [149376, 1199488, 4718496, 9599232, 9822584, 3227448, -2548818,
             -2029036, -53961, 37902, -40196],
            b3,
        )
        + (2.0 * b3 + 1.0) ** 2 * _pv(
            [10304, 154304, 911472, 2786464, 4828732, 3895212, 22345, -1558688,
             -352512, 133184, -7840],
            b3,
        )
    )


def d6(a0, b3):
    s = np.asarray(a0, dtype=float) ** 2
    return 16.0 * (
        28672.0 * s**7
        - 512.0 * s**6 * _pv([688, 1102, 941], b3)
        - 128.0 * s**5 * _pv([9696, -40380, -33951, -20148, -11743], b3)
        - 160.0 * s**4 * _pv([5632, -26064, -7644, 35134, -57181, -51958, -5454], b3)
        + 40.0 * s**3 * _pv(
            [18944, -103552, -737312, -1217152, -320576, 504962, 120149, -112824,
             -29175],
            b3,
        )
        + 2.0 * s**2 * _pv(
            [577536, 1111040, -2474880, -6705600, -341600, 9137976, 5840100,
             -884330, -684765, 374580, 132449],
            b3,
        )
        + s * (2.0 * b3 + 1.0) ** 2 * _pv(
            [80896, 999808, 3452640, 5398208, 3717992, -367068, -2064016, -746875,
             150774, 30796, -25928],
            b3,
        )
        - (2.0 * b3 + 1.0) ** 4 * _pv(
            [2048, 25824, 135752, 385692, 535154, 253167, -114083, -118464, -4364,
             7632, -656],
            b3,
        )
    )


def d4(a0, b3):
    s = np.asarray(a0, dtype=float) ** 2
    return 16.0 * (
        -32768.0 * s**8
        + 2048.0 * s**7 * _pv([241, -284, -83], b3)
        + 256.0 * s**6 * _pv([9208, -5384, 6390, 25496, 8589], b3)
        + 128.0 * s**5 * _pv([25680, -32160, 7368, 257000, 212292, 23286, -10209], b3)
        + 80.0 * s**4 * _pv(
            [8064, -169344, -304224, 311872, 774736, 306928, -61620, -34824, 1209],
            b3,
        )
        - 8.0 * s**3 * _pv(
            [281856, 2529280, 6835200, 6572800, 316800, -2303424, -174400, 593920,
             124725, -2310, 6019],
            b3,
        )
        - 2.0 * s**2 * (2.0 * b3 + 1.0) ** 2 * _pv(
            [230144, 1285120, 3244032, 4304128, 2583584, 28128, -669240, -261024,
             369, 30952, -3232],
            b3,
        )
        - 4.0 * s * (2.0 * b3 + 1.0) ** 4 * _pv(
            [5408, 10240, -22272, -72224, -83578, -75384, -40635, 8889, 10338,
             -2444, -184],
            b3,
        )
        + 2.0 * (b3 + 1.0) ** 2 * (2.0 * b3 + 1.0) ** 6 * _pv(
            [400, 4000, 15408, 16240, -2449, -6128, 104, 272, -24], b3
        )
    )


def d2(a0, b3):
    s = np.asarray(a0, dtype=float) ** 2
    return -256.0 * (s + b3 * b3 + b3) ** 2 * (4.0 * s + (2.0 * b3 + 1.0) ** 2) ** 3 * (
        64.0 * s**4
        + 8.0 * s**3 * _pv([32, -112, -81], b3)
        + 2.0 * s**2 * _pv([192, -576, -1356, -78, 245], b3)
        + s * _pv([256, 384, -408, -136, 764, 215, -62], b3)
        + (2.0 * b3 + 1.0) ** 2 * _pv([16, 144, 266, 87, -89, -32, 6], b3)
    )


def d0(a0, b3):
    s = np.asarray(a0, dtype=float) ** 2
    return (
        256.0
        * (s + b3 * b3 + b3) ** 4
        * (4.0 * s + 4.0 * b3 * b3 + 4.0 * b3 - 3.0)
        * (4.0 * s + (2.0 * b3 + 1.0) ** 2) ** 5
    )


def sep_coeffs(a0: float, b3: float) -> np.ndarray:
    """The nine coefficients [d0, d2, ..., d16] at a parameter point."""
    return np.array(
        [f(a0, b3) for f in (d0, d2, d4, d6, d8, d10, d12, d14, d16)], dtype=float
    )
