"""Shared independent oracles for the test suite.

These stay deliberately separate from the library code paths they check:
the dilogarithm oracle uses mpmath at 40 digits, and the seam oracle places
explicit hyperbolic matrices and bisects on the resulting boundary trace.
"""

from math import cosh, exp, sinh

import mpmath

mpmath.mp.dps = 40


def rogers_oracle(z):
    """High-precision Rogers dilogarithm, returned as float."""
    z = mpmath.mpf(z)
    if z == 0:
        return 0.0
    val = mpmath.polylog(2, z) + mpmath.mpf("0.5") * mpmath.log(abs(z)) * mpmath.log(1 - z)
    return float(val)


def li2_oracle(z):
    """High-precision classical dilogarithm, returned as float."""
    return float(mpmath.polylog(2, mpmath.mpf(z)))


def li2_series_oracle(z, terms=400):
    """Direct power-series summation of the dilogarithm at 40 digits.

    Only trustworthy for |z| <= 0.9 or so; the tail beyond `terms` is
    O(z^terms / terms^2).
    """
    z = mpmath.mpf(z)
    total = mpmath.mpf(0)
    power = z
    for n in range(1, terms + 1):
        total += power / (n * n)
        power *= z
    return float(total)


def _mat_mul(a, b):
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def _mat_inv(a):
    return ((a[1][1], -a[0][1]), (-a[1][0], a[0][0]))


def _third_boundary_trace(l2, l3, delta):
    # X2 translates up the imaginary axis; X3 translates down its own axis,
    # which crosses the perpendicular geodesic (-1, 1) at distance delta.
    x2 = ((exp(0.5 * l2), 0.0), (0.0, exp(-0.5 * l2)))
    shift = ((cosh(0.5 * delta), sinh(0.5 * delta)), (sinh(0.5 * delta), cosh(0.5 * delta)))
    d3 = ((exp(-0.5 * l3), 0.0), (0.0, exp(0.5 * l3)))
    x3 = _mat_mul(_mat_mul(shift, d3), _mat_inv(shift))
    product = _mat_mul(x2, x3)
    return product[0][0] + product[1][1]


def seam_oracle(l1, l2, l3):
    """Distance between the axes of two boundary isometries of a pants.

    Places explicit matrices with translation lengths l2, l3 whose axes sit
    at distance delta, and bisects until the third boundary has length l1.
    Independent of the hexagon closed form.
    """
    target = 2.0 * cosh(0.5 * l1)
    lo, hi = 1e-9, 60.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if -_third_boundary_trace(l2, l3, mid) < target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
