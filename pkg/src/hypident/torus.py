"""Trace coordinates for hyperbolic one-holed and once-punctured tori.

A hyperbolic structure on the one-holed torus is recorded by the traces
(x, y, z) of a generating pair and their product.  The commutator trace

    tr[A, B] = x^2 + y^2 + z^2 - xyz - 2 = kappa - 2

is negative for these structures, and with the convention
tr[A, B] = -2 cosh(k/2) the boundary length k satisfies

    cosh(k/2) = (2 - kappa) / 2,

so kappa <= 0 with kappa = 0 exactly at the cusp (where the commutator
trace is -2).  kappa is evaluated with exact product splitting plus fsum,
so the stored value is the correctly rounded combination of the stored
coordinates.

Fenchel-Nielsen data (b, t, k) - length of a chosen simple closed geodesic,
twist along it, boundary length - is realized by explicit unit-determinant
2x2 matrices:

    A   = [[e^{b/2}, 0], [0, e^{-b/2}]]                (axis: imaginary axis)
    B_t = [[p e^{t/2}, q e^{-t/2}], [q e^{t/2}, p e^{-t/2}]],  q = sqrt(p^2-1)

with p > 1 fixed by the commutator condition:

    p^2 = (cosh b + cosh(k/2)) / (2 sinh^2(b/2)).

The resulting traces are x = 2 cosh(b/2), y = 2p cosh(t/2),
z = 2p cosh((t+b)/2); kappa is independent of t, t = 0 minimizes y over the
twist orbit, and t -> t + b realizes the Markov move (y, z) -> (z, xz - y).

Triples entered directly with x, y, z > 2 and kappa <= 0 are accepted as
points of the relative character variety without a discreteness
certificate.
"""

import math
from math import acosh, cosh, exp, fsum, sinh, sqrt

from dataclasses import dataclass

from .errors import DomainError, NoRealStructureError, NonHyperbolicError

__all__ = [
    "TraceTriple",
    "FenchelNielsen",
    "trace_triple",
    "boundary_length",
    "from_traces",
    "from_fenchel_nielsen",
    "fenchel_nielsen_matrices",
    "length_from_trace",
    "mat_mul",
    "mat_inv",
    "mat_trace",
]

_SPLITTER = 134217729.0  # 2^27 + 1, Veltkamp splitting constant


def _two_product(a, b):
    """Exact product a*b as a (rounded, error) pair of doubles."""
    p = a * b
    c = _SPLITTER * a
    a_hi = c - (c - a)
    a_lo = a - a_hi
    c = _SPLITTER * b
    b_hi = c - (c - b)
    b_lo = b - b_hi
    err = ((a_hi * b_hi - p) + a_hi * b_lo + a_lo * b_hi) + a_lo * b_lo
    return p, err


def _kappa(x, y, z):
    """Correctly rounded x^2 + y^2 + z^2 - xyz."""
    pieces = []
    for v in (x, y, z):
        p, e = _two_product(v, v)
        pieces.append(p)
        pieces.append(e)
    hi, lo = _two_product(x, y)
    for part in (hi, lo):
        p, e = _two_product(part, z)
        pieces.append(-p)
        pieces.append(-e)
    return fsum(pieces)


def _kappa_slop(x, y, z):
    # rounding allowance for coordinates that were themselves computed
    return 32.0 * 2.220446049250313e-16 * (x * x + y * y + z * z + abs(x * y * z))


@dataclass(frozen=True)
class TraceTriple:
    """Point (x, y, z) of the relative character variety, boundary length k."""

    x: float
    y: float
    z: float
    kappa: float
    k: float


@dataclass(frozen=True)
class FenchelNielsen:
    """Length, twist and boundary length (b, t, k) of a marked torus."""

    b: float
    t: float
    k: float

    def __post_init__(self):
        if not (math.isfinite(self.b) and self.b > 0.0):
            raise DomainError(f"geodesic length b must be positive, got {self.b!r}")
        if not math.isfinite(self.t):
            raise DomainError(f"twist t must be finite, got {self.t!r}")
        if not (math.isfinite(self.k) and self.k >= 0.0):
            raise DomainError(f"boundary length k must be >= 0, got {self.k!r}")


def trace_triple(x: float, y: float, z: float) -> TraceTriple:
    """Validate traces and attach kappa and the boundary length."""
    for name, v in (("x", x), ("y", y), ("z", z)):
        if not math.isfinite(v) or v <= 2.0:
            raise NonHyperbolicError(f"trace {name} must exceed 2, got {v!r}")
    kappa = _kappa(x, y, z)
    if kappa > 0.0:
        if kappa > _kappa_slop(x, y, z):
            raise NonHyperbolicError(
                f"x^2+y^2+z^2-xyz = {kappa!r} > 0: no hyperbolic or cusped boundary"
            )
        kappa = 0.0  # within roundoff of the cusp
    k = 2.0 * acosh(1.0 - 0.5 * kappa)
    return TraceTriple(x, y, z, kappa, k)


def _triple_with_known_boundary(x, y, z, k):
    # constructors that solved for a requested k store it exactly instead of
    # recovering it from kappa, which is ill-conditioned near the cusp
    base = trace_triple(x, y, z)
    return TraceTriple(base.x, base.y, base.z, base.kappa, k)


def boundary_length(x: float, y: float, z: float) -> float:
    """Boundary length of the triple (x, y, z)."""
    return trace_triple(x, y, z).k


def from_traces(x: float, y: float, k: float) -> TraceTriple:
    """Solve for the third trace at boundary length k; smaller root.

    The two roots of the quadratic are exchanged by a Markov move (a Dehn
    twist), so either describes the same surface; the smaller one is chosen
    for determinism.
    """
    for name, v in (("x", x), ("y", y)):
        if not math.isfinite(v) or v <= 2.0:
            raise NonHyperbolicError(f"trace {name} must exceed 2, got {v!r}")
    if not (math.isfinite(k) and k >= 0.0):
        raise DomainError(f"boundary length k must be >= 0, got {k!r}")
    rest = x * x + y * y - 2.0 + 2.0 * cosh(0.5 * k)
    disc = (x * y) ** 2 - 4.0 * rest
    if disc < 0.0:
        raise NoRealStructureError(
            f"no real structure: discriminant {disc!r} < 0 for x={x!r}, y={y!r}, k={k!r}"
        )
    z = 2.0 * rest / (x * y + sqrt(disc))  # stable form of (xy - sqrt(disc))/2
    if z <= 2.0:
        raise NonHyperbolicError(f"third trace {z!r} <= 2: not a hyperbolic structure")
    return _triple_with_known_boundary(x, y, z, k)


def _crossing_scale(b, k):
    # p > 1 in the matrix recipe; p^2 - 1 = (cosh(k/2) + 1) / (2 sinh^2(b/2))
    return sqrt((cosh(b) + cosh(0.5 * k)) / 2.0) / sinh(0.5 * b)


def from_fenchel_nielsen(fn: FenchelNielsen) -> TraceTriple:
    """Trace triple of the marked structure (b, t, k)."""
    p = _crossing_scale(fn.b, fn.k)
    x = 2.0 * cosh(0.5 * fn.b)
    y = 2.0 * p * cosh(0.5 * fn.t)
    z = 2.0 * p * cosh(0.5 * (fn.t + fn.b))
    return _triple_with_known_boundary(x, y, z, fn.k)


def fenchel_nielsen_matrices(fn: FenchelNielsen):
    """Explicit unit-determinant matrices (A, B) realizing (b, t, k)."""
    p = _crossing_scale(fn.b, fn.k)
    q = sqrt(p * p - 1.0)
    et = exp(0.5 * fn.t)
    a = ((exp(0.5 * fn.b), 0.0), (0.0, exp(-0.5 * fn.b)))
    b = ((p * et, q / et), (q * et, p / et))
    return a, b


def length_from_trace(tr: float) -> float:
    """Geodesic length of a hyperbolic element from its trace."""
    if not math.isfinite(tr) or tr <= 2.0:
        raise NonHyperbolicError(f"trace must exceed 2 for a hyperbolic element, got {tr!r}")
    return 2.0 * acosh(0.5 * tr)


# 2x2 matrix helpers for the explicit recipes (rows of pairs)


def mat_mul(a, b):
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def mat_inv(a):
    # unit determinant assumed
    return ((a[1][1], -a[0][1]), (-a[1][0], a[0][0]))


def mat_trace(a):
    return a[0][0] + a[1][1]
