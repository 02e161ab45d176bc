"""Pseudohyperbolic geometry of the open unit disk.

Everything downstream (separation tests, coverings, divided differences,
interpolation) is phrased in the Moebius-invariant metric

    pseudo_dist(z, w) = |z - w| / |1 - conj(z) w|,

so this module is the single place where points, disks, Blaschke factors
and the Harnack two-sided ratio bound live.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Points this close to the unit circle are rejected: the metric loses all
# relative accuracy there and no construction in this package needs them.
BOUNDARY_MARGIN = 1e-15


def as_complex(z: "DiskPoint | complex | float") -> complex:
    """Coerce a DiskPoint or plain number to a complex value."""
    if isinstance(z, DiskPoint):
        return z.z
    return complex(z)


@dataclass(frozen=True)
class DiskPoint:
    """A point strictly inside the unit disk.

    Equality is plain float equality of the coordinates; two points are
    "distinct" exactly when they differ as floats.  This is intentional:
    finite sequences are sets of representable points, and all separation
    quantities are computed from the exact stored values.
    """

    re: float
    im: float

    def __post_init__(self) -> None:
        mod = math.hypot(self.re, self.im)
        if not mod < 1.0 - BOUNDARY_MARGIN:
            raise ValueError(
                f"point {self.re}+{self.im}j lies outside the working disk "
                f"(|z| = {mod!r} must be < 1 - {BOUNDARY_MARGIN})"
            )

    @classmethod
    def from_complex(cls, z: complex) -> "DiskPoint":
        z = complex(z)
        return cls(z.real, z.imag)

    @property
    def z(self) -> complex:
        return complex(self.re, self.im)

    def __abs__(self) -> float:
        return math.hypot(self.re, self.im)

    def sort_key(self) -> tuple[float, float]:
        """Deterministic ordering used for tie-breaking in witnesses."""
        return (self.re, self.im)


def pseudo_dist(z: DiskPoint, w: DiskPoint) -> float:
    """Pseudohyperbolic distance |z - w| / |1 - conj(z) w|.

    Symmetric, zero iff the points coincide, and always < 1 for interior
    points.  Computed in factored form; ``abs`` on complex uses hypot, so
    nearby points keep full relative accuracy.
    """
    a, b = z.z, w.z
    return abs(a - b) / abs(1.0 - a.conjugate() * b)


def point_to_set_dist(z: DiskPoint, points: "list[DiskPoint] | tuple[DiskPoint, ...]") -> float:
    """Distance from ``z`` to the closest point of a finite set (inf if empty)."""
    if not points:
        return math.inf
    return min(pseudo_dist(z, p) for p in points)


def blaschke_factor(lam: DiskPoint, z: "DiskPoint | complex") -> complex:
    """Disk automorphism (z - lam) / (1 - conj(lam) z) vanishing at ``lam``.

    Its modulus equals ``pseudo_dist(lam, z)`` for interior ``z``.
    """
    a = lam.z
    w = as_complex(z)
    return (w - a) / (1.0 - a.conjugate() * w)


def harnack_interval(r: float) -> tuple[float, float]:
    """Two-sided bound ((1-r)/(1+r), (1+r)/(1-r)) on ratios of positive
    harmonic functions at points with pseudohyperbolic distance ``r``.

    The endpoints are exact reciprocals of each other.
    """
    if not 0.0 <= r < 1.0:
        raise ValueError(f"distance {r!r} outside [0, 1)")
    return ((1.0 - r) / (1.0 + r), (1.0 + r) / (1.0 - r))


@dataclass(frozen=True)
class PseudoDisk:
    """Open pseudohyperbolic disk {w : pseudo_dist(center, w) < radius}."""

    center: DiskPoint
    radius: float

    def __post_init__(self) -> None:
        if not 0.0 < self.radius < 1.0:
            raise ValueError(f"radius {self.radius!r} outside (0, 1)")

    def contains(self, w: DiskPoint) -> bool:
        return pseudo_dist(self.center, w) < self.radius


def pseudo_disk_gap(a: PseudoDisk, b: PseudoDisk) -> float:
    """Distance bookkeeping between two disks: dist(centers) - r_a - r_b.

    Negative values mean the triangle-inequality bound cannot separate the
    disks (they may overlap); a positive gap certifies disjointness.
    """
    return pseudo_dist(a.center, b.center) - a.radius - b.radius
