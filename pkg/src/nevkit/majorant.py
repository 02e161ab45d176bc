"""Computable positive harmonic functions on the disk.

The family is deliberately small: a constant plus finitely many weighted
Poisson-kernel atoms on the boundary,

    eval(z) = constant + sum_j weight_j * P(z, e^{i theta_j}),
    P(z, zeta) = (1 - |z|^2) / |zeta - z|^2.

It is closed under nonnegative linear combinations plus shifts, which is all
the combination arithmetic the rest of the package needs, and every member
genuinely satisfies the Harnack ratio bounds, exposed here as a check.

The constant is normalized to be at least log 3 so that e^{-H} disk radii
are always < 1/3.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .geometry import DiskPoint, harnack_interval, pseudo_dist

MIN_CONSTANT = math.log(3.0)

# Cap on atom weights so e^{-eval} never underflows in the working region.
ATOM_WEIGHT_CAP = 1e3

# Candidate constants for witness searches, ordered cheap-to-expensive.
# Searches return the first candidate that passes; exhausting the grid means
# "no witness found in the family", never "no witness exists".
DEFAULT_CONSTANT_GRID: tuple[float, ...] = (
    MIN_CONSTANT,
    math.log(8.0),
    4.0,
    8.0,
    16.0,
    32.0,
    64.0,
    128.0,
    256.0,
)


def poisson_kernel(z: DiskPoint, theta: float) -> float:
    """P(z, e^{i theta}) = (1 - |z|^2) / |e^{i theta} - z|^2."""
    x, y = z.re, z.im
    dx = math.cos(theta) - x
    dy = math.sin(theta) - y
    return (1.0 - (x * x + y * y)) / (dx * dx + dy * dy)


@dataclass(frozen=True)
class HarmonicMajorant:
    """constant + sum of weighted Poisson atoms; positive and harmonic."""

    constant: float
    atoms: tuple[tuple[float, float], ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if not self.constant >= MIN_CONSTANT:
            raise ValueError(
                f"constant {self.constant!r} below the normalization {MIN_CONSTANT}"
            )
        for theta, weight in self.atoms:
            if not 0.0 <= theta < 2.0 * math.pi:
                raise ValueError(f"atom angle {theta!r} outside [0, 2*pi)")
            if not 0.0 <= weight <= ATOM_WEIGHT_CAP:
                raise ValueError(
                    f"atom weight {weight!r} outside [0, {ATOM_WEIGHT_CAP}]"
                )

    def evaluate(self, z: DiskPoint) -> float:
        value = self.constant
        for theta, weight in self.atoms:
            if weight:
                value += weight * poisson_kernel(z, theta)
        return value

    def __call__(self, z: DiskPoint) -> float:
        return self.evaluate(z)


def combine(
    majorants: list[HarmonicMajorant] | tuple[HarmonicMajorant, ...],
    scales: list[float] | tuple[float, ...],
    shift: float = 0.0,
) -> HarmonicMajorant:
    """Nonnegative combination sum_i scale_i * H_i + shift, inside the family.

    Raises if the lists disagree in length, a scale or the shift is negative,
    or the combined constant drops below the family normalization (possible
    only with all-zero scales).
    """
    if len(majorants) != len(scales):
        raise ValueError("majorants and scales must have equal length")
    if shift < 0.0:
        raise ValueError(f"shift {shift!r} must be >= 0")
    constant = shift
    atoms: list[tuple[float, float]] = []
    for h, s in zip(majorants, scales):
        if s < 0.0:
            raise ValueError(f"scale {s!r} must be >= 0")
        if s == 0.0:
            continue
        constant += s * h.constant
        atoms.extend((theta, s * weight) for theta, weight in h.atoms)
    return HarmonicMajorant(constant, tuple(atoms))


def harnack_check(
    majorant: HarmonicMajorant,
    z: DiskPoint,
    w: DiskPoint,
    rel_tol: float = 1e-12,
) -> bool:
    """True iff eval(z)/eval(w) lies in the Harnack interval for dist(z, w).

    Holds for every member of the family (each Poisson atom and the constant
    satisfy the two-sided bound individually, and ratios of sums interlace),
    so a False return indicates an evaluation bug; ``rel_tol`` absorbs the
    last-ulp rounding of the interval endpoints.
    """
    lo, hi = harnack_interval(pseudo_dist(z, w))
    ratio = majorant.evaluate(z) / majorant.evaluate(w)
    return lo * (1.0 - rel_tol) <= ratio <= hi * (1.0 + rel_tol)


def constant_candidates(
    grid: tuple[float, ...] = DEFAULT_CONSTANT_GRID,
) -> "list[HarmonicMajorant]":
    return [HarmonicMajorant(c) for c in grid]


def search_majorant(predicate, candidates=None) -> HarmonicMajorant | None:
    """First candidate majorant satisfying ``predicate``, or None.

    A None return means no witness was found in the searched family; it never
    certifies that no positive harmonic witness exists.
    """
    if candidates is None:
        candidates = constant_candidates()
    for h in candidates:
        if predicate(h):
            return h
    return None
