"""Finite Blaschke products and interpolation margins.

A product is an ordered list of zeros; the empty list is the constant 1.
Modulus-sensitive quantities (margins, lower bounds) are computed as sums of
log distances, since products of many factors underflow in linear scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import DiskPoint, blaschke_factor, point_to_set_dist, pseudo_dist
from .majorant import HarmonicMajorant


@dataclass(frozen=True)
class BlaschkeProduct:
    """Product of disk automorphisms vanishing at ``zeros`` (with multiplicity)."""

    zeros: tuple[DiskPoint, ...] = ()

    def evaluate(self, z: "DiskPoint | complex") -> complex:
        value = complex(1.0)
        for zero in self.zeros:
            value *= blaschke_factor(zero, z)
        return value

    def __call__(self, z: "DiskPoint | complex") -> complex:
        return self.evaluate(z)

    def log_modulus(self, z: DiskPoint) -> float:
        """sum_k log dist(zero_k, z); -inf when z is one of the zeros."""
        total = 0.0
        for zero in self.zeros:
            d = pseudo_dist(zero, z)
            if d == 0.0:
                return -math.inf
            total += math.log(d)
        return total

    def deflate(self, lam: DiskPoint) -> "BlaschkeProduct":
        """Remove one occurrence of ``lam`` from the zero list."""
        try:
            i = self.zeros.index(lam)
        except ValueError:
            raise ValueError(f"{lam} is not a zero of this product") from None
        return BlaschkeProduct(self.zeros[:i] + self.zeros[i + 1 :])


@dataclass(frozen=True)
class MarginReport:
    """Interpolation margin of one point against the rest of its sequence.

    ``margin`` is the deflated-product modulus prod_{mu != lam} dist(mu, lam),
    which equals (1 - |lam|^2) |B'(lam)|.  ``margin_conservative`` is the
    smaller variant (1 - |lam|) |B'(lam)|; the two differ by the factor
    (1 + |lam|) in [1, 2] and both comparisons against e^{-H(lam)} are
    reported.  Comparisons are done in log scale.
    """

    point: DiskPoint
    margin: float
    log_margin: float
    margin_conservative: float
    threshold_log: float
    satisfied: bool
    satisfied_conservative: bool


def interpolation_margin(
    points: "list[DiskPoint] | tuple[DiskPoint, ...]",
    lam: DiskPoint,
    majorant: HarmonicMajorant,
) -> MarginReport:
    """Margin of ``lam`` within ``points`` and its test against e^{-H(lam)}."""
    if lam not in points:
        raise ValueError(f"{lam} is not a member of the sequence")
    log_margin = 0.0
    for mu in points:
        if mu == lam:
            continue
        d = pseudo_dist(mu, lam)
        if d == 0.0:
            raise ValueError(f"sequence contains a repeat of {mu}")
        log_margin += math.log(d)
    threshold_log = -majorant.evaluate(lam)
    margin = math.exp(log_margin) if log_margin > -745.0 else 0.0
    log_conservative = log_margin + math.log1p(-abs(lam)) - math.log1p(abs(lam)) \
        if abs(lam) > 0.0 else log_margin
    # margin / (1 + |lam|) * ... : conservative = margin * (1-|lam|)/(1-|lam|^2)
    margin_conservative = margin / (1.0 + abs(lam))
    return MarginReport(
        point=lam,
        margin=margin,
        log_margin=log_margin,
        margin_conservative=margin_conservative,
        threshold_log=threshold_log,
        satisfied=log_margin >= threshold_log,
        satisfied_conservative=(log_margin - math.log(1.0 + abs(lam))) >= threshold_log,
    )


def margin_reports(
    points: "list[DiskPoint] | tuple[DiskPoint, ...]",
    majorant: HarmonicMajorant,
) -> list[MarginReport]:
    return [interpolation_margin(points, lam, majorant) for lam in points]


@dataclass(frozen=True)
class LocalBoundRow:
    z: DiskPoint
    product_modulus: float
    bound: float
    log_product: float
    log_bound: float
    holds: bool


@dataclass(frozen=True)
class LocalBoundReport:
    """Sampled check of |B(z)| >= e^{-H1(z)} * dist(z, zero set)."""

    rows: tuple[LocalBoundRow, ...]

    @property
    def all_hold(self) -> bool:
        return all(row.holds for row in self.rows)

    @property
    def min_slack(self) -> float:
        """Smallest log |B(z)| - log bound over the samples (inf if all trivial)."""
        slacks = [
            row.log_product - row.log_bound
            for row in self.rows
            if row.log_bound > -math.inf
        ]
        return min(slacks) if slacks else math.inf


def local_lower_bound_check(
    points: "list[DiskPoint] | tuple[DiskPoint, ...]",
    candidate: HarmonicMajorant,
    samples: "list[DiskPoint] | tuple[DiskPoint, ...]",
) -> LocalBoundReport:
    """Check the product lower bound at each sample point.

    At a sample coinciding with a zero both sides vanish and the row holds
    trivially.  The check certifies ``candidate`` only on the given samples;
    it is a report, not a proof over the whole disk.
    """
    if not points:
        raise ValueError("empty zero set")
    product = BlaschkeProduct(tuple(points))
    rows = []
    for z in samples:
        log_product = product.log_modulus(z)
        dist = point_to_set_dist(z, points)
        if dist == 0.0:
            rows.append(
                LocalBoundRow(z, 0.0, 0.0, -math.inf, -math.inf, True)
            )
            continue
        log_bound = -candidate.evaluate(z) + math.log(dist)
        rows.append(
            LocalBoundRow(
                z=z,
                product_modulus=math.exp(log_product) if log_product > -745.0 else 0.0,
                bound=math.exp(log_bound) if log_bound > -745.0 else 0.0,
                log_product=log_product,
                log_bound=log_bound,
                holds=log_product >= log_bound,
            )
        )
    return LocalBoundReport(tuple(rows))
