"""Inductive disk covering of a union of weakly separated parts.

Given parts that are individually separated at scale e^{-H} (and H >= log 8
on the points), the construction sweeps the parts one at a time keeping a
set of centers with radii.  At each step a center whose slightly enlarged
disk meets the incoming part absorbs those points (its radius grows by a
quarter of the current gap scale); incoming points missed by every enlarged
disk become new centers with an eighth of the gap scale as radius.  The gap
scale shrinks by e^{-H} per step, so after n steps the radii sit between
e^{-beta H} and e^{-alpha H} with alpha = C - (n-1), beta = C + (n-1).

The verifier re-checks the four output properties by brute force and is kept
free of any knowledge of the construction path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import DiskPoint, pseudo_dist
from .majorant import HarmonicMajorant, combine

MIN_FLOOR = math.log(8.0)


def _check_parts(parts, majorant) -> None:
    seen: set[DiskPoint] = set()
    for part in parts:
        for p in part:
            if p in seen:
                raise ValueError(f"point {p} appears in more than one part")
            seen.add(p)
            if majorant.evaluate(p) < MIN_FLOOR:
                raise ValueError(
                    f"majorant value {majorant.evaluate(p)} at {p} below log 8"
                )
    for part in parts:
        for a in part:
            floor = math.exp(-majorant.evaluate(a))
            for b in part:
                if a != b and pseudo_dist(a, b) < floor:
                    raise ValueError(
                        f"separation precondition fails within a part at "
                        f"({a}, {b}): dist {pseudo_dist(a, b)} < {floor}"
                    )


@dataclass(frozen=True)
class Covering:
    centers: tuple[DiskPoint, ...]
    radii: dict[DiskPoint, float]
    majorant: HarmonicMajorant
    alpha: float
    beta: float
    assignment: dict[DiskPoint, DiskPoint]
    start_constant: float


def build_covering(
    parts: "list[tuple[DiskPoint, ...] | list[DiskPoint]]",
    majorant: HarmonicMajorant,
    start_constant: float | None = None,
) -> Covering:
    """Run the inductive construction over the parts.

    ``start_constant`` is the initial radius exponent C; it must exceed the
    number of parts, and at least 4 so the far-point cases of the gap
    argument have slack.  Defaults to max(n+1, 4).
    """
    n = len(parts)
    if n < 1:
        raise ValueError("need at least one part")
    _check_parts(parts, majorant)
    C = float(start_constant) if start_constant is not None else float(max(n + 1, 4))
    if C <= n or C < 4.0:
        raise ValueError(f"start constant {C} must exceed the part count and be >= 4")

    h_at = {p: majorant.evaluate(p) for part in parts for p in part}

    centers: list[DiskPoint] = list(parts[0])
    radii: dict[DiskPoint, float] = {}
    for p in centers:
        r = math.exp(-C * h_at[p])
        if r == 0.0:
            raise ValueError(
                f"initial radius e^(-{C} * {h_at[p]}) underflows at {p}; "
                "use a smaller separation majorant"
            )
        radii[p] = r

    for k in range(1, n):
        beta_k = C + (k - 1)
        enlarged = {
            lam: radii[lam] + 0.25 * math.exp(-beta_k * h_at[lam]) for lam in centers
        }
        absorbed_center: set[DiskPoint] = set()
        fresh: list[DiskPoint] = []
        for q in parts[k]:
            if any(pseudo_dist(q, lam) < enlarged[lam] for lam in centers):
                for lam in centers:
                    if pseudo_dist(q, lam) < enlarged[lam]:
                        absorbed_center.add(lam)
            else:
                fresh.append(q)
        for lam in centers:
            if lam in absorbed_center:
                radii[lam] = enlarged[lam]
        for q in fresh:
            radii[q] = 0.125 * math.exp(-beta_k * h_at[q])
            centers.append(q)

    assignment: dict[DiskPoint, DiskPoint] = {}
    for part in parts:
        for p in part:
            for lam in centers:  # creation order: earliest center wins
                if pseudo_dist(p, lam) < radii[lam]:
                    assignment[p] = lam
                    break
            else:
                raise ValueError(
                    f"covering construction left {p} uncovered; this indicates "
                    "radius underflow or a violated precondition"
                )

    return Covering(
        centers=tuple(centers),
        radii=radii,
        majorant=majorant,
        alpha=C - (n - 1),
        beta=C + (n - 1),
        assignment=assignment,
        start_constant=C,
    )


@dataclass(frozen=True)
class CoveringCheck:
    name: str
    passed: bool
    witnesses: tuple


@dataclass(frozen=True)
class CoveringReport:
    checks: tuple[CoveringCheck, ...]

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def failing(self) -> list[CoveringCheck]:
        return [c for c in self.checks if not c.passed]


def verify_covering(cov: Covering, parts) -> CoveringReport:
    """Brute-force re-check of the four covering properties.

    coverage      every part point lies in some open disk;
    radius_bounds e^{-beta H} <= r <= e^{-alpha H} at every center;
    disk_gaps     dist(c, c') - r - r' >= e^{-beta H(c)} for ordered pairs;
    one_per_part  no disk holds two points of the same part.
    """
    points = [p for part in parts for p in part]

    uncovered = tuple(
        p
        for p in points
        if not any(pseudo_dist(p, lam) < cov.radii[lam] for lam in cov.centers)
    )

    bad_radius = tuple(
        lam
        for lam in cov.centers
        if not (
            math.exp(-cov.beta * cov.majorant.evaluate(lam))
            <= cov.radii[lam]
            <= math.exp(-cov.alpha * cov.majorant.evaluate(lam))
        )
    )

    bad_gap = []
    for lam in cov.centers:
        floor = math.exp(-cov.beta * cov.majorant.evaluate(lam))
        for mu in cov.centers:
            if mu == lam:
                continue
            gap = pseudo_dist(lam, mu) - cov.radii[lam] - cov.radii[mu]
            if gap < floor:
                bad_gap.append((lam, mu))

    crowded = []
    for lam in cov.centers:
        for part in parts:
            inside = [p for p in part if pseudo_dist(p, lam) < cov.radii[lam]]
            if len(inside) > 1:
                crowded.append((lam, tuple(inside)))

    return CoveringReport(
        (
            CoveringCheck("coverage", not uncovered, uncovered),
            CoveringCheck("radius_bounds", not bad_radius, bad_radius),
            CoveringCheck("disk_gaps", not bad_gap, tuple(bad_gap)),
            CoveringCheck("one_per_part", not crowded, tuple(crowded)),
        )
    )


def extend_values(
    cov: Covering,
    parts,
    j: int,
    values_j: dict[DiskPoint, complex],
) -> dict[DiskPoint, complex]:
    """Extend values given on part ``j`` to the whole union, constant on disks.

    Every point assigned to a disk gets the value at that disk's (unique)
    part-``j`` point, or 0 when the disk misses part ``j``.  Restricted back
    to part ``j`` this is the identity.  Raises when some disk holds two
    part-``j`` points (the one_per_part property fails).
    """
    if not 1 <= j <= len(parts):
        raise ValueError(f"part index {j} out of range 1..{len(parts)}")
    part = list(parts[j - 1])
    if set(values_j) != set(part):
        raise ValueError("values must cover exactly the chosen part")

    disk_value: dict[DiskPoint, complex] = {}
    for lam in cov.centers:
        inside = [p for p in part if pseudo_dist(p, lam) < cov.radii[lam]]
        if len(inside) > 1:
            raise ValueError(
                f"disk at {lam} holds {len(inside)} points of part {j}; "
                "covering violates the one-point-per-part property"
            )
        disk_value[lam] = values_j[inside[0]] if inside else 0j

    return {
        p: disk_value[cov.assignment[p]] for part_ in parts for p in part_
    }


def extension_majorants(
    cov: Covering, value_majorant: HarmonicMajorant, n: int
) -> list[HarmonicMajorant]:
    """Majorants H_1..H_n controlling the extended values order by order.

    H_1 bounds log|values| directly; each later order combines the previous
    majorant with beta copies of the covering majorant plus log 2, matching
    the gap scale e^{-beta H} that separates distinct disks.
    """
    chain = [value_majorant]
    for _ in range(1, n):
        chain.append(combine([chain[-1], cov.majorant], [1.0, cov.beta], math.log(2.0)))
    return chain
