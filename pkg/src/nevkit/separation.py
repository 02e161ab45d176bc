"""Weak separation: tests, counting, partitioning, and the blow-up values.

A finite sequence is weakly separated w.r.t. a majorant H when the disks
D(p, e^{-H(p)}) are pairwise disjoint; disjointness is tested through the
triangle-inequality sufficient condition

    dist(p, q) >= e^{-H(p)} + e^{-H(q)}.

The partition routine splits a sequence whose counting function is bounded
by n into n weakly separated parts by peeling off full clusters at the much
finer radius e^{-10 H} and recursing on the remainder with the majorant
scaled by 10.  The counterexample constructor goes the other way: from
dyadic-square critical radii it produces a value assignment whose order-n
divided difference blows up like the inverse critical radius while all
order-(n-1) differences stay tame.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .divdiff import divided_difference_log
from .geometry import DiskPoint, blaschke_factor, pseudo_dist
from .majorant import HarmonicMajorant, combine

PointSeq = "list[DiskPoint] | tuple[DiskPoint, ...]"


class CountConditionExceeded(ValueError):
    """Counting condition fails: some disk captures more points than allowed."""

    def __init__(self, witness: DiskPoint, count: int, limit: int):
        self.witness = witness
        self.count = count
        self.limit = limit
        super().__init__(
            f"disk around ({witness.re}, {witness.im}) captures {count} points, "
            f"limit is {limit}"
        )


@dataclass(frozen=True)
class SeparationReport:
    separated: bool
    violating_pair: tuple[DiskPoint, DiskPoint] | None


def weakly_separated(points: PointSeq, majorant: HarmonicMajorant) -> SeparationReport:
    """Disjointness of the disks D(p, e^{-H(p)}), with the first violating pair."""
    pts = list(points)
    radii = [math.exp(-majorant.evaluate(p)) for p in pts]
    for i in range(len(pts)):
        for k in range(i + 1, len(pts)):
            if pseudo_dist(pts[i], pts[k]) < radii[i] + radii[k]:
                return SeparationReport(False, (pts[i], pts[k]))
    return SeparationReport(True, None)


def count_condition(
    points: PointSeq, majorant: HarmonicMajorant
) -> tuple[int, DiskPoint | None]:
    """Largest number of sequence points captured by one disk D(p, e^{-H(p)}).

    The center always counts itself, so the result is >= 1 for nonempty
    input.  Returns the max together with the first center attaining it.
    """
    best, witness = 0, None
    pts = list(points)
    for p in pts:
        radius = math.exp(-majorant.evaluate(p))
        count = sum(1 for q in pts if pseudo_dist(p, q) < radius)
        if count > best:
            best, witness = count, p
    return best, witness


@dataclass(frozen=True)
class PartitionResult:
    parts: tuple[tuple[DiskPoint, ...], ...]
    witness: HarmonicMajorant


def _full_cluster_components(
    pts: list[DiskPoint], majorant: HarmonicMajorant, size: int
) -> list[list[DiskPoint]]:
    """Connected components of the full clusters at radius e^{-10 H(p)}.

    A cluster is the point set of a disk D(p, e^{-10 H(p)}) that captures
    exactly ``size`` points.  Overlapping clusters are merged; under the
    counting precondition every component still has at most ``size`` points
    (they all sit inside one disk D(p, e^{-H(p)})).
    """
    fine = combine([majorant], [10.0])
    index = {p: i for i, p in enumerate(pts)}
    parent = list(range(len(pts)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    cluster_sets: list[list[int]] = []
    for p in pts:
        radius = math.exp(-fine.evaluate(p))
        members = [index[q] for q in pts if pseudo_dist(p, q) < radius]
        if len(members) == size:
            cluster_sets.append(members)
    for members in cluster_sets:
        root = find(members[0])
        for i in members[1:]:
            parent[find(i)] = root
    in_cluster = sorted({i for members in cluster_sets for i in members})
    components: dict[int, list[DiskPoint]] = {}
    for i in in_cluster:
        components.setdefault(find(i), []).append(pts[i])
    return [components[r] for r in sorted(components, key=lambda r: min(
        index[p] for p in components[r]))]


def _partition(
    pts: list[DiskPoint], majorant: HarmonicMajorant, n: int
) -> list[list[DiskPoint]]:
    count, witness = count_condition(pts, majorant)
    if count > n:
        raise CountConditionExceeded(witness, count, n)
    if n == 1:
        return [list(pts)]

    components = _full_cluster_components(pts, majorant, n)
    clustered = {p for comp in components for p in comp}
    rest = [p for p in pts if p not in clustered]

    parts = _partition(rest, combine([majorant], [10.0]), n - 1)
    parts.append([])

    for comp in components:
        if len(comp) > n:
            raise CountConditionExceeded(comp[0], len(comp), n)
        # one point per part, filling the currently smallest parts first
        order = sorted(range(len(parts)), key=lambda i: (len(parts[i]), i))
        for target, p in zip(order, comp):
            parts[target].append(p)
    return parts


def partition_weakly_separated(
    points: PointSeq, majorant: HarmonicMajorant, n: int
) -> PartitionResult:
    """Split into n parts, each weakly separated under the returned witness.

    Requires count_condition(points, majorant) <= n.  The witness majorant is
    10^{n-1} H + log 8: the recursion runs n-1 levels deep and each level
    refines the separation scale by a factor of 10 in the exponent, so the
    innermost scale must be covered.  The separation of every returned part
    is re-verified before returning.
    """
    if n < 1:
        raise ValueError("part count must be >= 1")
    pts = list(points)
    parts = _partition(pts, majorant, n)
    witness = combine([majorant], [10.0 ** (n - 1)], math.log(8.0))
    for part in parts:
        report = weakly_separated(part, witness)
        if not report.separated:
            raise ValueError(
                f"partition produced a part violating weak separation at "
                f"{report.violating_pair}; the input separation structure is "
                "finer than the witness scale"
            )
    return PartitionResult(tuple(tuple(p) for p in parts), witness)


# -- dyadic squares and critical radii --------------------------------------


@dataclass(frozen=True)
class DyadicSquare:
    """Cell {r e^{it} : 1 - 2^-k <= r < 1 - 2^-(k+1), j w <= t < (j+1) w}
    with angular width w = 2 pi / 2^k; level k >= 0, sector 0 <= j < 2^k.

    The cells tile the disk: every point classifies into exactly one.
    """

    k: int
    j: int

    def __post_init__(self) -> None:
        if self.k < 0 or not 0 <= self.j < 2**self.k:
            raise ValueError(f"invalid dyadic index ({self.k}, {self.j})")

    def contains(self, p: DiskPoint) -> bool:
        return square_of(p) == self


def square_of(p: DiskPoint) -> DyadicSquare:
    r = abs(p)
    k = 0 if r <= 0.0 else max(0, int(-math.log2(1.0 - r)))
    while r >= 1.0 - 2.0 ** -(k + 1):
        k += 1
    while k > 0 and r < 1.0 - 2.0**-k:
        k -= 1
    theta = math.atan2(p.im, p.re) % (2.0 * math.pi)
    width = 2.0 * math.pi / 2**k
    j = min(int(theta / width), 2**k - 1)
    return DyadicSquare(k, j)


@dataclass(frozen=True)
class CriticalRadius:
    """Smallest closed-disk radius at which a point of the cell captures
    capture_count sequence points, together with the capturing center."""

    square: DyadicSquare
    radius: float
    witness: DiskPoint | None


def critical_radii(points: PointSeq, n: int) -> dict[DyadicSquare, CriticalRadius]:
    """Per nonempty dyadic cell: min over cell points of the distance to the
    n-th nearest other point (so the closed disk captures n+1 including the
    center); +inf when the sequence is too small to ever capture n+1."""
    if n < 1:
        raise ValueError("capture parameter must be >= 1")
    pts = list(points)
    cells: dict[DyadicSquare, list[DiskPoint]] = {}
    for p in pts:
        cells.setdefault(square_of(p), []).append(p)
    out: dict[DyadicSquare, CriticalRadius] = {}
    for square, members in cells.items():
        best, witness = math.inf, None
        for p in members:
            dists = sorted(pseudo_dist(p, q) for q in pts)
            if n < len(dists):
                r = dists[n]  # dists[0] == 0 is the center itself
                if r < best:
                    best, witness = r, p
        out[square] = CriticalRadius(square, best, witness)
    return out


# -- blow-up value assignment ------------------------------------------------


@dataclass(frozen=True)
class BlowupRecord:
    """Exact divided-difference identities realized at one selected center."""

    center: DiskPoint
    radius: float
    nearest: tuple[DiskPoint, ...]
    tame_tuple: tuple[DiskPoint, ...]
    tame_value: float  # |dd^{n-1}| at tame_tuple; identically 1 by the product form
    blowup_tuple: tuple[DiskPoint, ...]
    blowup_value: float  # |dd^n| at blowup_tuple
    blowup_target: float  # 1 / radius


@dataclass(frozen=True)
class CounterexampleResult:
    values: dict[DiskPoint, complex]
    records: tuple[BlowupRecord, ...]

    @property
    def centers(self) -> tuple[DiskPoint, ...]:
        return tuple(rec.center for rec in self.records)


def build_counterexample(
    points: PointSeq, n: int, max_centers: int | None = None
) -> CounterexampleResult:
    """Value assignment whose order-n difference blows up like 1/r_critical.

    Greedily selects centers from the per-cell critical-radius witnesses, in
    increasing radius, keeping the closed disks D(center, r) pairwise
    disjoint.  Each selected center gets the product of Blaschke factors at
    its n-1 nearest points as its value; everything else gets 0.  The
    returned records carry, per center, the engine-computed values of the
    two displayed identities:

      |dd^{n-1}(nearest_1..nearest_{n-1}, center)| = 1        (tame)
      |dd^n  (nearest_1..nearest_n, center)|     = 1/r        (blow-up)
    """
    pts = list(points)
    radii = critical_radii(pts, n)
    candidates = sorted(
        (
            (rec.radius, rec.witness)
            for rec in radii.values()
            if rec.witness is not None and math.isfinite(rec.radius)
        ),
        key=lambda t: (t[0], t[1].sort_key()),
    )
    if not candidates:
        raise ValueError(
            "no eligible center: sequence too separated to build a counterexample "
            f"(need at least {n + 1} points)"
        )

    selected: list[tuple[DiskPoint, float]] = []
    for r, alpha in candidates:
        if max_centers is not None and len(selected) >= max_centers:
            break
        if all(
            pseudo_dist(alpha, other) - r - r_other > 0.0
            for other, r_other in selected
        ):
            selected.append((alpha, r))

    def nearest_points(alpha: DiskPoint, count: int) -> list[DiskPoint]:
        others = sorted(
            (q for q in pts if q != alpha),
            key=lambda q: (pseudo_dist(alpha, q), q.sort_key()),
        )
        return others[:count]

    values: dict[DiskPoint, complex] = {p: 0j for p in pts}
    for alpha, _ in selected:
        w = complex(1.0)
        for q in nearest_points(alpha, n - 1):
            w *= blaschke_factor(alpha, q)
        values[alpha] = w

    records = []
    for alpha, r in selected:
        near = tuple(nearest_points(alpha, n))
        tame_tuple = near[: n - 1] + (alpha,)
        blowup_tuple = near + (alpha,)
        tame = divided_difference_log(values, tame_tuple)
        blow = divided_difference_log(values, blowup_tuple)
        records.append(
            BlowupRecord(
                center=alpha,
                radius=r,
                nearest=near,
                tame_tuple=tame_tuple,
                tame_value=math.exp(tame.log_mag) if tame.log_mag < 709.0 else math.inf,
                blowup_tuple=blowup_tuple,
                blowup_value=math.exp(blow.log_mag) if blow.log_mag < 709.0 else math.inf,
                blowup_target=1.0 / r,
            )
        )
    return CounterexampleResult(values=values, records=tuple(records))
