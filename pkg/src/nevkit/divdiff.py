"""Pseudohyperbolic divided differences and their sup statistics.

The order-j difference of values ``w`` on a tuple of distinct points is

    dd^0 w(p1)            = w(p1)
    dd^j w(p1, ..., pj+1) = (dd^{j-1} w(p2..pj+1) - dd^{j-1} w(p1..pj))
                            / blaschke_factor(p1)(pj+1)

The interesting statistic is the exact maximum over all ordered tuples of
distinct points of |dd^{n-1} w| * e^{-(H(p1)+...+H(pn))} for a candidate
positive harmonic H.  Enumeration is level-by-level with memoized
sub-tuples, so the full maximum costs O(n * m^n) arithmetic instead of
O(n! * m^n); all values are carried in log-polar form (see ``logcomplex``)
so magnitudes survive any clustering scale.

The modulus |dd^j| is symmetric in the two arguments at order 1 but *not*
invariant under permutations at higher order, so no symmetry pruning is
applied: all ordered tuples are enumerated.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field

from .geometry import DiskPoint, blaschke_factor
from .logcomplex import LogComplex, lc_div, lc_sub
from .majorant import HarmonicMajorant, combine

DEFAULT_BUDGET = 1_000_000
DEFAULT_ORDER_CAP = 4


class BudgetExceeded(ValueError):
    """Raised instead of silently truncating a tuple enumeration."""


@dataclass(frozen=True)
class LabeledSequence:
    """Finite sequence of distinct points with optional labels and values.

    ``labels`` assigns each point a subsequence index starting at 1;
    ``values`` assigns each point a complex target value.  Whenever present,
    each map must cover every point.
    """

    points: tuple[DiskPoint, ...]
    labels: dict[DiskPoint, int] | None = None
    values: dict[DiskPoint, complex] | None = None

    def __post_init__(self) -> None:
        if len(set(self.points)) != len(self.points):
            raise ValueError("sequence points must be pairwise distinct")
        if self.labels is not None:
            if set(self.labels) != set(self.points):
                raise ValueError("labels must cover exactly the sequence points")
            if any(j < 1 for j in self.labels.values()):
                raise ValueError("subsequence labels start at 1")
        if self.values is not None:
            if set(self.values) != set(self.points):
                raise ValueError("values must cover exactly the sequence points")

    def __len__(self) -> int:
        return len(self.points)

    @property
    def label_count(self) -> int:
        if self.labels is None:
            return 1
        return max(self.labels.values())

    def part(self, index: int) -> tuple[DiskPoint, ...]:
        if self.labels is None:
            if index != 1:
                raise ValueError("unlabeled sequence has only part 1")
            return self.points
        return tuple(p for p in self.points if self.labels[p] == index)

    def parts(self) -> list[tuple[DiskPoint, ...]]:
        return [self.part(j) for j in range(1, self.label_count + 1)]

    def with_values(self, values: dict[DiskPoint, complex]) -> "LabeledSequence":
        return LabeledSequence(self.points, self.labels, dict(values))


def _check_tuple(values: dict[DiskPoint, complex], points: tuple[DiskPoint, ...]) -> None:
    if len(set(points)) != len(points):
        raise ValueError("tuple has repeated points, not a valid ordered tuple")
    for p in points:
        if p not in values:
            raise ValueError(f"no value assigned at {p}")


def _divdiff_windows(
    vals: list[LogComplex], pts: tuple[DiskPoint, ...]
) -> LogComplex:
    """Divided difference over the full tuple via the contiguous-window DP."""
    level = vals
    width = len(pts)
    for j in range(1, width):
        nxt = []
        for i in range(width - j):
            den = LogComplex.from_complex(blaschke_factor(pts[i], pts[i + j]))
            nxt.append(lc_div(lc_sub(level[i + 1], level[i]), den))
        level = nxt
    return level[0]


def divided_difference(
    values: dict[DiskPoint, complex], points: tuple[DiskPoint, ...]
) -> complex:
    """dd^{k-1} of ``values`` over an ordered tuple of k distinct points."""
    if not points:
        raise ValueError("empty tuple")
    _check_tuple(values, points)
    vals = [LogComplex.from_complex(values[p]) for p in points]
    return _divdiff_windows(vals, points).to_complex()


def divided_difference_log(
    values: dict[DiskPoint, complex], points: tuple[DiskPoint, ...]
) -> LogComplex:
    """Same as :func:`divided_difference` but keeps the log-polar value."""
    if not points:
        raise ValueError("empty tuple")
    _check_tuple(values, points)
    vals = [LogComplex.from_complex(values[p]) for p in points]
    return _divdiff_windows(vals, points)


@dataclass(frozen=True)
class SupStatistic:
    """Exact maximum of |dd^{order}| * e^{-sum H} with its witness tuple."""

    order: int
    sup: float
    log_sup: float
    witness: tuple[DiskPoint, ...]
    majorant: HarmonicMajorant

    @property
    def finite(self) -> bool:
        return self.log_sup < math.inf


def sup_statistic(
    seq: LabeledSequence,
    n: int,
    majorant: HarmonicMajorant,
    budget: int = DEFAULT_BUDGET,
    order_cap: int = DEFAULT_ORDER_CAP,
) -> SupStatistic:
    """Maximize |dd^{n-1} w| * e^{-(H(p1)+...+H(pn))} over ordered n-tuples.

    The maximum is exact (full enumeration); ties on the value are broken
    toward the lexicographically smallest witness tuple so parallel or
    re-ordered evaluation cannot change the result.
    """
    if seq.values is None:
        raise ValueError("sequence carries no values")
    if n < 1:
        raise ValueError("tuple length must be >= 1")
    if n > order_cap:
        raise ValueError(
            f"tuple length {n} exceeds the order cap {order_cap}; "
            "raise order_cap explicitly if this size is intended"
        )
    m = len(seq.points)
    if m < n:
        raise ValueError(f"need at least {n} points, got {m}")
    if m**n > budget:
        raise BudgetExceeded(
            f"enumerating {m}^{n} = {m**n} tuples exceeds the budget {budget}; "
            "raise the budget or subsample the sequence"
        )
    points = seq.points
    h_at = [majorant.evaluate(p) for p in points]
    keys = [p.sort_key() for p in points]
    vals0 = [LogComplex.from_complex(seq.values[p]) for p in points]

    # level j holds dd^{j-1} for every ordered j-tuple of distinct indices
    level: dict[tuple[int, ...], LogComplex]
    level = {(i,): vals0[i] for i in range(m)}
    for j in range(2, n):
        nxt: dict[tuple[int, ...], LogComplex] = {}
        for tup in itertools.permutations(range(m), j):
            den = LogComplex.from_complex(
                blaschke_factor(points[tup[0]], points[tup[-1]])
            )
            nxt[tup] = lc_div(lc_sub(level[tup[1:]], level[tup[:-1]]), den)
        level = nxt

    best_log = -math.inf
    best_key: tuple | None = None
    best_tup: tuple[int, ...] | None = None
    for tup in itertools.permutations(range(m), n):
        if n == 1:
            value = level[tup]
        else:
            den = LogComplex.from_complex(
                blaschke_factor(points[tup[0]], points[tup[-1]])
            )
            value = lc_div(lc_sub(level[tup[1:]], level[tup[:-1]]), den)
        log_stat = value.log_mag - sum(h_at[i] for i in tup)
        if math.isnan(log_stat):  # 0 * inf cannot occur, but guard stays cheap
            log_stat = -math.inf
        key = tuple(keys[i] for i in tup)
        if log_stat > best_log or (
            log_stat == best_log and (best_key is None or key < best_key)
        ):
            best_log, best_key, best_tup = log_stat, key, tup

    assert best_tup is not None
    sup = math.exp(best_log) if best_log < 709.0 else math.inf
    if best_log == -math.inf:
        sup = 0.0
    return SupStatistic(
        order=n - 1,
        sup=sup,
        log_sup=best_log,
        witness=tuple(points[i] for i in best_tup),
        majorant=majorant,
    )


@dataclass(frozen=True)
class InclusionBound:
    """Certificate that the order-(n-1) statistic is bounded by ``constant``."""

    majorant: HarmonicMajorant
    constant: float


def inclusion_bound(
    seq: LabeledSequence,
    n: int,
    majorant: HarmonicMajorant,
    budget: int = DEFAULT_BUDGET,
) -> InclusionBound:
    """Constructive step down the chain of divided-difference spaces.

    Given that the order-n statistic is finite under ``majorant``, produce a
    constant K such that the order-(n-1) statistic under the *same* majorant
    is at most K.  Telescoping any n-tuple against base points taken from the
    first points of the sequence expresses dd^{n-1} as n order-n differences
    (each bounded by the order-n statistic) plus one anchor value; maximizing
    the base-point factor over all candidate base tuples makes the constant
    uniform.
    """
    m = len(seq.points)
    if m < 2 * n:
        raise ValueError(f"need at least {2 * n} points to pick base tuples, got {m}")
    if seq.values is None:
        raise ValueError("sequence carries no values")
    stat = sup_statistic(seq, n + 1, majorant, budget=budget)

    prefix = seq.points[: 2 * n]
    h_at = {p: majorant.evaluate(p) for p in prefix}
    max_base_factor = 0.0
    max_anchor = 0.0
    for base in itertools.combinations(prefix, n):
        max_base_factor = max(max_base_factor, math.exp(sum(h_at[p] for p in base)))
        anchor = divided_difference_log(seq.values, tuple(reversed(base)))
        max_anchor = max(max_anchor, math.exp(min(anchor.log_mag, 709.0)))
    constant = n * stat.sup * max_base_factor + max_anchor
    return InclusionBound(majorant=majorant, constant=constant)


def _as_function(f):
    if callable(f):
        return f
    if hasattr(f, "evaluate"):
        return f.evaluate
    raise TypeError(f"cannot evaluate object of type {type(f)!r}")


@dataclass(frozen=True)
class TraceInclusionReport:
    """Sampled check that a disk function has controlled divided differences."""

    order: int
    samples: int
    max_ratio: float
    max_ratio_log: float
    witness: tuple[DiskPoint, ...]
    violations: int
    majorant: HarmonicMajorant


def trace_inclusion_check(
    f,
    n: int,
    value_majorant: HarmonicMajorant,
    samples: int = 1000,
    seed: int = 0,
    max_radius: float = 0.99,
) -> TraceInclusionReport:
    """Sample |dd^{n-1} f| <= e^{H~(z1)+...+H~(zn)} on random disk tuples.

    ``value_majorant`` must satisfy |f(z)| <= e^{H(z)} on the disk; the
    majorant for order n-1 is then grown by the doubling rule
    H~ <- 2 H~ + log 4 once per order.  The report carries the worst ratio
    and the number of sampled violations (zero when the majorant hypothesis
    genuinely holds).
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    fn = _as_function(f)
    grown = value_majorant
    for _ in range(n - 1):
        grown = combine([grown], [2.0], math.log(4.0))
    rng = random.Random(seed)

    best_log = -math.inf
    best: tuple[DiskPoint, ...] = ()
    violations = 0
    for _ in range(samples):
        tup: list[DiskPoint] = []
        while len(tup) < n:
            r = max_radius * math.sqrt(rng.random())
            theta = 2.0 * math.pi * rng.random()
            p = DiskPoint(r * math.cos(theta), r * math.sin(theta))
            if p not in tup:
                tup.append(p)
        vals = [LogComplex.from_complex(complex(fn(p.z))) for p in tup]
        value = _divdiff_windows(vals, tuple(tup))
        ratio_log = value.log_mag - sum(grown.evaluate(p) for p in tup)
        if ratio_log > 0.0:
            violations += 1
        if ratio_log > best_log:
            best_log, best = ratio_log, tuple(tup)
    max_ratio = math.exp(best_log) if best_log < 709.0 else math.inf
    if best_log == -math.inf:
        max_ratio = 0.0
    return TraceInclusionReport(
        order=n - 1,
        samples=samples,
        max_ratio=max_ratio,
        max_ratio_log=best_log,
        witness=best,
        violations=violations,
        majorant=grown,
    )
