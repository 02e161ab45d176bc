"""Interpolation by Blaschke cardinal sums and the chained correction scheme.

The base solver interpolates values on a single well-separated node set by

    g(z) = sum_k v_k * N_k(z) / N_k(node_k),   N_k = prod_{i != k} b_{node_i}

which is exact at the nodes and grows at most like sum |v_k| / margin_k.

For a union of parts, the chain interpolates part 1 directly, then corrects
one part per stage without disturbing the already-matched nodes:

    f_j = f_{j-1} + (B_1 ... B_{j-1}) g_j

where B_i is the Blaschke product over part i, so the correction vanishes on
parts 1..j-1, and g_j interpolates the residual targets
(values - f_{j-1}) / (B_1 ... B_{j-1}) on part j.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .blaschke import BlaschkeProduct, local_lower_bound_check
from .geometry import DiskPoint, blaschke_factor, point_to_set_dist
from .logcomplex import LogComplex, lc_div
from .majorant import MIN_CONSTANT, HarmonicMajorant
from .separation import weakly_separated

ILL_CONDITIONED_LOG = math.log(1e-12)


@dataclass(frozen=True)
class CardinalInterpolant:
    """Blaschke cardinal sum over one node set; exact at the nodes."""

    nodes: tuple[DiskPoint, ...]
    values: tuple[complex, ...]
    denominators: tuple[complex, ...]

    def evaluate(self, z: "DiskPoint | complex") -> complex:
        total = 0j
        for k, node in enumerate(self.nodes):
            if self.values[k] == 0j:
                continue
            numerator = complex(1.0)
            for i, other in enumerate(self.nodes):
                if i != k:
                    numerator *= blaschke_factor(other, z)
            total += self.values[k] * numerator / self.denominators[k]
        return total

    def __call__(self, z: "DiskPoint | complex") -> complex:
        return self.evaluate(z)

    @property
    def growth_bound(self) -> float:
        """sup of |g| over the disk: sum |v_k| / margin_k."""
        return sum(
            abs(v) / abs(d) for v, d in zip(self.values, self.denominators)
        )


def base_interpolate(
    nodes: "list[DiskPoint] | tuple[DiskPoint, ...]",
    values: "list[complex] | tuple[complex, ...]",
) -> CardinalInterpolant:
    nodes = tuple(nodes)
    if len(set(nodes)) != len(nodes):
        raise ValueError("interpolation nodes must be distinct")
    if len(values) != len(nodes):
        raise ValueError("one value per node required")
    denominators = []
    for k, node in enumerate(nodes):
        d = complex(1.0)
        for i, other in enumerate(nodes):
            if i != k:
                d *= blaschke_factor(other, node)
        if d == 0j:
            raise ValueError(
                f"cardinal denominator underflowed at node {node}; "
                "the nodes are too clustered for linear-scale interpolation"
            )
        denominators.append(d)
    return CardinalInterpolant(nodes, tuple(complex(v) for v in values), tuple(denominators))


@dataclass(frozen=True)
class InterpolantChain:
    """Stagewise interpolant g_1 + sum_j (B_1...B_{j-1}) g_j over the parts."""

    parts: tuple[tuple[DiskPoint, ...], ...]
    products: tuple[BlaschkeProduct, ...]  # B_1 .. B_{n-1}
    stages: tuple[CardinalInterpolant, ...]
    local_witness: HarmonicMajorant

    def evaluate(self, z: "DiskPoint | complex") -> complex:
        total = self.stages[0].evaluate(z)
        for j in range(1, len(self.stages)):
            factor = complex(1.0)
            for i in range(j):
                factor *= self.products[i].evaluate(z)
            total += factor * self.stages[j].evaluate(z)
        return total

    def evaluate_stagewise(self, z: "DiskPoint | complex") -> complex:
        """Accumulating evaluation; same value as evaluate up to rounding."""
        total = self.stages[0].evaluate(z)
        factor = complex(1.0)
        for j in range(1, len(self.stages)):
            factor *= self.products[j - 1].evaluate(z)
            total += factor * self.stages[j].evaluate(z)
        return total

    def __call__(self, z: "DiskPoint | complex") -> complex:
        return self.evaluate(z)


def _certify_local_witness(
    parts: tuple[tuple[DiskPoint, ...], ...]
) -> HarmonicMajorant:
    """Smallest constant majorant H1 with |B_i(p)| >= e^{-H1(p)} dist(p, part_i)
    at every node p of a later part, then re-checked via the sampled bound."""
    needed = MIN_CONSTANT
    for i, part in enumerate(parts[:-1]):
        product = BlaschkeProduct(tuple(part))
        for later in parts[i + 1 :]:
            for p in later:
                log_b = product.log_modulus(p)
                dist = point_to_set_dist(p, part)
                needed = max(needed, math.log(dist) - log_b)
    witness = HarmonicMajorant(needed * (1.0 + 1e-12) + 1e-12)
    for i, part in enumerate(parts[:-1]):
        later_nodes = [p for later in parts[i + 1 :] for p in later]
        report = local_lower_bound_check(part, witness, later_nodes)
        if not report.all_hold:
            raise AssertionError("local witness certification failed")
    return witness


@dataclass(frozen=True)
class StageNote:
    stage: int
    node: DiskPoint
    target_magnitude: float
    nearest: tuple[tuple[int, float], ...]  # (earlier part index, distance)
    far_pair: bool  # some nearest distance exceeds 1/2
    ill_conditioned: bool  # |B_1...B_{j-1}| below 1e-12 at the node


def chained_solve(
    parts: "list[tuple[DiskPoint, ...] | list[DiskPoint]]",
    values: dict[DiskPoint, complex],
    majorant: HarmonicMajorant,
) -> tuple[InterpolantChain, tuple[StageNote, ...]]:
    """Build the chain over disjoint, weakly separated parts.

    ``majorant`` is the separation certificate for each part (checked) and
    the candidate growth majorant used later in stage bound reports.  The
    returned notes record, per stage node, the residual-target magnitude,
    nearest-neighbor distances to every earlier part (flagged when > 1/2,
    where the stage growth bound loses its stated constant), and whether the
    target division was ill-conditioned.
    """
    parts = [tuple(part) for part in parts]
    union: set[DiskPoint] = set()
    for part in parts:
        for p in part:
            if p in union:
                raise ValueError(f"point {p} appears in more than one part")
            union.add(p)
        report = weakly_separated(part, majorant)
        if not report.separated:
            raise ValueError(
                f"part is not weakly separated under the given majorant at "
                f"{report.violating_pair}"
            )
    missing = union.difference(values)
    if missing:
        raise ValueError(f"values missing at {len(missing)} points")

    products = tuple(BlaschkeProduct(part) for part in parts[:-1])
    stages: list[CardinalInterpolant] = [
        base_interpolate(parts[0], [values[p] for p in parts[0]])
    ]
    notes: list[StageNote] = []
    for p in parts[0]:
        notes.append(
            StageNote(1, p, abs(values[p]), (), False, False)
        )

    for j in range(2, len(parts) + 1):
        part = parts[j - 1]
        targets = []
        for p in part:
            prior = stages[0].evaluate(p)
            factor_prior = complex(1.0)
            for i in range(1, j - 1):
                factor_prior *= products[i - 1].evaluate(p)
                prior += factor_prior * stages[i].evaluate(p)

            divisor_log, divisor_phase = 0.0, 0.0
            for i in range(j - 1):
                for zero in products[i].zeros:
                    b = blaschke_factor(zero, p)
                    divisor_log += math.log(abs(b))
                    divisor_phase += cmath.phase(b)
            divisor = LogComplex(divisor_log, divisor_phase)
            target_lc = lc_div(LogComplex.from_complex(values[p] - prior), divisor)
            target = target_lc.to_complex()
            targets.append(target)

            nearest = tuple(
                (i + 1, point_to_set_dist(p, parts[i])) for i in range(j - 1)
            )
            notes.append(
                StageNote(
                    stage=j,
                    node=p,
                    target_magnitude=abs(target),
                    nearest=nearest,
                    far_pair=any(d > 0.5 for _, d in nearest),
                    ill_conditioned=divisor.log_mag < ILL_CONDITIONED_LOG,
                )
            )
        stages.append(base_interpolate(part, targets))

    chain = InterpolantChain(
        parts=tuple(parts),
        products=products,
        stages=tuple(stages),
        local_witness=_certify_local_witness(tuple(parts)),
    )
    return chain, tuple(notes)


def node_residual(chain: InterpolantChain, values: dict[DiskPoint, complex]) -> float:
    """Largest |chain(p) - values[p]| over all nodes."""
    worst = 0.0
    for part in chain.parts:
        for p in part:
            worst = max(worst, abs(chain.evaluate(p) - values[p]))
    return worst


@dataclass(frozen=True)
class StageBoundRow:
    stage: int
    node: DiskPoint
    magnitude: float
    bound: float
    within: bool
    far_pair: bool


def stage_bound_report(
    chain: InterpolantChain,
    majorant: HarmonicMajorant,
    local_witness: HarmonicMajorant | None = None,
) -> tuple[StageBoundRow, ...]:
    """Per stage-node check |g_j(node)| <= e^{2 j (H(node) + H1(node))}.

    The bound presumes the majorant controls the divided differences of the
    target values and that nearest pairs across parts sit within distance
    1/2; nodes violating the latter are flagged rather than bounded.
    """
    h1 = local_witness if local_witness is not None else chain.local_witness
    rows = []
    for j, stage in enumerate(chain.stages, start=1):
        for node, value in zip(stage.nodes, stage.values):
            exponent = 2.0 * j * (majorant.evaluate(node) + h1.evaluate(node))
            bound = math.exp(exponent) if exponent < 709.0 else math.inf
            nearest = [
                point_to_set_dist(node, chain.parts[i]) for i in range(j - 1)
            ]
            rows.append(
                StageBoundRow(
                    stage=j,
                    node=node,
                    magnitude=abs(value),
                    bound=bound,
                    within=abs(value) <= bound,
                    far_pair=any(d > 0.5 for d in nearest),
                )
            )
    return tuple(rows)
