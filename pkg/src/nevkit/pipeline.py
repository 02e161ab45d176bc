"""End-to-end verification pipeline over a finite labeled sequence.

Forward direction: partition into n weakly separated parts, certify the
per-part interpolation margins with a grid-searched majorant, build and
verify the disk covering, extend part values constantly on disks, and solve
a random interpolation problem with the chained construction, checking
node-exact residuals.

Converse direction: build the blow-up value assignment one level below n
(at n = 1 the construction itself) and confirm the two displayed product
identities plus the tameness of the lower-order statistic.

Each step reports pass/fail with a witness; any precondition failure marks
the step failed and skips the remaining dependent steps.
"""

from __future__ import annotations

import math
import random

from .blaschke import margin_reports
from .covering import (
    MIN_FLOOR,
    build_covering,
    extend_values,
    extension_majorants,
    verify_covering,
)
from .divdiff import LabeledSequence, sup_statistic
from .generate import attach_random_values
from .geometry import DiskPoint, pseudo_dist
from .majorant import (
    DEFAULT_CONSTANT_GRID,
    HarmonicMajorant,
    search_majorant,
)
from .separation import (
    CountConditionExceeded,
    build_counterexample,
    partition_weakly_separated,
    weakly_separated,
)
from .interpolate import chained_solve, node_residual
from .serialize import majorant_to_json, point_to_json, sequence_to_json

RESIDUAL_TOL = 1e-9
IDENTITY_RTOL = 1e-9


def _finite(x: float) -> float | None:
    return x if math.isfinite(x) else None


def _point(p: DiskPoint | None):
    return None if p is None else point_to_json(p)


def _floor_candidates() -> list[HarmonicMajorant]:
    return [HarmonicMajorant(c) for c in DEFAULT_CONSTANT_GRID if c >= MIN_FLOOR]


def _separation_floor_ok(parts, majorant) -> bool:
    """Ordered-pair separation dist(a, b) >= e^{-H(a)} within every part."""
    for part in parts:
        for a in part:
            floor = math.exp(-majorant.evaluate(a))
            for b in part:
                if a != b and pseudo_dist(a, b) < floor:
                    return False
    return True


def verify_main_theorem(
    seq: LabeledSequence,
    n: int,
    majorant: HarmonicMajorant,
    budget: int = 1_000_000,
    seed: int = 0,
) -> dict:
    """Run both directions at finite scale; returns a JSON-ready report."""
    steps: list[dict] = []
    failed = False

    def record(name: str, passed: bool, details: dict) -> None:
        steps.append({"name": name, "pass": bool(passed), "details": details})

    def skip(name: str) -> None:
        steps.append({"name": name, "pass": False, "details": {"skipped": True}})

    # -- forward: partition ---------------------------------------------
    parts = None
    try:
        partition = partition_weakly_separated(seq.points, majorant, n)
        parts = [part for part in partition.parts if part]
        record(
            "partition",
            True,
            {
                "part_sizes": [len(part) for part in partition.parts],
                "witness": majorant_to_json(partition.witness),
            },
        )
    except CountConditionExceeded as err:
        failed = True
        record(
            "partition",
            False,
            {
                "witness_point": _point(err.witness),
                "count": err.count,
                "limit": err.limit,
            },
        )

    # -- forward: per-part interpolation margins -------------------------
    if parts is None:
        skip("margins")
    else:
        detail_parts = []
        ok = True
        for part in parts:
            found = search_majorant(
                lambda h, part=part: all(
                    r.satisfied for r in margin_reports(part, h)
                )
            )
            if found is None:
                ok = False
                detail_parts.append({"witness": None})
                continue
            worst = min(r.log_margin for r in margin_reports(part, found))
            detail_parts.append(
                {"witness": majorant_to_json(found), "min_log_margin": _finite(worst)}
            )
        record("margins", ok, {"parts": detail_parts})
        if not ok:
            failed = True

    # -- forward: covering ------------------------------------------------
    cov = None
    if parts is None:
        skip("covering")
    else:
        floor_witness = search_majorant(
            lambda h: _separation_floor_ok(parts, h), _floor_candidates()
        )
        if floor_witness is None:
            failed = True
            record("covering", False, {"witness": None})
        else:
            cov = build_covering(parts, floor_witness)
            report = verify_covering(cov, parts)
            constants_ok = (
                cov.alpha == cov.start_constant - (len(parts) - 1)
                and cov.beta == cov.start_constant + (len(parts) - 1)
            )
            passed = report.all_pass and constants_ok
            record(
                "covering",
                passed,
                {
                    "centers": len(cov.centers),
                    "alpha": cov.alpha,
                    "beta": cov.beta,
                    "checks": {c.name: c.passed for c in report.checks},
                },
            )
            if not passed:
                failed = True
                cov = None

    # -- forward: constant-on-disks extension -----------------------------
    if cov is None or parts is None:
        skip("extension")
    else:
        rng = random.Random(seed)
        part = parts[0]
        values_j = {
            p: complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for p in part
        }
        extended = extend_values(cov, parts, 1, values_j)
        identity = all(extended[p] == values_j[p] for p in part)
        ext_seq = LabeledSequence(seq.points, values=extended)
        base = HarmonicMajorant(MIN_FLOOR)
        chain_majorants = extension_majorants(cov, base, len(parts))
        sups = []
        finite = True
        for k in range(1, len(parts) + 1):
            stat = sup_statistic(ext_seq, k, chain_majorants[k - 1], budget=budget)
            sups.append(_finite(stat.sup))
            finite = finite and stat.finite
        passed = identity and finite
        record(
            "extension",
            passed,
            {"restriction_identity": identity, "sup_by_order": sups},
        )
        if not passed:
            failed = True

    # -- forward: chained interpolation -----------------------------------
    if parts is None:
        skip("interpolation")
    else:
        valued = attach_random_values(seq, seed + 1)
        stat = sup_statistic(valued, n, majorant, budget=budget)
        sep_witness = search_majorant(
            lambda h: all(weakly_separated(part, h).separated for part in parts),
            _floor_candidates(),
        )
        if sep_witness is None:
            failed = True
            record("interpolation", False, {"witness": None})
        else:
            chain, _notes = chained_solve(parts, valued.values, sep_witness)
            residual = node_residual(chain, valued.values)
            max_value = max(abs(v) for v in valued.values.values())
            tol = RESIDUAL_TOL * (1.0 + max_value)
            passed = residual <= tol and stat.finite
            record(
                "interpolation",
                passed,
                {
                    "statistic_sup": _finite(stat.sup),
                    "max_residual": residual,
                    "tolerance": tol,
                },
            )
            if not passed:
                failed = True

    # -- converse: blow-up values ------------------------------------------
    level = max(1, n - 1)
    try:
        blowup = build_counterexample(seq.points, level)
        tame_max = max(rec.tame_value for rec in blowup.records)
        rel_err = max(
            abs(rec.blowup_value - rec.blowup_target) / rec.blowup_target
            for rec in blowup.records
        )
        stat = sup_statistic(
            LabeledSequence(seq.points, values=blowup.values),
            level,
            majorant,
            budget=budget,
        )
        passed = (
            tame_max <= 1.0 + IDENTITY_RTOL
            and rel_err <= IDENTITY_RTOL
            and stat.sup <= 1.0 + IDENTITY_RTOL
        )
        record(
            "counterexample",
            passed,
            {
                "level": level,
                "centers": len(blowup.records),
                "max_tame_value": tame_max,
                "blowup_rel_err": rel_err,
                "low_order_sup": _finite(stat.sup),
            },
        )
        if not passed:
            failed = True
    except ValueError as err:
        failed = True
        record("counterexample", False, {"level": level, "error": str(err)})

    return {
        "n": n,
        "seed": seed,
        "budget": budget,
        "majorant": majorant_to_json(majorant),
        "sequence": sequence_to_json(seq),
        "steps": steps,
        "verdict": "fail" if failed else "pass",
    }
