"""JSON encoding of every persistent artifact.

Complex numbers and points are written as {"re": ..., "im": ...}; all other
structures are plain dicts and lists, so the files stay language neutral.
``dumps`` sorts keys and uses shortest-roundtrip floats, making artifacts
byte-stable across runs for identical inputs.
"""

from __future__ import annotations

import json
from typing import Any

from .blaschke import BlaschkeProduct
from .covering import Covering
from .divdiff import LabeledSequence, SupStatistic
from .geometry import DiskPoint
from .interpolate import CardinalInterpolant, InterpolantChain, base_interpolate
from .majorant import HarmonicMajorant
from .separation import PartitionResult


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def complex_to_json(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def complex_from_json(data: dict) -> complex:
    return complex(data["re"], data["im"])


def point_to_json(p: DiskPoint) -> dict:
    return {"re": p.re, "im": p.im}


def point_from_json(data: dict) -> DiskPoint:
    return DiskPoint(data["re"], data["im"])


def sequence_to_json(seq: LabeledSequence) -> dict:
    return {
        "points": [point_to_json(p) for p in seq.points],
        "labels": None
        if seq.labels is None
        else [seq.labels[p] for p in seq.points],
        "values": None
        if seq.values is None
        else [complex_to_json(seq.values[p]) for p in seq.points],
    }


def sequence_from_json(data: dict) -> LabeledSequence:
    points = tuple(point_from_json(d) for d in data["points"])
    labels = data.get("labels")
    values = data.get("values")
    return LabeledSequence(
        points,
        labels=None
        if labels is None
        else {p: int(j) for p, j in zip(points, labels)},
        values=None
        if values is None
        else {p: complex_from_json(v) for p, v in zip(points, values)},
    )


def majorant_to_json(h: HarmonicMajorant) -> dict:
    return {
        "constant": h.constant,
        "atoms": [{"theta": theta, "weight": weight} for theta, weight in h.atoms],
    }


def majorant_from_json(data: dict) -> HarmonicMajorant:
    return HarmonicMajorant(
        data["constant"],
        tuple((a["theta"], a["weight"]) for a in data.get("atoms", [])),
    )


def partition_to_json(result: PartitionResult) -> dict:
    return {
        "parts": [[point_to_json(p) for p in part] for part in result.parts],
        "witness": majorant_to_json(result.witness),
    }


def partition_from_json(data: dict) -> PartitionResult:
    return PartitionResult(
        tuple(tuple(point_from_json(p) for p in part) for part in data["parts"]),
        majorant_from_json(data["witness"]),
    )


def covering_to_json(cov: Covering) -> dict:
    centers = list(cov.centers)
    index = {c: i for i, c in enumerate(centers)}
    assigned_points = list(cov.assignment)
    return {
        "centers": [point_to_json(c) for c in centers],
        "radii": [cov.radii[c] for c in centers],
        "alpha": cov.alpha,
        "beta": cov.beta,
        "start_constant": cov.start_constant,
        "majorant": majorant_to_json(cov.majorant),
        "assignment": {
            "points": [point_to_json(p) for p in assigned_points],
            "center_index": [index[cov.assignment[p]] for p in assigned_points],
        },
    }


def covering_from_json(data: dict) -> Covering:
    centers = tuple(point_from_json(c) for c in data["centers"])
    radii = {c: r for c, r in zip(centers, data["radii"])}
    points = [point_from_json(p) for p in data["assignment"]["points"]]
    assignment = {
        p: centers[i] for p, i in zip(points, data["assignment"]["center_index"])
    }
    return Covering(
        centers=centers,
        radii=radii,
        majorant=majorant_from_json(data["majorant"]),
        alpha=data["alpha"],
        beta=data["beta"],
        assignment=assignment,
        start_constant=data["start_constant"],
    )


def chain_to_json(chain: InterpolantChain) -> dict:
    return {
        "parts": [[point_to_json(p) for p in part] for part in chain.parts],
        "stage_values": [
            [complex_to_json(v) for v in stage.values] for stage in chain.stages
        ],
        "local_witness": majorant_to_json(chain.local_witness),
    }


def chain_from_json(data: dict) -> InterpolantChain:
    parts = tuple(
        tuple(point_from_json(p) for p in part) for part in data["parts"]
    )
    stages = []
    for part, values in zip(parts, data["stage_values"]):
        stages.append(
            base_interpolate(part, [complex_from_json(v) for v in values])
        )
    return InterpolantChain(
        parts=parts,
        products=tuple(BlaschkeProduct(part) for part in parts[:-1]),
        stages=tuple(stages),
        local_witness=majorant_from_json(data["local_witness"]),
    )


def statistic_to_json(stat: SupStatistic) -> dict:
    return {
        "order": stat.order,
        "sup": stat.sup,
        "log_sup": stat.log_sup,
        "witness": [point_to_json(p) for p in stat.witness],
        "majorant": majorant_to_json(stat.majorant),
    }
