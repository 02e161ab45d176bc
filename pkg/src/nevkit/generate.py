"""Deterministic sequence generators for experiments and tests.

Every generator is a pure function of its parameters and seed: the same call
always yields the same LabeledSequence, byte for byte after serialization.
"""

from __future__ import annotations

import math
import random

from .divdiff import LabeledSequence
from .geometry import DiskPoint, pseudo_dist

MAX_RADIAL_COUNT = 49  # 1 - 2^-50 is too close to the boundary to represent


def radial_exponential(count: int) -> LabeledSequence:
    """Real points 1 - 2^-k, k = 1..count; the classical model sequence."""
    if not 1 <= count <= MAX_RADIAL_COUNT:
        raise ValueError(f"count must be in 1..{MAX_RADIAL_COUNT}")
    points = tuple(DiskPoint(1.0 - 2.0**-k, 0.0) for k in range(1, count + 1))
    return LabeledSequence(points, labels={p: 1 for p in points})


def _draw_point(rng: random.Random, max_radius: float) -> DiskPoint:
    r = max_radius * math.sqrt(rng.random())
    theta = 2.0 * math.pi * rng.random()
    return DiskPoint(r * math.cos(theta), r * math.sin(theta))


def random_union(
    parts: int,
    per_part: int,
    seed: int,
    min_sep: float = 0.25,
    cross_floor: float = 1e-3,
    max_radius: float = 0.85,
) -> LabeledSequence:
    """Union of ``parts`` point sets, each internally separated by ``min_sep``.

    Points of different parts stay at least ``cross_floor`` apart so the
    instances are well conditioned for interpolation; set it near zero to
    stress the cross-part machinery.
    """
    if parts < 1 or per_part < 1:
        raise ValueError("parts and per_part must be >= 1")
    rng = random.Random(seed)
    points: list[DiskPoint] = []
    labels: dict[DiskPoint, int] = {}
    for label in range(1, parts + 1):
        own: list[DiskPoint] = []
        attempts = 0
        while len(own) < per_part:
            attempts += 1
            if attempts > 20000:
                raise ValueError(
                    "could not place points with the requested separation; "
                    "lower min_sep or per_part"
                )
            cand = _draw_point(rng, max_radius)
            if any(pseudo_dist(cand, q) < min_sep for q in own):
                continue
            if any(pseudo_dist(cand, q) < cross_floor for q in points):
                continue
            own.append(cand)
            points.append(cand)
            labels[cand] = label
    return LabeledSequence(tuple(points), labels=labels)


def clustered(
    cluster_size: int,
    clusters: int,
    intra: float,
    seed: int,
    center_sep: float = 0.35,
    max_radius: float = 0.75,
) -> LabeledSequence:
    """Tight clusters of ``cluster_size`` points at pseudohyperbolic scale
    ``intra``, with cluster centers separated by ``center_sep``.

    Within each cluster the points are labeled 1..cluster_size, so the
    labels form cluster_size transversal parts.
    """
    if cluster_size < 1 or clusters < 1:
        raise ValueError("cluster_size and clusters must be >= 1")
    if not 0.0 < intra < 0.1:
        raise ValueError("intra-cluster scale must be in (0, 0.1)")
    rng = random.Random(seed)
    centers: list[DiskPoint] = []
    attempts = 0
    while len(centers) < clusters:
        attempts += 1
        if attempts > 20000:
            raise ValueError("could not place cluster centers; lower center_sep")
        cand = _draw_point(rng, max_radius)
        if all(pseudo_dist(cand, c) >= center_sep for c in centers):
            centers.append(cand)

    points: list[DiskPoint] = []
    labels: dict[DiskPoint, int] = {}
    for center in centers:
        # euclidean offset ~ intra * (1 - |c|^2) gives pseudohyperbolic
        # spacing ~ intra near the center
        scale = intra * (1.0 - abs(center) ** 2)
        for i in range(cluster_size):
            theta = 2.0 * math.pi * (i / cluster_size) + 0.3 * rng.random()
            factor = 1.0 + 0.2 * rng.random()
            p = DiskPoint(
                center.re + scale * factor * math.cos(theta),
                center.im + scale * factor * math.sin(theta),
            )
            points.append(p)
            labels[p] = i + 1
    seq = LabeledSequence(tuple(points), labels=labels)
    return seq


def attach_random_values(
    seq: LabeledSequence, seed: int, magnitude: float = 1.0
) -> LabeledSequence:
    """Assign each point an independent uniform value in the disk of radius
    ``magnitude``; deterministic in the seed and the point order."""
    rng = random.Random(seed)
    values: dict[DiskPoint, complex] = {}
    for p in seq.points:
        r = magnitude * math.sqrt(rng.random())
        theta = 2.0 * math.pi * rng.random()
        values[p] = complex(r * math.cos(theta), r * math.sin(theta))
    return seq.with_values(values)


GENERATORS = {
    "radial_exponential": radial_exponential,
    "random_union": random_union,
    "clustered": clustered,
}
