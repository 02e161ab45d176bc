"""Command-line front end.

Exit codes: 0 all checks passed, 1 a mathematical property failed (the
report carries the witness), 2 usage or input errors.

The ``--majorant`` option takes a JSON file {"constant": c, "atoms":
[{"theta": t, "weight": w}, ...]}; without it a constant log 8 majorant is
used.  Witness searches walk the constant grid documented in
``majorant.DEFAULT_CONSTANT_GRID``.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

from . import serialize
from .blaschke import margin_reports
from .covering import build_covering, verify_covering
from .divdiff import BudgetExceeded, sup_statistic
from .generate import attach_random_values, clustered, radial_exponential, random_union
from .majorant import HarmonicMajorant
from .pipeline import RESIDUAL_TOL, verify_main_theorem
from .separation import (
    CountConditionExceeded,
    count_condition,
    partition_weakly_separated,
    weakly_separated,
)
from .interpolate import chained_solve, node_residual

GENERATOR_KINDS = ("radial_exponential", "random_union", "clustered")

PRESETS = {
    "radial_n1": {"kind": "radial_exponential", "count": 6, "n": 1},
    "clustered_n2": {
        "kind": "clustered",
        "cluster_size": 2,
        "clusters": 4,
        "intra": 1e-4,
        "n": 2,
    },
    "clustered_n3": {
        "kind": "clustered",
        "cluster_size": 3,
        "clusters": 3,
        "intra": 1e-5,
        "n": 3,
    },
}


@dataclass
class ExperimentConfig:
    command: str
    seed: int = 0
    n: int = 1
    budget: int = 1_000_000
    majorant: HarmonicMajorant = HarmonicMajorant(math.log(8.0))
    input_path: str | None = None
    out_path: str | None = None


class UsageError(Exception):
    pass


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as err:
        raise UsageError(f"cannot read {path}: {err}") from err


def _load_sequence(path: str | None):
    if path is None:
        raise UsageError("--input is required for this command")
    try:
        return serialize.sequence_from_json(_load_json(path))
    except (KeyError, TypeError, ValueError) as err:
        raise UsageError(f"malformed sequence file {path}: {err}") from err


def _emit(report: dict, out_path: str | None) -> None:
    text = serialize.dumps(report)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _config(args: argparse.Namespace) -> ExperimentConfig:
    majorant = HarmonicMajorant(math.log(8.0))
    if getattr(args, "majorant", None):
        try:
            majorant = serialize.majorant_from_json(_load_json(args.majorant))
        except (KeyError, TypeError, ValueError) as err:
            raise UsageError(f"malformed majorant file: {err}") from err
    return ExperimentConfig(
        command=args.command,
        seed=getattr(args, "seed", 0),
        n=getattr(args, "n", 1),
        budget=getattr(args, "budget", 1_000_000),
        majorant=majorant,
        input_path=getattr(args, "input", None),
        out_path=getattr(args, "out", None),
    )


def _cmd_gen(args: argparse.Namespace) -> int:
    cfg = _config(args)
    if args.kind == "radial_exponential":
        seq = radial_exponential(args.count)
    elif args.kind == "random_union":
        seq = random_union(args.n, args.count, cfg.seed, min_sep=args.min_sep)
    elif args.kind == "clustered":
        seq = clustered(args.n, args.count, args.intra, cfg.seed)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown generator {args.kind}")
    if args.with_values:
        seq = attach_random_values(seq, cfg.seed)
    _emit(serialize.sequence_to_json(seq), cfg.out_path)
    return 0


def _cmd_check_sep(args: argparse.Namespace) -> int:
    cfg = _config(args)
    seq = _load_sequence(cfg.input_path)
    sep = weakly_separated(seq.points, cfg.majorant)
    max_count, witness = count_condition(seq.points, cfg.majorant)
    report = {
        "command": "check-sep",
        "separated": sep.separated,
        "violating_pair": None
        if sep.violating_pair is None
        else [serialize.point_to_json(p) for p in sep.violating_pair],
        "max_count": max_count,
        "count_witness": None if witness is None else serialize.point_to_json(witness),
        "count_limit": cfg.n,
        "count_ok": max_count <= cfg.n,
    }
    _emit(report, cfg.out_path)
    return 0 if report["count_ok"] else 1


def _cmd_partition(args: argparse.Namespace) -> int:
    cfg = _config(args)
    seq = _load_sequence(cfg.input_path)
    try:
        result = partition_weakly_separated(seq.points, cfg.majorant, cfg.n)
    except CountConditionExceeded as err:
        _emit(
            {
                "command": "partition",
                "pass": False,
                "witness_point": serialize.point_to_json(err.witness),
                "count": err.count,
                "limit": err.limit,
            },
            cfg.out_path,
        )
        return 1
    report = {"command": "partition", "pass": True}
    report.update(serialize.partition_to_json(result))
    _emit(report, cfg.out_path)
    return 0


def _cmd_cover(args: argparse.Namespace) -> int:
    cfg = _config(args)
    seq = _load_sequence(cfg.input_path)
    if seq.labels is None:
        raise UsageError("cover requires a labeled sequence (run partition first)")
    parts = [part for part in seq.parts() if part]
    try:
        cov = build_covering(parts, cfg.majorant)
    except ValueError as err:
        _emit({"command": "cover", "pass": False, "error": str(err)}, cfg.out_path)
        return 1
    verification = verify_covering(cov, parts)
    report = {
        "command": "cover",
        "pass": verification.all_pass,
        "checks": {c.name: c.passed for c in verification.checks},
        "covering": serialize.covering_to_json(cov),
    }
    _emit(report, cfg.out_path)
    return 0 if verification.all_pass else 1


def _cmd_divdiff(args: argparse.Namespace) -> int:
    cfg = _config(args)
    seq = _load_sequence(cfg.input_path)
    if seq.values is None:
        raise UsageError("divdiff requires a sequence with values")
    try:
        stat = sup_statistic(seq, cfg.n, cfg.majorant, budget=cfg.budget)
    except BudgetExceeded as err:
        raise UsageError(str(err)) from err
    report = {"command": "divdiff"}
    report.update(serialize.statistic_to_json(stat))
    _emit(report, cfg.out_path)
    return 0


def _cmd_margin(args: argparse.Namespace) -> int:
    cfg = _config(args)
    seq = _load_sequence(cfg.input_path)
    rows = margin_reports(seq.points, cfg.majorant)
    report = {
        "command": "margin",
        "pass": all(r.satisfied for r in rows),
        "rows": [
            {
                "point": serialize.point_to_json(r.point),
                "margin": r.margin,
                "margin_conservative": r.margin_conservative,
                "log_margin": r.log_margin,
                "threshold_log": r.threshold_log,
                "satisfied": r.satisfied,
                "satisfied_conservative": r.satisfied_conservative,
            }
            for r in rows
        ],
    }
    _emit(report, cfg.out_path)
    return 0 if report["pass"] else 1


def _cmd_interpolate(args: argparse.Namespace) -> int:
    cfg = _config(args)
    seq = _load_sequence(cfg.input_path)
    if seq.labels is None or seq.values is None:
        raise UsageError("interpolate requires a labeled sequence with values")
    parts = [part for part in seq.parts() if part]
    try:
        chain, _notes = chained_solve(parts, seq.values, cfg.majorant)
    except ValueError as err:
        _emit({"command": "interpolate", "pass": False, "error": str(err)}, cfg.out_path)
        return 1
    residual = node_residual(chain, seq.values)
    tol = RESIDUAL_TOL * (1.0 + max(abs(v) for v in seq.values.values()))
    report = {
        "command": "interpolate",
        "pass": residual <= tol,
        "max_residual": residual,
        "tolerance": tol,
        "chain": serialize.chain_to_json(chain),
    }
    _emit(report, cfg.out_path)
    return 0 if report["pass"] else 1


def _cmd_verify_main(args: argparse.Namespace) -> int:
    cfg = _config(args)
    if args.preset:
        preset = PRESETS[args.preset]
        if preset["kind"] == "radial_exponential":
            seq = radial_exponential(preset["count"])
        else:
            seq = clustered(
                preset["cluster_size"],
                preset["clusters"],
                preset["intra"],
                cfg.seed,
            )
        n = preset["n"]
    else:
        seq = _load_sequence(cfg.input_path)
        n = cfg.n
    report = verify_main_theorem(
        seq, n, cfg.majorant, budget=cfg.budget, seed=cfg.seed
    )
    report["command"] = "verify-main"
    report["preset"] = args.preset
    _emit(report, cfg.out_path)
    return 0 if report["verdict"] == "pass" else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nevkit",
        description="finite-scale interpolation diagnostics on the unit disk",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, *flags: str) -> None:
        if "input" in flags:
            p.add_argument("--input", help="input sequence JSON")
        p.add_argument("--majorant", help="majorant JSON file")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", help="write the report to this path")
        if "n" in flags:
            p.add_argument("--n", type=int, default=1)
        if "budget" in flags:
            p.add_argument("--budget", type=int, default=1_000_000)

    p = sub.add_parser("gen", help="generate a deterministic sequence")
    p.add_argument("--kind", required=True, choices=sorted(GENERATOR_KINDS))
    p.add_argument("--count", type=int, default=6, help="points / clusters per part")
    p.add_argument("--intra", type=float, default=1e-4)
    p.add_argument("--min-sep", type=float, default=0.25)
    p.add_argument("--with-values", action="store_true")
    common(p, "n")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("check-sep", help="weak separation and counting report")
    common(p, "input", "n")
    p.set_defaults(func=_cmd_check_sep)

    p = sub.add_parser("partition", help="split into weakly separated parts")
    common(p, "input", "n")
    p.set_defaults(func=_cmd_partition)

    p = sub.add_parser("cover", help="build and verify the disk covering")
    common(p, "input")
    p.set_defaults(func=_cmd_cover)

    p = sub.add_parser("divdiff", help="divided-difference sup statistic")
    common(p, "input", "n", "budget")
    p.set_defaults(func=_cmd_divdiff)

    p = sub.add_parser("margin", help="interpolation margins per point")
    common(p, "input")
    p.set_defaults(func=_cmd_margin)

    p = sub.add_parser("interpolate", help="chained interpolation over labeled parts")
    common(p, "input")
    p.set_defaults(func=_cmd_interpolate)

    p = sub.add_parser("verify-main", help="run the end-to-end verification")
    p.add_argument("--preset", choices=sorted(PRESETS))
    common(p, "input", "n", "budget")
    p.set_defaults(func=_cmd_verify_main)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
