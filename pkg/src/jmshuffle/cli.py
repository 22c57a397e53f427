"""Command-line front end: spectrum | mixing | profile | verify | sample.

Every command is deterministic given its config (including the seed) and
emits plot-ready CSV or JSON; nothing is rendered.  Exit codes: 0 success,
2 invalid config, 3 capacity refusal, 4 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass

from .errors import CapacityError, DegenerateSpecError
from .mixing import build_mixing_curves, cutoff_step, limit_profile, profile_comparison_bound
from .oracle import sample_walk
from .spectrum import ShuffleSpec, spectrum_general, spectrum_kstar
from .verify import run_verification

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_CAPACITY = 3
EXIT_VERIFY_FAILED = 4


@dataclass
class RunConfig:
    command: str
    n: int | None = None
    k: int | None = None
    active: frozenset[int] | None = None
    cs: tuple[float, ...] = ()
    t: int | None = None
    tmax: int | None = None
    trials: int = 100000
    seed: int = 0
    out: str | None = None
    format: str = "csv"

    def spec(self) -> ShuffleSpec:
        if self.k is not None:
            return ShuffleSpec.kstar(self.n, self.k)
        return ShuffleSpec.general(self.n, self.active)


def _parse_int_list(text: str) -> frozenset[int]:
    return frozenset(int(v) for v in text.split(",") if v.strip())


def _parse_float_list(text: str) -> tuple[float, ...]:
    return tuple(float(v) for v in text.split(",") if v.strip())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jmshuffle",
        description="Exact spectra and mixing diagnostics for Jucys-Murphy transposition shuffles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, with_chain=True):
        p.add_argument("--config", help="JSON file with flag values; explicit flags win")
        if with_chain:
            p.add_argument("--n", type=int)
            p.add_argument("--k", type=int)
            p.add_argument("--set", dest="active", help="comma list of active indices, e.g. 3,5")
        p.add_argument("--format", choices=("csv", "json"))
        p.add_argument("--out", help="output path (default stdout)")

    p = sub.add_parser("spectrum", help="closed-form eigenvalues and multiplicities")
    common(p)

    p = sub.add_parser("mixing", help="l2 upper bound, character lower bound, exact TV")
    common(p)
    p.add_argument("--tmax", type=int)
    p.add_argument("--c", dest="cs", help="comma list of window offsets for cutoff markers")

    p = sub.add_parser("profile", help="limit profile vs comparison bound on a c-grid")
    common(p)
    p.add_argument("--c", dest="cs", help="comma list of window offsets (default 0)")

    p = sub.add_parser("verify", help="run the invariant battery")
    p.add_argument("--config", help="JSON file with flag values; explicit flags win")
    p.add_argument("--n", type=int)
    p.add_argument("--deep", action="store_true", default=None)

    p = sub.add_parser("sample", help="Monte Carlo walk statistics")
    common(p)
    p.add_argument("--t", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int)

    return parser


def _merge_config(args: argparse.Namespace) -> dict:
    merged = {}
    if getattr(args, "config", None):
        with open(args.config) as fh:
            merged.update(json.load(fh))
    for key, value in vars(args).items():
        if key == "config" or value is None:
            continue
        merged[key] = value
    return merged


def _run_config(args: argparse.Namespace) -> RunConfig:
    merged = _merge_config(args)
    active = merged.get("active") or merged.get("set")
    if isinstance(active, str):
        active = _parse_int_list(active)
    elif isinstance(active, (list, tuple)):
        active = frozenset(int(v) for v in active)
    cs = merged.get("cs", merged.get("c", ()))
    if isinstance(cs, str):
        cs = _parse_float_list(cs)
    elif isinstance(cs, (int, float)):
        cs = (float(cs),)
    else:
        cs = tuple(float(v) for v in cs)
    config = RunConfig(
        command=args.command,
        n=merged.get("n"),
        k=merged.get("k"),
        active=active,
        cs=cs,
        t=merged.get("t"),
        tmax=merged.get("tmax"),
        trials=merged.get("trials", 100000),
        seed=merged.get("seed", 0),
        out=merged.get("out"),
        format=merged.get("format", "csv"),
    )
    if config.command != "verify":
        if config.n is None:
            raise ValueError("--n is required")
        if (config.k is None) == (config.active is None):
            raise ValueError("exactly one of --k / --set must be given")
    if config.format not in ("csv", "json"):
        raise ValueError(f"unknown format {config.format!r}")
    return config


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (list, dict)):
        return json.dumps(value, separators=(",", ":"))
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _emit(config: RunConfig, header: list[str], rows: list[list]) -> None:
    """Write rows of native values; CSV stringifies deterministically,
    JSON keeps lists and numbers as-is."""
    if config.format == "json":
        payload = [dict(zip(header, row)) for row in rows]
        text = json.dumps(payload, separators=(",", ":"), sort_keys=True) + "\n"
    else:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        writer.writerows([[_csv_cell(v) for v in row] for row in rows])
        text = buffer.getvalue()
    if config.out:
        with open(config.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_spectrum(config: RunConfig) -> int:
    spec = config.spec()
    if not spec.is_irreducible:
        print(
            f"warning: active set {sorted(spec.active)} generates a proper subgroup; "
            "the walk is reducible and TV-to-uniform is meaningless",
            file=sys.stderr,
        )
    if spec.is_kstar:
        records = spectrum_kstar(spec.n, spec.k)
        header = ["lambda", "mu", "value_num", "value_den", "multiplicity"]
        rows = [
            [list(r.label[0].parts), list(r.label[1].parts),
             r.value.numerator, r.value.denominator, str(r.multiplicity)]
            for r in records
        ]
    else:
        records = spectrum_general(spec)
        header = ["tableau", "value_num", "value_den", "multiplicity"]
        rows = [
            [[list(row) for row in r.label.rows],
             r.value.numerator, r.value.denominator, str(r.multiplicity)]
            for r in records
        ]
    _emit(config, header, rows)
    return EXIT_OK


def cmd_mixing(config: RunConfig) -> int:
    spec = config.spec()
    n, k = spec.n, spec.k
    t_max = config.tmax
    if t_max is None:
        reference = cutoff_step(n, k, max(config.cs)) if k and config.cs else None
        base = cutoff_step(n, k, 0.0) if k else math.ceil(1.25 * n * math.log(max(n, 2)))
        t_max = max(10, math.ceil(1.25 * base), *( [reference + 1] if reference else [] ))
    rows = []
    for curve in build_mixing_curves(spec, t_max):
        for t, value in curve.points:
            rows.append([t, value, curve.kind, n, k, None])
    if k:
        for c in config.cs:
            rows.append([cutoff_step(n, k, c), c, "cutoff_marker", n, k, c])
    rows.sort(key=lambda row: (row[0], row[2]))
    _emit(config, ["t", "value", "kind", "n", "k", "c"], rows)
    return EXIT_OK


def cmd_profile(config: RunConfig) -> int:
    if config.k is None:
        raise ValueError("profile requires --k (k-star chains only)")
    cs = config.cs or (0.0,)
    rows = [
        [c, limit_profile(c), profile_comparison_bound(config.n, config.k, c),
         config.n, config.k]
        for c in cs
    ]
    _emit(config, ["c", "limit_profile", "comparison_bound", "n", "k"], rows)
    return EXIT_OK


def cmd_verify(config_args: argparse.Namespace) -> int:
    merged = _merge_config(config_args)
    n_max = merged.get("n", 6)
    deep = bool(merged.get("deep", False))
    results = run_verification(n_max=n_max, deep=deep)
    failed = [r for r in results if not r.ok]
    for r in results:
        print(f"{'PASS' if r.ok else 'FAIL'} {r.name} — {r.detail}")
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def cmd_sample(config: RunConfig) -> int:
    spec = config.spec()
    t = config.t if config.t is not None else (cutoff_step(spec.n, spec.k, 0.0) if spec.k else spec.n)
    stats = sample_walk(spec, t, config.trials, config.seed)
    header = ["n", "k", "t", "trials", "seed", "mean_fix_minus_one", "var_fix_minus_one",
              "stderr", "histogram"]
    row = [stats.n, stats.k, stats.t, stats.trials, stats.seed,
           stats.mean_fix_minus_one, stats.var_fix_minus_one, stats.stderr,
           {str(key): value for key, value in sorted(stats.histogram.items())}]
    _emit(config, header, [row])
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args)
        config = _run_config(args)
        handler = {
            "spectrum": cmd_spectrum,
            "mixing": cmd_mixing,
            "profile": cmd_profile,
            "sample": cmd_sample,
        }[config.command]
        return handler(config)
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (ValueError, DegenerateSpecError, OSError) as exc:
        print(f"invalid config: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
