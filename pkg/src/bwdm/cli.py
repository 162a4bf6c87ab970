"""Command-line interface.

Subcommands: ``estimate`` (pick the number of clusters, JSON report),
``simulate`` (write a labeled synthetic sample), ``compare`` (index values
per K per criterion), and ``curve`` (two-column K/index CSV for plotting).

Exit codes: 0 success, 2 usage error, 3 data or runtime error. stdout
carries data only; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import json
import sys
import time
from dataclasses import dataclass

import numpy as np

from .baselines import BaselineRecord, ch_index, silhouette_width
from .index import DEFAULT_K_MAX, IndexCurve, select_k
from .io import FIXTURES, load_csv
from .partition import PAMClusterer, PartitionerConfig
from .synthgen import PRESET_NAMES, generate, preset
from .io import write_labeled_csv

_METHOD_ALIASES = {
    "kmedians": "k_spatial_medians",
    "kmeans": "k_means",
    "pam": "pam",
}


@dataclass(frozen=True)
class RunReport:
    """Serializable record of one estimation run."""

    dataset_id: str
    k_max: int
    partitioner: PartitionerConfig
    curve: IndexCurve
    baselines: list[BaselineRecord] | None = None
    wall_time_ms: int = 0

    def to_dict(self) -> dict:
        # wall_time_ms is volatile and deliberately left out so identical
        # runs serialize byte-identically; timing is reported on stderr.
        out = {
            "dataset_id": self.dataset_id,
            "k_max": self.k_max,
            "partitioner": self.partitioner.to_dict(),
            "curve": {
                "n": self.curve.n_samples,
                "best_k": self.curve.best_k,
                "records": [
                    {
                        "k": r.k,
                        "abdm": r.abdm,
                        "awdm": r.awdm,
                        "bwdm": r.bwdm,
                        "degenerate": r.degenerate,
                    }
                    for r in self.curve.records
                ],
            },
        }
        if self.baselines is not None:
            out["baselines"] = [
                {"k": b.k, "index": b.index_name, "value": b.value}
                for b in self.baselines
            ]
        return out


def _add_data_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="path to a numeric CSV file")
    src.add_argument("--preset", choices=PRESET_NAMES + FIXTURES,
                     help="bundled synthetic scenario or real dataset")
    p.add_argument("--drop", default="", metavar="COL[,COL]",
                   help="header columns to drop from --input")
    p.add_argument("--n", type=int, default=300,
                   help="sample size for synthetic presets (default 300)")
    p.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    p.add_argument("--standardize", action="store_true",
                   help="z-score each column before clustering")


def _add_partition_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--kmax", type=int, default=DEFAULT_K_MAX,
                   help=f"largest K to evaluate (default {DEFAULT_K_MAX})")
    p.add_argument("--partitioner", choices=sorted(_METHOD_ALIASES),
                   default="kmedians", help="base clusterer (default kmedians)")
    p.add_argument("--n-init", type=int, default=10, dest="n_init",
                   help="random restarts per K (default 10)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bwdm",
        description="Estimate the number of clusters via the BWDM stopping rule.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    est = sub.add_parser("estimate", help="select K and print a JSON report")
    _add_data_args(est)
    _add_partition_args(est)
    est.add_argument("--out", help="write the JSON report here instead of stdout")

    sim = sub.add_parser("simulate", help="write a labeled synthetic sample as CSV")
    sim.add_argument("--preset", choices=PRESET_NAMES, required=True)
    sim.add_argument("--n", type=int, default=300)
    sim.add_argument("--seed", type=int, default=0)
    sim.add_argument("--out", help="output CSV path (default stdout)")

    cmp_p = sub.add_parser("compare", help="tabulate several indices per K")
    _add_data_args(cmp_p)
    _add_partition_args(cmp_p)
    cmp_p.add_argument("--indices", default="bwdm,ch,silhouette",
                       help="comma list from {bwdm,ch,silhouette}")
    cmp_p.add_argument("--pam-silhouette", action="store_true",
                       help="score silhouette on PAM-native partitions")
    cmp_p.add_argument("--format", choices=("json", "csv"), default="csv")
    cmp_p.add_argument("--out", help="output path (default stdout)")

    cur = sub.add_parser("curve", help="emit the (K, BWDM) curve as CSV")
    _add_data_args(cur)
    _add_partition_args(cur)
    cur.add_argument("--out", help="output CSV path (default stdout)")

    return parser


def _load_data(args) -> tuple[str, np.ndarray]:
    if args.input:
        drop = [c for c in args.drop.split(",") if c]
        return args.input, load_csv(args.input, drop_columns=drop)
    if args.preset in PRESET_NAMES:
        sample = generate(preset(args.preset, n=args.n, seed=args.seed))
        return args.preset, sample.data
    from .io import load_fixture

    return args.preset, load_fixture(args.preset)


def _partitioner_config(args) -> PartitionerConfig:
    return PartitionerConfig(
        method=_METHOD_ALIASES[args.partitioner],
        n_init=args.n_init,
        seed=args.seed,
    )


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_estimate(args) -> int:
    dataset_id, X = _load_data(args)
    config = _partitioner_config(args)
    start = time.perf_counter()
    curve = select_k(X, k_max=args.kmax, config=config, standardize=args.standardize)
    elapsed_ms = int(1000 * (time.perf_counter() - start))
    report = RunReport(
        dataset_id=dataset_id,
        k_max=args.kmax,
        partitioner=config,
        curve=curve,
        wall_time_ms=elapsed_ms,
    )
    print(f"estimate: {dataset_id} best_k={curve.best_k} ({elapsed_ms} ms)",
          file=sys.stderr)
    _emit(json.dumps(report.to_dict(), indent=2) + "\n", args.out)
    return 0


def _cmd_simulate(args) -> int:
    sample = generate(preset(args.preset, n=args.n, seed=args.seed))
    if args.out:
        write_labeled_csv(args.out, sample.data, sample.labels)
    else:
        write_labeled_csv(sys.stdout, sample.data, sample.labels)
    return 0


def _cmd_compare(args) -> int:
    names = [s for s in args.indices.split(",") if s]
    valid = {"bwdm", "ch", "silhouette"}
    if not names or not set(names) <= valid:
        raise UsageError(f"--indices must be a non-empty list from {sorted(valid)}")

    dataset_id, X = _load_data(args)
    config = _partitioner_config(args)
    curve = select_k(X, k_max=args.kmax, config=config, standardize=args.standardize)

    rows: list[tuple[int, str, float]] = []
    for rec in curve.records:
        labels = curve.labels_by_k[rec.k]
        for name in names:
            if name == "bwdm":
                value = rec.bwdm
            elif name == "ch":
                value = ch_index(X, labels)
            else:
                if args.pam_silhouette:
                    labels_s = PAMClusterer(n_clusters=rec.k).fit_predict(X)
                else:
                    labels_s = labels
                value = silhouette_width(X, labels_s)
            rows.append((rec.k, name, value))

    if args.format == "json":
        payload = [{"k": k, "index": name, "value": value} for k, name, value in rows]
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        buf = _io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["k", "index", "value"])
        for k, name, value in rows:
            writer.writerow([k, name, f"{value:.6g}"])
        _emit(buf.getvalue(), args.out)
    return 0


def _cmd_curve(args) -> int:
    dataset_id, X = _load_data(args)
    config = _partitioner_config(args)
    curve = select_k(X, k_max=args.kmax, config=config, standardize=args.standardize,
                     keep_labels=False)
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["k", "bwdm"])
    for rec in curve.records:
        writer.writerow([rec.k, f"{rec.bwdm:.6g}"])
    _emit(buf.getvalue(), args.out)
    return 0


class UsageError(Exception):
    pass


_COMMANDS = {
    "estimate": _cmd_estimate,
    "simulate": _cmd_simulate,
    "compare": _cmd_compare,
    "curve": _cmd_curve,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
