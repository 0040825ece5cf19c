"""Command-line front end: run replications, write CSVs and a manifest.

Per-run files <protocol>_run<i>.csv carry the raw round metrics;
aggregate files <protocol>_agg_<metric>.csv carry the cross-run mean,
confidence band, and min/max envelope. Floats are serialized with
repr(), the shortest round-tripping decimal, so repeated invocations
with identical flags produce byte-identical CSVs.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__
from .energy import RadioParams
from .engine import RunResult, SimConfig, run_many
from .errors import WsnSimError
from .stats import AGGREGATE_METRICS, AggregateSeries, aggregate

PROTOCOL_FLAGS = {"dreem-me": "dreem_me", "leach": "leach", "leach-c": "leach_c"}

#: Display names; leach-c is a deliberately simplified centralized stand-in
#: and is labeled as such everywhere it is reported.
PROTOCOL_LABELS = {
    "dreem-me": "DREEM-ME",
    "leach": "LEACH",
    "leach-c": "LEACH-C (simplified)",
}

RUN_CSV_HEADER = "round,alive,dead,sent_to_bs,received_at_bs,dropped,energy_consumed_j"
AGG_CSV_HEADER = "round,mean,ci_low,ci_high,min,max,n"


def write_run_csv(path: Path, result: RunResult) -> None:
    lines = [RUN_CSV_HEADER]
    for m in result.rounds:
        lines.append(
            f"{m.round},{m.alive},{m.dead},{m.sent_to_bs},"
            f"{m.received_at_bs},{m.dropped},{m.energy_consumed!r}"
        )
    path.write_text("\n".join(lines) + "\n")


def write_aggregate_csv(path: Path, series: AggregateSeries) -> None:
    lines = [AGG_CSV_HEADER]
    for i in range(len(series.rounds)):
        lines.append(
            f"{int(series.rounds[i])},{float(series.mean[i])!r},"
            f"{float(series.ci_low[i])!r},{float(series.ci_high[i])!r},"
            f"{float(series.minimum[i])!r},{float(series.maximum[i])!r},"
            f"{int(series.n_runs[i])}"
        )
    path.write_text("\n".join(lines) + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wsnsim",
        description=(
            "Round-based energy simulator for regional max-energy clustering "
            "(dreem-me) and its leach / leach-c baselines."
        ),
    )
    parser.add_argument(
        "--protocol",
        action="append",
        choices=sorted(PROTOCOL_FLAGS),
        help="protocol to simulate; repeat for several (default: all three)",
    )
    parser.add_argument("--runs", type=int, default=5, help="replications per protocol")
    parser.add_argument("--seed", type=int, default=1, help="master seed")
    parser.add_argument("--max-rounds", type=int, default=5000)
    parser.add_argument("--drop-prob", type=float, default=0.3)
    parser.add_argument("--nodes-per-region", type=int, default=10)
    parser.add_argument("--packet-bits", type=int, default=4000)
    parser.add_argument("--init-energy", type=float, default=0.5, help="J per node")
    parser.add_argument("--out", type=Path, default=Path("results"), help="output directory")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    protocols = args.protocol or sorted(PROTOCOL_FLAGS)
    started = time.time()

    try:
        radio = RadioParams(packet_bits=args.packet_bits, initial_energy=args.init_energy)
        configs = {
            flag: SimConfig(
                protocol=PROTOCOL_FLAGS[flag],
                radio=radio,
                nodes_per_region=args.nodes_per_region,
                drop_prob=args.drop_prob,
                max_rounds=args.max_rounds,
                seed=args.seed,
                runs=args.runs,
            )
            for flag in protocols
        }
        for config in configs.values():
            config.validate()
    except WsnSimError as exc:
        print(f"wsnsim: config error: {exc}", file=sys.stderr)
        return 2

    try:
        args.out.mkdir(parents=True, exist_ok=True)
        outputs: dict[str, dict] = {}
        for flag in protocols:
            results = run_many(configs[flag])
            run_paths = []
            for i, result in enumerate(results, start=1):
                path = args.out / f"{flag}_run{i}.csv"
                write_run_csv(path, result)
                run_paths.append(str(path))
            agg_paths = {}
            for metric in AGGREGATE_METRICS:
                path = args.out / f"{flag}_agg_{metric}.csv"
                write_aggregate_csv(path, aggregate(results, metric))
                agg_paths[metric] = str(path)
            outputs[flag] = {
                "label": PROTOCOL_LABELS[flag],
                "runs": run_paths,
                "aggregates": agg_paths,
            }

        manifest = {
            "tool": "wsnsim",
            "version": __version__,
            "config": {
                "protocols": list(protocols),
                "runs": args.runs,
                "seed": args.seed,
                "max_rounds": args.max_rounds,
                "drop_prob": args.drop_prob,
                "nodes_per_region": args.nodes_per_region,
                "packet_bits": args.packet_bits,
                "initial_energy": args.init_energy,
                "out": str(args.out),
            },
            "outputs": outputs,
            "duration_seconds": time.time() - started,
        }
        (args.out / "manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    except OSError as exc:
        print(f"wsnsim: io error: {exc}", file=sys.stderr)
        return 1

    return 0


if __name__ == "__main__":
    raise SystemExit(main())
