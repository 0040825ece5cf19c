#!/usr/bin/env python3
"""Render the four comparison figures from a simulator results directory.

Reads the aggregate CSVs written by the wsnsim CLI
(<protocol>_agg_<metric>.csv with columns round,mean,ci_low,ci_high,min,
max,n) and draws one figure per metric, overlaying every protocol found
as a mean line with a shaded band. The band is the Student-t confidence
interval by default; --band minmax switches to the min/max envelope.

Usage:
    python plot_results.py --results DIR --out DIR [--band ci|minmax]
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

METRICS = (
    ("dead", "Dead Nodes"),
    ("sent_to_bs", "Packets Sent to Base Station"),
    ("received_at_bs", "Packets Received by Base Station"),
    ("dropped", "Packets Dropped"),
)

PROTOCOL_LABELS = {
    "dreem-me": "DREEM-ME",
    "leach": "LEACH",
    "leach-c": "LEACH-C (simplified)",
}

PROTOCOL_COLORS = {
    "dreem-me": "tab:blue",
    "leach": "tab:orange",
    "leach-c": "tab:green",
}


class MissingInputError(FileNotFoundError):
    """The results directory holds no aggregate CSVs."""


def load_series(path: Path) -> dict[str, list[float]]:
    """Read one aggregate CSV into column lists."""
    columns: dict[str, list[float]] = {}
    with open(path, newline="") as handle:
        for row in csv.DictReader(handle):
            for key, value in row.items():
                columns.setdefault(key, []).append(float(value))
    return columns


def discover_aggregates(results_dir: Path) -> dict[str, dict[str, Path]]:
    """Map protocol -> metric -> aggregate CSV path."""
    found: dict[str, dict[str, Path]] = {}
    for path in sorted(results_dir.glob("*_agg_*.csv")):
        protocol, _, metric = path.stem.partition("_agg_")
        found.setdefault(protocol, {})[metric] = path
    if not found:
        raise MissingInputError(f"no aggregate CSVs (*_agg_*.csv) found in {results_dir}")
    return found


def build_figure(metric: str, label: str, series_by_protocol: dict[str, dict[str, list[float]]], band: str = "ci"):
    """One metric figure: a mean line plus shaded band per protocol."""
    fig, ax = plt.subplots(figsize=(8, 5))
    lo_key, hi_key = ("ci_low", "ci_high") if band == "ci" else ("min", "max")
    for protocol, series in sorted(series_by_protocol.items()):
        color = PROTOCOL_COLORS.get(protocol)
        ax.plot(
            series["round"],
            series["mean"],
            label=PROTOCOL_LABELS.get(protocol, protocol),
            color=color,
            linewidth=1.2,
        )
        ax.fill_between(series["round"], series[lo_key], series[hi_key], alpha=0.25, color=color)
    ax.set_xlabel("Round")
    ax.set_ylabel(label)
    band_name = "95% confidence band" if band == "ci" else "min/max envelope"
    ax.set_title(f"{label} per round ({band_name})")
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    return fig, ax


def render(results_dir: Path, out_dir: Path, band: str = "ci") -> list[Path]:
    """Write one image per metric; returns the paths written."""
    aggregates = discover_aggregates(Path(results_dir))
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    for metric, label in METRICS:
        series_by_protocol = {
            protocol: load_series(paths[metric])
            for protocol, paths in aggregates.items()
            if metric in paths
        }
        if not series_by_protocol:
            continue
        fig, _ = build_figure(metric, label, series_by_protocol, band=band)
        path = out_dir / f"{metric}.png"
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(path)
    return written


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--results", type=Path, required=True, help="directory with aggregate CSVs")
    parser.add_argument("--out", type=Path, required=True, help="directory for the images")
    parser.add_argument("--band", choices=("ci", "minmax"), default="ci")
    args = parser.parse_args(argv)
    try:
        written = render(args.results, args.out, band=args.band)
    except MissingInputError as exc:
        print(f"plot_results: {exc}", file=sys.stderr)
        return 1
    for path in written:
        print(path)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
