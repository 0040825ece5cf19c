"""Figure replication from a default simulator results directory.

Exercises the plot script strictly through the simulator's external
surfaces: the results are produced by invoking the CLI as a subprocess
and the script consumes only the CSV files it wrote.
"""

import subprocess
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from plot_results import MissingInputError, build_figure, discover_aggregates, load_series, main, render


@pytest.fixture(scope="module")
def default_results(tmp_path_factory):
    out = tmp_path_factory.mktemp("results")
    proc = subprocess.run(
        [sys.executable, "-m", "wsnsim.cli", "--out", str(out)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr
    return out


def test_render_writes_four_nonempty_images(default_results, tmp_path):
    written = render(default_results, tmp_path / "figs")
    assert sorted(p.name for p in written) == [
        "dead.png",
        "dropped.png",
        "received_at_bs.png",
        "sent_to_bs.png",
    ]
    for path in written:
        assert path.stat().st_size > 1000


def test_every_figure_overlays_three_protocols_with_bands(default_results):
    aggregates = discover_aggregates(default_results)
    assert sorted(aggregates) == ["dreem-me", "leach", "leach-c"]
    for metric, label in (("dead", "Dead Nodes"), ("sent_to_bs", "Packets Sent to Base Station")):
        series = {p: load_series(paths[metric]) for p, paths in aggregates.items()}
        fig, ax = build_figure(metric, label, series)
        assert len(ax.lines) == 3  # one mean line per protocol
        assert len(ax.collections) >= 3  # one shaded band per protocol
        labels = [line.get_label() for line in ax.lines]
        assert "LEACH-C (simplified)" in labels


def test_dead_curve_for_dreem_me_ends_at_ninety(default_results):
    aggregates = discover_aggregates(default_results)
    series = {"dreem-me": load_series(aggregates["dreem-me"]["dead"])}
    fig, ax = build_figure("dead", "Dead Nodes", series)
    (line,) = ax.lines
    assert line.get_ydata()[-1] == 90.0


def test_minmax_band_option(default_results, tmp_path):
    written = render(default_results, tmp_path / "figs", band="minmax")
    assert len(written) == 4


def test_single_protocol_results_still_render(default_results, tmp_path):
    only = tmp_path / "only_dreem"
    only.mkdir()
    for path in default_results.glob("dreem-me_agg_*.csv"):
        (only / path.name).write_bytes(path.read_bytes())
    written = render(only, tmp_path / "figs")
    assert len(written) == 4


def test_empty_directory_is_a_missing_input_error(tmp_path):
    with pytest.raises(MissingInputError):
        render(tmp_path, tmp_path / "figs")
    assert main(["--results", str(tmp_path), "--out", str(tmp_path / "figs")]) == 1


def test_cli_entry_point(default_results, tmp_path):
    rc = main(["--results", str(default_results), "--out", str(tmp_path / "figs")])
    assert rc == 0
    assert len(list((tmp_path / "figs").glob("*.png"))) == 4
