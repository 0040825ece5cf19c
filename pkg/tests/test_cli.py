"""CLI flags, CSV schemas, manifest, and byte-level determinism."""

import json

import pytest

from wsnsim.cli import AGG_CSV_HEADER, RUN_CSV_HEADER, main

FAST = ["--max-rounds", "120", "--runs", "3"]


def run_cli(tmp_path, *extra):
    out = tmp_path / "results"
    rc = main([*extra, "--out", str(out)])
    return rc, out


def test_single_protocol_file_contract(tmp_path):
    rc, out = run_cli(tmp_path, "--protocol", "dreem-me", "--runs", "5", "--seed", "7", "--max-rounds", "80")
    assert rc == 0
    runs = sorted(out.glob("dreem-me_run*.csv"))
    aggs = sorted(out.glob("dreem-me_agg_*.csv"))
    assert len(runs) == 5
    assert [p.name for p in aggs] == [
        "dreem-me_agg_dead.csv",
        "dreem-me_agg_dropped.csv",
        "dreem-me_agg_received_at_bs.csv",
        "dreem-me_agg_sent_to_bs.csv",
    ]
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["config"]["seed"] == 7
    listed = [p for entry in manifest["outputs"].values() for p in entry["runs"]]
    listed += [p for entry in manifest["outputs"].values() for p in entry["aggregates"].values()]
    for path in listed:
        assert (tmp_path / "results" / path.split("/")[-1]).stat().st_size > 0


def test_default_runs_all_three_protocols(tmp_path):
    rc, out = run_cli(tmp_path, *FAST)
    assert rc == 0
    for flag in ("dreem-me", "leach", "leach-c"):
        assert len(list(out.glob(f"{flag}_run*.csv"))) == 3
        assert len(list(out.glob(f"{flag}_agg_*.csv"))) == 4
    assert (out / "manifest.json").exists()


def test_csv_headers_and_first_row(tmp_path):
    rc, out = run_cli(tmp_path, "--protocol", "dreem-me", *FAST)
    assert rc == 0
    lines = (out / "dreem-me_run1.csv").read_text().splitlines()
    assert lines[0] == RUN_CSV_HEADER
    assert lines[1].startswith("1,90,0,14,")
    agg_lines = (out / "dreem-me_agg_sent_to_bs.csv").read_text().splitlines()
    assert agg_lines[0] == AGG_CSV_HEADER
    # every aggregate row reports the full run count
    assert all(line.rsplit(",", 1)[1] == "3" for line in agg_lines[1:])


def test_byte_identical_reruns(tmp_path):
    rc1, out1 = run_cli(tmp_path / "a", *FAST)
    rc2, out2 = run_cli(tmp_path / "b", *FAST)
    assert rc1 == rc2 == 0
    for path1 in sorted(out1.glob("*.csv")):
        path2 = out2 / path1.name
        assert path1.read_bytes() == path2.read_bytes(), path1.name


def test_config_error_exit_code(tmp_path, capsys):
    rc, _ = run_cli(tmp_path, "--drop-prob", "1.5")
    assert rc == 2
    assert "config error" in capsys.readouterr().err


def test_negative_init_energy_rejected(tmp_path):
    rc, _ = run_cli(tmp_path, "--init-energy", "-0.5")
    assert rc == 2


def test_unknown_flag_is_usage_error(tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["--bogus"])
    assert exc.value.code == 2


def test_unknown_protocol_is_usage_error():
    with pytest.raises(SystemExit):
        main(["--protocol", "teen"])


def test_unwritable_output_dir(tmp_path, capsys):
    blocker = tmp_path / "blocker"
    blocker.write_text("a file, not a directory")
    rc = main(["--protocol", "leach", *FAST, "--out", str(blocker / "sub")])
    assert rc == 1
    assert "io error" in capsys.readouterr().err
