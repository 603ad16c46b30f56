"""End-to-end tests of the command-line interface."""

import json

import pytest

from noninv import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--no-timestamp")
    return code, json.loads(out)


def test_degree_bubble_frozen(capsys):
    code, payload = run_json(capsys, "degree", "bubble", "--n", "3")
    assert code == 0
    assert payload["degree"] == "10/3"
    assert payload["degree_decimal"] == "3.33333333333"
    assert payload["histogram"] == {"0": 4, "2": 1, "4": 1}
    assert payload["domain_size"] == 6


def test_degree_known_values(capsys):
    code, payload = run_json(capsys, "degree", "nibble_bin", "--n", "8")
    assert code == 0 and payload["degree"] == "3/2"
    assert payload["matches_three_halves_histogram"] is True
    code, payload = run_json(capsys, "degree", "carolina", "--n", "3")
    assert code == 0 and payload["degree"] == "3/2"
    code, payload = run_json(capsys, "degree", "tree", "--b", "5", "--k", "2")
    assert code == 0
    assert payload["degree"] == "19/9"
    assert payload["iterate_degree"] == "143/18"
    assert payload["branching"] == [5, 2, 2]


def test_degree_hecke_defaults_to_full_pass(capsys):
    code, payload = run_json(capsys, "degree", "hecke", "--n", "3")
    assert code == 0
    assert payload["word"] == [1, 2]
    assert payload["degree"] == "10/3"
    code, payload = run_json(capsys, "degree", "hecke", "--n", "3",
                             "--word", "1,2,1")
    assert payload["degree"] == "6/1"
    assert payload["image_size"] == 1


def test_byte_identical_without_timestamp(capsys):
    _, a = run(capsys, "degree", "bubble_iter", "--n", "4", "--k", "2",
               "--no-timestamp")
    _, b = run(capsys, "degree", "bubble_iter", "--n", "4", "--k", "2",
               "--no-timestamp")
    assert a == b


def test_timestamp_present_by_default(capsys):
    _, out = run(capsys, "degree", "carolina", "--n", "4")
    payload = json.loads(out)
    assert "timestamp" in payload
    del payload["timestamp"]
    _, clean = run_json(capsys, "degree", "carolina", "--n", "4")
    assert payload == clean


def test_csv_format(capsys):
    code, out = run(capsys, "degree", "bubble", "--n", "3", "--format", "csv",
                    "--no-timestamp")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "key,value"
    assert "degree,10/3" in lines
    assert "histogram.0,4" in lines


def test_table_format(capsys):
    code, out = run(capsys, "degree", "carolina", "--n", "3",
                    "--format", "table", "--no-timestamp")
    assert code == 0
    assert any(line.startswith("degree") and line.rstrip().endswith("3/2")
               for line in out.splitlines())


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["degree", "bogus", "--n", "3"])
    assert exc.value.code == 2
    code, _ = run(capsys, "degree", "hecke", "--n", "3", "--word", "1,x")
    assert code == 2
    code, _ = run(capsys, "search", "ratio", "--n", "3", "--gamma", "1/3")
    assert code == 2


def test_size_limit_needs_force(capsys):
    code, _ = run(capsys, "degree", "bubble", "--n", "9")
    assert code == 2
    err = capsys.readouterr().err
    code, payload = run_json(capsys, "degree", "nibble_bin", "--n", "17",
                             "--force")
    assert code == 0 and payload["degree"] == "3/2"


def test_search_budget_needs_force(capsys):
    code, _ = run(capsys, "search", "ratio", "--n", "8", "--k", "2")
    assert code == 2


def test_verify_suite_passes(capsys):
    code, payload = run_json(capsys, "verify", "lem2", "--n", "5", "--k", "2")
    assert code == 0
    assert payload["ok"] is True
    assert payload["failed"] == 0
    assert all(c["ok"] for c in payload["checks"])


def test_verify_failure_exits_1(capsys, monkeypatch):
    def broken(args):
        return [{"name": "always fails", "ok": False, "detail": "forced"}]

    monkeypatch.setitem(cli._SUITES, "lem2", broken)
    code, payload = run_json(capsys, "verify", "lem2")
    assert code == 1
    assert payload["ok"] is False and payload["failed"] == 1


def test_verify_thm7_exhaustive_reports_18_equalities(capsys):
    code, payload = run_json(capsys, "verify", "thm7", "--n", "3",
                             "--exhaustive")
    assert code == 0
    details = {c["name"]: c["detail"] for c in payload["checks"]}
    assert details["equality only for constant after bijection"] == \
        "18 equality pairs"


def test_search_ratio_witness(capsys):
    code, payload = run_json(capsys, "search", "ratio", "--n", "3", "--k", "2",
                             "--gamma", "2/1")
    assert code == 0
    assert payload["ratio_pow"] == "27/25"
    assert payload["map"] == {"n": 3, "table": [0, 0, 1]}
    assert payload["gamma"] == [2, 0]


def test_sample_shape_and_determinism(capsys):
    args = ("sample", "bulgarian", "--n", "60", "--count", "50",
            "--seed", "9")
    code, a = run_json(capsys, *args)
    _, b = run_json(capsys, *args)
    assert code == 0 and a == b
    assert set(a) == {"command", "system", "n", "samples", "seed", "mean",
                      "stddev"}
    assert a["n"] == 60 and a["samples"] == 50 and a["seed"] == 9
    assert 1.0 <= float(a["mean"]) <= 6.0


def test_series_eta_prefix(capsys):
    code, payload = run_json(capsys, "series", "eta", "--n", "10")
    assert code == 0
    assert payload["coefficients"] == [1, 1, 2, 6, 16, 42, 114, 314, 870,
                                       2426, 6804]


def test_word_bubble_content_flag(capsys):
    code, payload = run_json(capsys, "degree", "word_bubble",
                             "--content", "2,1,1")
    assert code == 0
    assert payload["degree"] == "14/3"
    assert payload["content"] == [2, 1, 1]
