"""End-to-end checks of the command line interface.

Everything goes through cli.main(argv) with captured stdio except one
smoke test that execs the installed console script.
"""

import json
import shutil
import subprocess

import jsonschema
import pytest

from superhecke import cli
from superhecke.combinatorics import HookParams, Multipartition
from superhecke.superfunctions import q_mu

FLAGSHIP_MU = "(2,1,1);(3,2,2,1);(4,3,1)"
FLAGSHIP_PARAMS = "1|1,1|2,1|3"
FLAGSHIP_SEQ = "1,3,2,4,6,7,9,2,2,5,4,7,8,6,5,7,3,4,6,8"


def run(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# the three advertised invocations


def test_verify_frobenius_m1_n2(capsys):
    code, out, err = run(
        capsys, ["verify", "--m", "1", "--n", "2", "--suite", "frobenius"]
    )
    assert code == 0
    assert out == "[PASS] frobenius\nPASS\n"
    assert err == ""


def test_weight_diagnostic_flagship(capsys):
    code, out, err = run(
        capsys,
        [
            "weight",
            "--mu", FLAGSHIP_MU,
            "--params", FLAGSHIP_PARAMS,
            "--sequence", FLAGSHIP_SEQ,
            "--diagnostic",
        ],
    )
    assert code == 0
    lines = out.splitlines()
    assert "weight: 0" in lines
    assert (
        "local-factor product (no up-down gate): q^-2*Q1^3*Q2^4*Q3^13" in lines
    )
    assert (
        "  row [13, 14, 15, 16] (component 3): symbols [8, 6, 5, 7]: "
        "NOT up-down" in lines
    )
    assert lines[-1] == (
        "weight is 0 because 1 row(s) fail the up-down condition: [8, 6, 5, 7]"
    )
    # all ten rows of the shape get reported
    assert sum(1 for ln in lines if ln.startswith("  row ")) == 10


def test_rsk_literal_nine_letter_word(capsys):
    code, out, err = run(
        capsys,
        [
            "rsk",
            "--strategy", "literal",
            "--sequence", "4,2,2,1,3,4,4,6,5",
            "--m", "1",
            "--params", "3|3",
        ],
    )
    assert code == 0
    assert out.splitlines() == [
        "sequence: 4,2,2,1,3,4,4,6,5",
        "strategy: literal",
        "S: (x1,x2,x2,y1,y2),(x3,y1,y3),(y1)",
        "T: (1,2,3,4,8),(5,6,9),(7)",
        "labels: NE,NE,NE,SW,SW,NE,SW,NE",
    ]


# ---------------------------------------------------------------------------
# exit codes


def test_enum_without_selector_is_usage_error(capsys):
    code, out, err = run(capsys, ["enum"])
    assert code == 2
    assert "pick exactly one" in err


def test_component_count_mismatch_is_usage_error(capsys):
    code, out, err = run(
        capsys, ["qmu", "--mu", "(2)", "--params", "1|1,1|1"]
    )
    assert code == 2
    assert "mu has 1 components but params describe 2 colors" in err


def test_sequence_length_mismatch_is_usage_error(capsys):
    code, out, err = run(
        capsys,
        ["weight", "--mu", "(2);-", "--params", "1|1,1|1", "--sequence", "1"],
    )
    assert code == 2
    assert "sequence length 1 but |mu| = 2" in err


def test_params_m_mismatch_is_usage_error(capsys):
    code, out, err = run(
        capsys, ["rsk", "--m", "2", "--params", "3|3", "--sequence", "1"]
    )
    assert code == 2
    assert "components but --m" in err


def test_missing_params_is_usage_error(capsys):
    code, out, err = run(capsys, ["qmu", "--mu", "(2)"])
    assert code == 2
    assert "--params is required" in err


def test_out_of_range_symbol_is_usage_error(capsys):
    # 3|3 only provides symbols 1..6
    code, out, err = run(
        capsys, ["rsk", "--params", "3|3", "--sequence", "7"]
    )
    assert code == 2
    assert err.startswith("error:")


def test_sequence_guard_refuses_large_sweep(capsys):
    # default params make (k+l)^n = 16^8, far past the guard
    code, out, err = run(capsys, ["chartable", "--m", "1", "--n", "8"])
    assert code == 3
    assert err.startswith("refused:")
    assert "pass --force to override" in err


def test_shape_guard_refuses_large_enumeration(capsys):
    code, out, err = run(capsys, ["enum", "--multipartitions", "40", "--m", "4"])
    assert code == 3
    assert "exceeds" in err


def test_force_overrides_shape_guard(capsys):
    code, out, err = run(capsys, ["enum", "--multipartitions", "40"])
    assert code == 3
    code, out, err = run(
        capsys, ["enum", "--multipartitions", "40", "--force", "--json"]
    )
    assert code == 0
    assert json.loads(out)["count"] == 37338


def test_failing_verify_exits_one(capsys):
    code, out, err = run(
        capsys,
        [
            "verify",
            "--m", "1",
            "--n", "2",
            "--suite", "bijection",
            "--strategy", "literal",
        ],
    )
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "[FAIL] bijection"
    assert lines[-1] == "FAIL"
    assert any("injective=False" in ln for ln in lines)


def test_verify_all_suites_pass_with_seed(capsys):
    code, out, err = run(
        capsys, ["verify", "--m", "1", "--n", "2", "--seed", "7"]
    )
    assert code == 0
    lines = out.splitlines()
    assert lines == [
        "[PASS] bijection",
        "[PASS] transport",
        "[PASS] frobenius",
        "PASS",
    ]


# ---------------------------------------------------------------------------
# enum


def test_enum_multipartitions_two_colors(capsys):
    code, out, err = run(capsys, ["enum", "--multipartitions", "2", "--m", "2"])
    assert code == 0
    assert out.splitlines() == [
        "(2);-", "(1,1);-", "(1);(1)", "-;(2)", "-;(1,1)"
    ]


def test_enum_standard_tableaux(capsys):
    code, out, err = run(capsys, ["enum", "--std", "(2,1)"])
    assert code == 0
    assert out.splitlines() == ["(1,2),(3)", "(1,3),(2)"]


def test_enum_hook_fillings(capsys):
    code, out, err = run(
        capsys, ["enum", "--sstd", "(2)", "--params", "1|1"]
    )
    assert code == 0
    assert out.splitlines() == ["(x1,x1)", "(x1,y1)"]


def test_enum_empty_result_prints_placeholder(capsys):
    # (2,2) is not a hook shape for a 1|1 alphabet
    code, out, err = run(
        capsys, ["enum", "--sstd", "(2,2)", "--params", "1|1"]
    )
    assert code == 0
    assert out == "(none)\n"


# ---------------------------------------------------------------------------
# qmu / weight agree with the library


def test_qmu_matches_library(capsys):
    code, out, err = run(
        capsys, ["qmu", "--mu", "(2);-", "--params", "1|1,1|1"]
    )
    assert code == 0
    poly = q_mu(
        Multipartition.parse("(2);-"), HookParams.parse("1|1,1|1")
    )
    assert out == str(poly) + "\n"


def test_weight_json_payload(capsys):
    code, out, err = run(
        capsys,
        [
            "weight",
            "--mu", FLAGSHIP_MU,
            "--params", FLAGSHIP_PARAMS,
            "--sequence", FLAGSHIP_SEQ,
            "--diagnostic",
            "--json",
        ],
    )
    assert code == 0
    d = json.loads(out)
    assert d["weight"] == "0"
    assert d["diagnostic"]["product"] == "q^-2*Q1^3*Q2^4*Q3^13"
    rows = d["diagnostic"]["rows"]
    assert len(rows) == 10
    bad = [r for r in rows if r["peak"] is None]
    assert [r["symbols"] for r in bad] == [[8, 6, 5, 7]]


# ---------------------------------------------------------------------------
# rsk trace and text/json consistency


def test_rsk_trace_lists_steps(capsys):
    code, out, err = run(
        capsys,
        [
            "rsk",
            "--strategy", "literal",
            "--sequence", "4,2,2,1,3,4,4,6,5",
            "--params", "3|3",
            "--trace",
        ],
    )
    assert code == 0
    steps = [ln for ln in out.splitlines() if ln.startswith("step ")]
    assert len(steps) == 9
    assert steps[0] == "step 1: insert 4 -> box (1, 1, 1) shape (1)"


def test_rsk_text_and_json_agree(capsys):
    argv = [
        "rsk",
        "--strategy", "literal",
        "--sequence", "4,2,2,1,3,4,4,6,5",
        "--params", "3|3",
    ]
    code, text, _ = run(capsys, argv)
    code2, raw, _ = run(capsys, argv + ["--json"])
    assert code == code2 == 0
    d = json.loads(raw)
    lines = dict(ln.split(": ", 1) for ln in text.splitlines())
    assert lines["S"] == d["S"]
    assert lines["T"] == d["T"]
    assert lines["labels"] == ",".join(d["labels"])
    assert "steps" not in d  # only present with --trace


def test_rsk_json_trace_has_steps(capsys):
    code, out, err = run(
        capsys,
        [
            "rsk",
            "--strategy", "literal",
            "--sequence", "4,2,2,1,3,4,4,6,5",
            "--params", "3|3",
            "--json",
            "--trace",
        ],
    )
    assert code == 0
    d = json.loads(out)
    assert len(d["steps"]) == 9
    assert d["steps"][0]["symbol"] == 4
    assert d["steps"][0]["new_box"] == [1, 1, 1]


# ---------------------------------------------------------------------------
# chartable


def test_chartable_text_m1_n2(capsys):
    code, out, err = run(capsys, ["chartable", "--m", "1", "--n", "2"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["(2)", "(1,1)"]
    assert lines[1].split() == ["(2)", "q*Q1", "Q1^2"]
    assert lines[2].split() == ["(1,1)", "-q^-1*Q1", "Q1^2"]


def test_chartable_specialized_json(capsys):
    code, out, err = run(
        capsys,
        ["chartable", "--m", "1", "--n", "2", "--specialize", "--json"],
    )
    assert code == 0
    d = json.loads(out)
    assert d["specialized"] is True
    # the two-box symmetric group table
    assert d["entries"][0] == ["1", "1"]
    assert d["entries"][1] == ["-1", "1"]


def test_chartable_cache_roundtrip(tmp_path, capsys):
    argv = [
        "chartable", "--m", "2", "--n", "2",
        "--cache-dir", str(tmp_path), "--json",
    ]
    code, first, _ = run(capsys, argv)
    assert code == 0
    cached = list(tmp_path.glob("*.json"))
    assert cached, "expected a cache file"
    json.loads(cached[0].read_text())
    code, second, _ = run(capsys, argv)
    assert code == 0
    assert first == second


def test_chartable_oracle_provenance_skips_sequence_guard(
    capsys, monkeypatch
):
    # oracle route never enumerates sequences, so only the shape guard applies
    monkeypatch.setattr(cli, "SEQ_GUARD", 10)
    code, out, err = run(capsys, ["chartable", "--m", "1", "--n", "2"])
    assert code == 3
    code, out, err = run(
        capsys,
        ["chartable", "--m", "1", "--n", "2", "--provenance", "oracle"],
    )
    assert code == 0


# ---------------------------------------------------------------------------
# json schemas


SCHEMA_CASES = [
    ("enum", ["enum", "--multipartitions", "2", "--m", "2"]),
    ("enum", ["enum", "--sstd", "(2)", "--params", "1|1"]),
    (
        "rsk",
        [
            "rsk",
            "--strategy", "literal",
            "--sequence", "4,2,2,1,3,4,4,6,5",
            "--params", "3|3",
            "--trace",
        ],
    ),
    (
        "weight",
        [
            "weight",
            "--mu", FLAGSHIP_MU,
            "--params", FLAGSHIP_PARAMS,
            "--sequence", FLAGSHIP_SEQ,
            "--diagnostic",
        ],
    ),
    ("qmu", ["qmu", "--mu", "(2);-", "--params", "1|1,1|1"]),
    ("chartable", ["chartable", "--m", "1", "--n", "2"]),
    ("chartable", ["chartable", "--m", "1", "--n", "2", "--specialize"]),
    ("verify", ["verify", "--m", "1", "--n", "2"]),
]


@pytest.mark.parametrize("name,argv", SCHEMA_CASES)
def test_json_output_validates(name, argv, capsys):
    schema = json.loads(cli.schema_path(name).read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    code, out, err = run(capsys, argv + ["--json"])
    assert code == 0
    jsonschema.validate(json.loads(out), schema)


def test_verify_json_reports_default_params(capsys):
    code, out, err = run(
        capsys, ["verify", "--m", "1", "--n", "2", "--json"]
    )
    assert code == 0
    d = json.loads(out)
    assert d["params"] == "2|2"
    assert d["passed"] is True
    assert [s["suite"] for s in d["suites"]] == [
        "bijection", "transport", "frobenius"
    ]


# ---------------------------------------------------------------------------
# determinism and the installed entry point


def test_repeated_invocations_are_identical(capsys):
    argv = ["chartable", "--m", "2", "--n", "2", "--json"]
    _, first, _ = run(capsys, argv)
    _, second, _ = run(capsys, argv)
    assert first == second


def test_console_script_smoke():
    exe = shutil.which("superhecke")
    assert exe, "console script not on PATH"
    proc = subprocess.run(
        [exe, "enum", "--multipartitions", "2", "--m", "2"],
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == [
        "(2);-", "(1,1);-", "(1);(1)", "-;(2)", "-;(1,1)"
    ]
