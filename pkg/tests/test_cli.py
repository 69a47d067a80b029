"""CLI grammar, JSON/DOT output, exit codes, and determinism."""

import io
import json
import subprocess
import sys
from contextlib import redirect_stderr, redirect_stdout

import pytest

from triplet.cli import main
from triplet.virasoro import ObjLabel


def run_cli(argv, env_format=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if env_format is not None:
        monkeypatch.setenv("TRIPLET_OUTPUT", env_format)
    try:
        with redirect_stdout(out), redirect_stderr(err):
            code = main(argv)
    except SystemExit as exc:  # argparse errors
        code = exc.code
    return code, out.getvalue(), err.getvalue()


def test_weights_output():
    code, out, _ = run_cli(["weights", "--p", "2", "--q", "3", "--r", "7", "--s", "1"])
    assert code == 0
    assert json.loads(out) == {"c": "0", "h": "15", "canonical": [7, 1]}


def test_weights_preset():
    code, out, _ = run_cli(["weights", "--pq-preset", "2,5", "--r", "1", "--s", "1"])
    assert code == 0
    assert json.loads(out)["c"] == "-22/5"


def test_preset_conflicts_with_explicit():
    code, _, err = run_cli(["weights", "--pq-preset", "2,3", "--p", "2", "--r", "1", "--s", "1"])
    assert code == 2 and "conflicts" in err


def test_fuse_l_output_round_trips():
    code, out, _ = run_cli(["fuse-L", "--p", "2", "--q", "3", "--m", "3", "--n", "3"])
    assert code == 0
    entries = json.loads(out)["entries"]
    objs = [ObjLabel.from_json(e["obj"]) for e in entries]
    assert [str(o) for o in objs] == ["K'_{1,1}", "L_{7,1}"]


def test_fuse_c_output():
    code, out, _ = run_cli(["fuse-C", "--m", "1", "--n", "1"])
    assert code == 0
    assert json.loads(out) == {
        "entries": [
            {"mult": 1, "obj": {"kind": "Ln", "n": 0}},
            {"mult": 1, "obj": {"kind": "Ln", "n": 2}},
        ]
    }


def test_kac_diagram_json():
    code, out, _ = run_cli(["kac-diagram", "--p", "2", "--q", "3", "--m", "2", "--n", "2"])
    assert code == 0
    payload = json.loads(out)
    assert payload["module"] == {"kind": "KacK", "label": [3, 5]}
    assert len(payload["nodes"]) == 6
    assert len(payload["edges"]) == 8
    layers = {n["layer"] for n in payload["nodes"]}
    assert layers == {"top", "middle", "socle"}


def test_kac_diagram_dot():
    code, out, _ = run_cli(
        ["kac-diagram", "--p", "2", "--q", "3", "--m", "2", "--n", "2", "--format", "dot"]
    )
    assert code == 0
    assert out.startswith("digraph loewy {")
    assert '"L_3_1" [label="L_{3,1} (h=2)"];' in out


def test_kac_diagram_env_default(monkeypatch):
    code, out, _ = run_cli(
        ["kac-diagram", "--p", "2", "--q", "3", "--m", "2", "--n", "2"],
        env_format="dot",
        monkeypatch=monkeypatch,
    )
    assert code == 0 and out.startswith("digraph loewy {")
    code, out, _ = run_cli(
        ["kac-diagram", "--p", "2", "--q", "3", "--m", "2", "--n", "2", "--format", "json"],
        env_format="dot",
        monkeypatch=monkeypatch,
    )
    assert code == 0 and out.startswith("{")


def test_invalid_env_format(monkeypatch):
    code, _, err = run_cli(
        ["kac-diagram", "--p", "2", "--q", "3", "--m", "2", "--n", "2"],
        env_format="yaml",
        monkeypatch=monkeypatch,
    )
    assert code == 2 and "TRIPLET_OUTPUT" in err


def test_exit_2_on_m_less_than_n():
    code, _, err = run_cli(["kac-diagram", "--p", "2", "--q", "3", "--m", "2", "--n", "3"])
    assert code == 2 and "swap" in err


def test_exit_2_on_bad_params():
    code, _, err = run_cli(["weights", "--p", "2", "--q", "4", "--r", "1", "--s", "1"])
    assert code == 2 and "coprime" in err


def test_exit_2_on_unknown_subcommand():
    code, _, _ = run_cli(["frobnicate"])
    assert code == 2


def test_exit_3_on_general_kac_diagram():
    code, _, err = run_cli(["kac-diagram", "--p", "2", "--q", "3", "--r", "4", "--s", "4"])
    assert code == 3 and "K_{4,4}" in err
    # the mm-nn-shaped raw label is served instead of rejected
    code, out, _ = run_cli(["kac-diagram", "--p", "2", "--q", "3", "--r", "3", "--s", "5"])
    assert code == 0 and json.loads(out)["m"] == 2


def test_hexagon_output():
    code, out, _ = run_cli(["hexagon", "--p", "2", "--q", "3"])
    assert code == 0
    payload = json.loads(out)
    assert payload["epsilon"] == 1
    assert payload["residual_zero"] is True
    kinds = [sol["kind"] for sol in payload["solutions"]]
    assert kinds == ["Diagonal", "Parametrized"]
    dims = [sol["intrinsic_dimension"] for sol in payload["solutions"]]
    assert dims == ["1", "-2"]


def test_hexagon_with_t():
    code, out, _ = run_cli(["hexagon", "--p", "2", "--q", "3", "--t", "1/2"])
    assert code == 0
    payload = json.loads(out)
    param = payload["solutions"][1]
    assert param["F_at_t"] == [["-1/2", "1/2"], ["-3/2", "-1/2"]]
    code, _, err = run_cli(["hexagon", "--p", "2", "--q", "3", "--t", "0"])
    assert code == 2


def test_braiding_output():
    code, out, _ = run_cli(["braiding", "--p", "2", "--q", "3", "--n", "1"])
    assert code == 0
    payload = json.loads(out)
    assert payload["channels"] == [0, 2]
    assert payload["table"] == {"0": {"exp": "1"}, "2": {"exp": "0"}}
    assert payload["formula"] == {"0": {"exp": "0"}, "2": {"exp": "1"}}
    assert payload["conventions_differ_by_sign"] is True
    assert payload["balancing"] == {"0": {"exp": "0"}, "2": {"exp": "0"}}
    code, out, _ = run_cli(["braiding", "--p", "2", "--q", "3", "--n", "2"])
    assert code == 0
    assert "table" not in json.loads(out)


def test_decompose_targets():
    for target, first_kind in [
        ("wpq", "KacK"),
        ("wpq-equivariant", "KacK"),
        ("ideal", "SimpleL"),
        ("wprime", "KacDualK11"),
    ]:
        code, out, _ = run_cli(
            ["decompose", "--p", "2", "--q", "3", "--target", target, "--nmax", "3"]
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["entries"][0]["obj"]["kind"] == first_kind
    code, _, _ = run_cli(["decompose", "--p", "2", "--q", "3", "--target", "wpq", "--nmax", "1"])
    assert code == 2


def test_decompose_json_round_trips():
    from fractions import Fraction

    from triplet.virasoro import Params
    from triplet.wpq import decompose_wpq_equivariant

    code, out, _ = run_cli(
        ["decompose", "--p", "2", "--q", "3", "--target", "wpq-equivariant", "--nmax", "4"]
    )
    assert code == 0
    payload = json.loads(out)
    decomp = decompose_wpq_equivariant(Params(2, 3), 4)
    assert payload["n_max"] == decomp.n_max
    for row, entry in zip(payload["entries"], decomp.entries):
        assert ObjLabel.from_json(row["obj"]) == entry.obj
        assert Fraction(row["h"]) == entry.lowest_weight
        assert row["mult"] == entry.mult
        assert row["psl2"] == entry.psl2


def test_o0_check_output():
    code, out, _ = run_cli(["o0-check", "--p", "3", "--q", "4", "--nmax", "3"])
    assert code == 0
    rows = json.loads(out)["rows"]
    assert rows[0] == {"n": 2, "difference": "30", "integral": True}
    assert all(row["integral"] for row in rows)


def test_sl2_subcommand():
    code, out, _ = run_cli(["sl2", "--n", "1", "--op", "irrep"])
    assert code == 0
    payload = json.loads(out)
    assert payload["H"] == [["1", "0"], ["0", "-1"]]
    code, out, _ = run_cli(["sl2", "--n", "1", "--op", "cg", "--m", "1", "--k", "0"])
    assert code == 0
    assert json.loads(out)["projection"] == [["0", "1/2", "-1/2", "0"]]
    code, _, err = run_cli(["sl2", "--n", "1", "--op", "cg"])
    assert code == 2 and "requires" in err
    code, _, _ = run_cli(["sl2", "--n", "2", "--op", "cg", "--m", "2", "--k", "1"])
    assert code == 2


def test_verify_single_suite():
    code, out, _ = run_cli(["verify", "--suite", "exactnum"])
    assert code == 0
    assert "ok   exactnum.rat_addition_exact" in out
    assert out.strip().endswith("properties passed")


def test_determinism_across_repeats(monkeypatch):
    commands = [
        ["weights", "--p", "2", "--q", "3", "--r", "7", "--s", "1"],
        ["fuse-L", "--p", "3", "--q", "4", "--m", "4", "--n", "2"],
        ["fuse-C", "--m", "5", "--n", "3"],
        ["kac-diagram", "--p", "2", "--q", "5", "--m", "3", "--n", "2"],
        ["kac-diagram", "--p", "2", "--q", "3", "--m", "3", "--n", "3", "--format", "dot"],
        ["hexagon", "--p", "3", "--q", "4", "--t", "2/7"],
        ["braiding", "--p", "2", "--q", "5", "--n", "1"],
        ["decompose", "--p", "2", "--q", "3", "--target", "wpq-equivariant", "--nmax", "4"],
        ["o0-check", "--p", "2", "--q", "3", "--nmax", "5"],
        ["sl2", "--n", "3", "--op", "form"],
    ]
    for argv in commands:
        first = run_cli(argv)
        second = run_cli(argv)
        assert first == second
        assert first[0] == 0


def test_console_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "triplet", "weights", "--p", "2", "--q", "3", "--r", "1", "--s", "1"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert json.loads(result.stdout) == {"c": "0", "h": "0", "canonical": [1, 1]}
