"""Golden-file tests for the command line.

Set DIFFPOW_REGEN_GOLDEN=1 to rewrite tests/golden/*.json from current output.
"""
import io
import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from diffpow.cli import SUBCOMMANDS, dispatch

GOLDEN = Path(__file__).parent / "golden"
REGEN = bool(os.environ.get("DIFFPOW_REGEN_GOLDEN"))

IDEALS = {
    # ideal, element of the radical, a generator to probe with the oracle
    "x2_y3": ("(x^2, y^3)", "x y", "x^2"),
    "xy_z2": ("(x y, z^2)", "z", "x y"),
    "x2y5_x4y3_x5y": ("(x^2 y^5, x^4 y^3, x^5 y)", "x y", "x^2 y^5"),
    "xy2_x3": ("(x y^2, x^3)", "x", "x y^2"),
}

PER_IDEAL = {
    "compute": [["-n", "2"], ["-n", "3"], ["-n", "2", "--trace"]],
    "power": [["-n", "2"]],
    "decompose": [[]],
    "radical": [[]],
    "closure": [[]],
    "witness": [["--element", "{r}"]],
    "principality": [["--cap", "32"]],
    "nmin": [["--cap", "32"], ["--cap", "32", "--linear"]],
    "contain": [["--dir", "up", "-n", "2"], ["--dir", "down", "-n", "2"]],
    "oracle": [["-n", "2"], ["-n", "2", "--witness", "{g}"]],
    "staircase": [[], ["--powers", "2,3"]],
}
NO_UNIFORM = [["--poly", "0,1"], ["--poly", "0,2"], ["--poly", "3,1"]]
# principal ideals take the rational-constant branch of contain --dir up
EXTRA = {"contain": [["--dir", "up", "-n", "3", "(x^2 y^3)"]]}


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = dispatch(argv, out, err)
    return {"argv": argv, "exit": code, "stdout": out.getvalue(), "stderr": err.getvalue()}


def cases(sub):
    if sub == "no-uniform":
        argvs = [[sub] + a for a in NO_UNIFORM]
    else:
        argvs = []
        for text, r, g in IDEALS.values():
            for extra in PER_IDEAL[sub]:
                argvs.append([sub] + [e.format(r=r, g=g) for e in extra] + [text])
        argvs += [[sub] + a for a in EXTRA.get(sub, [])]
    return [a + j for a in argvs for j in ([], ["--json"])]


@pytest.mark.parametrize("sub", SUBCOMMANDS)
def test_golden(sub):
    path = GOLDEN / f"{sub}.json"
    got = [run(argv) for argv in cases(sub)]
    if REGEN or not path.exists():
        GOLDEN.mkdir(exist_ok=True)
        path.write_text(json.dumps(got, indent=1, ensure_ascii=False) + "\n", encoding="utf-8")
    want = json.loads(path.read_text(encoding="utf-8"))
    assert got == want


@pytest.mark.parametrize("sub", SUBCOMMANDS)
def test_json_schema(sub):
    for argv in cases(sub):
        if "--json" not in argv:
            continue
        r = run(argv)
        if r["exit"] == 0:
            obj = json.loads(r["stdout"])
            assert isinstance(obj["d"], int) and isinstance(obj["gens"], list)


def test_examples():
    r = run(["compute", "-n", "6", "(x^2 y^5, x^4 y^3, x^5 y)"])
    assert (r["exit"], r["stdout"]) == (0, "(x^7 y^6)\n")
    r = run(["principality", "(x^2 y, x^3)"])
    assert r["exit"] == 2 and r["stderr"].startswith("precondition:")
    r = run(["compute", "-n", "0", "(x)"])
    assert r["exit"] == 1 and r["stdout"] == ""


@pytest.mark.parametrize("argv", [
    [], ["frobnicate", "(x)"], ["compute", "(x)"], ["compute", "-n", "2", "(x"],
    ["compute", "-n", "2", "(q)"], ["no-uniform", "--poly", "a,b"],
    ["witness", "--element", "x y z", "(x, y)"],
])
def test_usage_errors(argv):
    assert run(argv)["exit"] == 1


@pytest.mark.parametrize("argv", [
    ["decompose", "(1)", "--vars", "x,y"], ["compute", "-n", "2", "(0)", "--vars", "x,y"],
    ["witness", "--element", "x", "(x y, z^2)"], ["staircase", "(x y, z)"],
    ["contain", "--dir", "down", "-n", "2", "(x y)"], ["no-uniform", "--poly", "0"],
    ["oracle", "-n", "2", "--box", "3,3,3", "(x y, z^2)"],
])
def test_precondition_errors(argv):
    assert run(argv)["exit"] == 2


def test_global_flags_before_subcommand():
    assert run(["--json", "radical", "(x^2, y^3)"]) == {
        **run(["radical", "--json", "(x^2, y^3)"]), "argv": ["--json", "radical", "(x^2, y^3)"]}
    r = run(["--vars", "a,b", "compute", "-n", "2", "(a^2, b^3)"])
    assert r["stdout"] == "(b^4, a^2 b^3, a^3)\n"


def test_indexed_output():
    r = run(["compute", "-n", "2", "(x1 x2 x3 x4 x5)"])
    assert r["stdout"] == "(x1^2 x2^2 x3^2 x4^2 x5^2)\n"


def test_repeat_runs_identical():
    for sub in SUBCOMMANDS:
        for argv in cases(sub)[:4]:
            assert run(argv) == run(argv)


def test_subprocess_matches_in_process():
    argv = ["compute", "-n", "3", "--json", "(x y, z^2)"]
    env = dict(os.environ, PYTHONHASHSEED="123")
    outs = [subprocess.run([sys.executable, "-m", "diffpow", *argv], capture_output=True,
                           text=True, env=dict(env, PYTHONHASHSEED=s)) for s in ("1", "2")]
    assert outs[0].stdout == outs[1].stdout == run(argv)["stdout"]
    assert outs[0].returncode == 0
