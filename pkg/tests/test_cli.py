import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from arcs_completion.cli import main

GOLDEN = Path(__file__).parent / "golden"
CASES = json.loads((GOLDEN / "cases.json").read_text())


def run_cli(argv, stdin=None, env=None):
    return subprocess.run(
        [sys.executable, "-m", "arcs_completion.cli", *argv],
        input=stdin,
        capture_output=True,
        text=True,
        env=env,
    )


@pytest.mark.parametrize("case", CASES, ids=[c["name"] for c in CASES])
def test_golden(case, capsys):
    code = main([*case["argv"], str(GOLDEN / case["input"])])
    out = capsys.readouterr().out
    assert code == case["exit"]
    assert out == (GOLDEN / case["expected"]).read_text()


def test_errors_are_json():
    for case in CASES:
        if case["exit"]:
            doc = json.loads((GOLDEN / case["expected"]).read_text())
            assert set(doc["error"]) == {"type", "message"}


def test_stdin_input():
    case = next(c for c in CASES if c["name"] == "hom")
    r = run_cli(case["argv"], stdin=(GOLDEN / case["input"]).read_text())
    assert r.returncode == 0
    assert r.stdout == (GOLDEN / case["expected"]).read_text()


def test_out_flag(tmp_path, capsys):
    case = next(c for c in CASES if c["name"] == "render_empty")
    target = tmp_path / "disc.svg"
    assert main([*case["argv"], str(GOLDEN / case["input"]), "--out", str(target)]) == 0
    assert capsys.readouterr().out == ""
    assert target.read_text() == (GOLDEN / case["expected"]).read_text()


def test_usage_errors_exit_2():
    assert run_cli(["frobnicate"]).returncode == 2
    assert run_cli(["tstruct"]).returncode == 2


def test_missing_file(capsys):
    assert main(["hom", "/nonexistent/input.json"]) == 1
    assert json.loads(capsys.readouterr().out)["error"]["type"] == "io"


def test_non_object_document(tmp_path, capsys):
    path = tmp_path / "list.json"
    path.write_text("[1, 2]")
    assert main(["hom", str(path)]) == 1
    assert json.loads(capsys.readouterr().out)["error"]["type"] == "format"


def test_output_independent_of_hash_seed():
    case = next(c for c in CASES if c["name"] == "tstruct_largest")
    outs = set()
    for seed in ("0", "12345"):
        env = dict(os.environ, PYTHONHASHSEED=seed)
        outs.add(run_cli([*case["argv"], str(GOLDEN / case["input"])], env=env).stdout)
    assert len(outs) == 1
