import io
import json
import subprocess
import sys

import pytest

from tridend import cli
from tridend.products import check_tridend_axioms, left, right


def run(*argv):
    out = io.StringIO()
    code = cli.run(list(argv), out)
    return code, out.getvalue()


GOLDEN = [
    (["mul", "--op", "star", "(|,|)", "(|,|)"], "1*((|,|),|) + 1*(|,(|,|)) + 1*(|,|,|)\n"),
    (["mul", "--op", "left", "1/2*(|,|)", "(|,|)"], "1/2*(|,(|,|))\n"),
    (["mul", "--op", "mid", "(|,|,|)", "(|,|)"], "1*(|,|,|,|)\n"),
    (["coprod", "(|,(|,|))"], "1*|⊗(|,(|,|)) + 1*(|,|)⊗(|,|) + 1*(|,(|,|))⊗|\n"),
    (["coprod", "--piece", "left", "(|,(|,|))"], "1*(|,|)⊗(|,|) + 1*(|,(|,|))⊗|\n"),
    (["coprod", "--piece", "right", "((|,|),|) - (|,(|,|))"],
     "1*|⊗((|,|),|) + -1*|⊗(|,(|,|)) + 1*(|,|)⊗(|,|)\n"),
    (["dual", "coprod", "--piece", "mid", "(|,|,|)"], "1*(|,|)⊗(|,|)\n"),
    (["dual", "coprod", "(|,|)"], "1*|⊗(|,|) + 1*(|,|)⊗|\n"),
    (["dual", "mul", "(|,|)", "(|,|)"], "1*((|,|),|) + 1*(|,(|,|))\n"),
    (["quotient", "mul", "(|,|)", "(|,|)"], "1*((|,|),|) + 1*(|,(|,|))\n"),
    (["quotient", "coprod", "((|,|),|)"], "1*|⊗((|,|),|) + 1*(|,|)⊗(|,|) + 1*((|,|),|)⊗|\n"),
    (["series", "--which", "R", "--terms", "7"], "0 1 3 11 45 197 903 4279\n"),
    (["series", "--which", "P", "--terms", "6"], "0 1 1 2 6 22 90\n"),
    (["series", "--which", "primcoass", "--terms", "5"], "0 1 2 6 22 90\n"),
    (["express", "(|,(|,|),|)"], "g·(g≻g)\n"),
    (["enumerate", "--degree", "2"], "((|,|),|)\n(|,(|,|))\n(|,|,|)\n"),
    (["dims", "--max-degree", "5", "--format", "csv"],
     "degree,dim_A,dim_prim_coass,dim_prim_codend,dim_prim_left,dim_prim_right\n"
     "1,1,1,1,1,1\n2,3,2,1,2,2\n3,11,6,2,6,6\n4,45,22,6,22,22\n5,197,90,22,90,90\n"),
]


@pytest.mark.parametrize("argv,expected", GOLDEN, ids=[" ".join(a[:2]) for a, _ in GOLDEN])
def test_golden_outputs(argv, expected):
    assert run(*argv) == (0, expected)


def test_output_is_repeatable():
    for argv, _ in GOLDEN:
        assert run(*argv) == run(*argv)


def test_dims_formats_agree():
    _, text = run("dims", "--max-degree", "3")
    _, js = run("dims", "--max-degree", "3", "--format", "json")
    rows = json.loads(js)
    assert [r["dim_A"] for r in rows] == [1, 3, 11]
    lines = text.strip().splitlines()
    assert lines[0].split() == list(rows[0].keys())
    assert [list(map(int, line.split())) for line in lines[1:]] == [list(r.values()) for r in rows]


@pytest.mark.parametrize("law", cli.LAWS)
def test_verify_laws_pass(law):
    code, out = run("verify", "--law", law, "--max-degree", "3")
    assert code == 0
    assert out.endswith(" 0 violations\n")
    assert len(out.splitlines()) == 1


def test_verify_tri_summary():
    code, out = run("verify", "--law", "tri", "--max-degree", "3")
    assert (code, out) == (0, "tri: 1 cases, 7 identities checked, 0 violations\n")


def test_violations_exit_one_with_tab_separated_lines(monkeypatch):
    monkeypatch.setattr(cli, "_run_law", lambda law, n: check_tridend_axioms(n, left_=right, right_=left))
    code, out = run("verify", "--law", "tri", "--max-degree", "3")
    assert code == 1
    lines = out.splitlines()
    assert lines[-1].startswith("tri: 1 cases, 7 identities checked, ")
    for line in lines[:-1]:
        law, inputs, lhs, rhs = line.split("\t")
        assert law in {"(a≺b)≺c", "(a≻b)≺c", "(a*b)≻c", "(a≻b)·c", "(a≺b)·c", "(a·b)≺c", "(a·b)·c"}
        assert inputs == "(|,|) (|,|) (|,|)"
        assert lhs != rhs
    assert len(lines) > 1


@pytest.mark.parametrize("argv", [
    ["mul", "--op", "mid", "|", "|"],
    ["mul", "(|)", "|"],
    ["mul", "--op", "cross", "|", "|"],
    ["enumerate", "--degree", "-1"],
    ["dims", "--max-degree", "0"],
    ["quotient", "mul", "(|,|,|)", "(|,|)"],
    ["coprod"],
    ["bogus"],
    [],
])
def test_bad_input_exits_two(argv, capsys):
    code, out = run(*argv)
    assert code == 2
    assert out == ""
    assert capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tridend", "mul", "(|,|)", "(|,|)"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout == "1*((|,|),|) + 1*(|,(|,|)) + 1*(|,|,|)\n"
    proc = subprocess.run([sys.executable, "-m", "tridend", "mul", "(|"], capture_output=True, text=True)
    assert proc.returncode == 2
