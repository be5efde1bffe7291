import io
import json
import subprocess
import sys

import pytest

from symwedge.cli import run
from symwedge.ring import parse
from symwedge.fundamental import express_in_elementary
from symwedge.sym import to_conventional_e


def call(*argv, stdin=None):
    err = io.StringIO()
    code, out = run(list(argv), stdin=io.StringIO(stdin) if stdin is not None else None, stderr=err)
    return code, out, err.getvalue()


def test_express_text():
    code, out, err = call("express", "-r", "2", "x1^2 + x2^2")
    assert (code, out, err) == (0, "s1^2 - 2*s2\ne1^2 - 2*e2\n", "")


def test_express_infers_arity():
    assert call("express", "x1*x2*x3")[1] == "-s3\ne3\n"


def test_express_json():
    code, out, _ = call("express", "-r", "2", "--json", "x1^2 + x2^2")
    assert code == 0
    assert out == '{"verb":"express","r":2,"delta":2,"sigma_expr":"s1^2 - 2*s2","e_expr":"e1^2 - 2*e2","verified":true}\n'


def test_express_zero():
    code, out, _ = call("express", "-r", "2", "--json", "0")
    assert json.loads(out) == {"verb": "express", "r": 2, "delta": 0, "sigma_expr": "0", "e_expr": "0", "verified": True}


def test_express_reads_stdin():
    assert call("express", "-r", "2", "-", stdin="x1 + x2\n")[1] == "-s1\ne1\n"


def test_express_larger_delta():
    out = json.loads(call("express", "--delta", "3", "--json", "x1 + x2")[1])
    assert out["delta"] == 3 and out["sigma_expr"] == "-s1"


@pytest.mark.parametrize("argv", [
    ("express", "-r", "2", "x1^2 + x2"),
    ("express", "-r", "1", "x1 + x2"),
    ("express", "y + 1"),
    ("express", "--delta", "1", "x1^2 + x2^2"),
    ("divdiff", "-r", "2", "x1"),
    ("divdiff", "x^2"),
    ("divdiff", "-r", "2", "-d", "1", "x^3"),
    ("resultant", "-f", "2*x^2 + 1", "-F", "x"),
    ("resultant", "-f", "x^2"),
    ("bialternant", "-r", "3", "x", "1"),
    ("verify", "s3", "x", "1"),
])
def test_validation_errors_exit_one(argv):
    code, out, err = call(*argv)
    assert code == 1 and out == ""
    assert err.startswith("error: ") and err.count("\n") == 1


@pytest.mark.parametrize("text, offset", [("x1^^2", 3), ("x1 + * 2", 5), ("x1 + z", 5), ("é + x1 ^", 0)])
def test_parse_errors_exit_two_with_offset(text, offset):
    code, out, err = call("express", text)
    assert code == 2 and out == ""
    assert err.startswith("parse error: ")
    assert f"at byte offset {offset}" in err


def test_unknown_flag_is_a_usage_error():
    assert call("express", "--nope", "x1")[0] == 2
    assert call("frobnicate")[0] == 2


def test_bialternant():
    assert call("bialternant", "x^3", "1")[1] == "s1^2 - s2\ne1^2 - e2\n"
    out = call("bialternant", "--json", "x^3", "x", "1")[1]
    assert out == '{"verb":"bialternant","r":3,"delta":1,"sigma_expr":"-s1","e_expr":"e1","verified":true}\n'


def test_divdiff():
    assert call("divdiff", "-r", "3", "-d", "2", "x^2")[1] == "1\n"
    assert call("divdiff", "-r", "2", "x^3")[1] == "s1^2 - s2\n"
    out = call("divdiff", "-r", "2", "--json", "x^3")[1]
    assert out == (
        '{"verb":"divdiff","r":2,"d":3,"sigma_expr":"s1^2 - s2","e_expr":"e1^2 - e2",'
        '"value":"x1^2 + x1*x2 + x2^2"}\n'
    )


def test_divdiff_at_nodes():
    assert call("divdiff", "--nodes", "1,2", "x^2")[1] == "3\n"
    assert call("divdiff", "--nodes", "1/2,1/2", "x^2")[1] == "1\n"
    out = call("divdiff", "--nodes", "1,3", "--json", "x^2 - 1/2")[1]
    assert out == '{"verb":"divdiff","r":2,"nodes":["1/1","3/1"],"value":"4/1"}\n'
    assert call("divdiff", "--nodes", "1,a", "x")[0] == 2
    assert call("divdiff", "--nodes", "1,2", "-r", "3", "x")[0] == 1


def test_resultant():
    assert call("resultant", "-f", "x^2 - 3*x + 2", "-F", "x^2 + 1")[1] == "10\n"
    assert call("resultant", "-f", "x^2 - 1/4", "-F", "2*x + 1/3")[1] == "-8/9\n"
    out = call("resultant", "--json", "-f", "x^2 - 3*x + 2", "-F", "x^2 + 1")[1]
    assert out == '{"verb":"resultant","f":"x^2 - 3*x + 2","F":"x^2 + 1","value":"10/1"}\n'


def test_wedge_decompose():
    assert call("wedge-decompose", "x^3", "1")[1] == "x1^2 + x1*x2 + x2^2\ns1^2 - s2\ne1^2 - e2\n"
    out = call("wedge-decompose", "--json", "x^2", "x", "1")[1]
    assert out == '{"verb":"wedge-decompose","r":3,"d":2,"quotient":"1","sigma_expr":"1","e_expr":"1"}\n'


def test_verify():
    assert call("verify", "s1^2 - s2", "x^3", "1")[1] == "true\n"
    assert call("verify", "s2", "x^3", "1")[1] == "false\n"
    assert call("verify", "--json", "s2", "x^3", "1")[1] == '{"verb":"verify","holds":false}\n'
    assert call("verify", "--", "-s1", "x^2", "1")[1] == "true\n"


def test_e_form_reparses_to_the_same_value():
    S = parse("x1^3 + x2^3 + x3^3 - 2*x1*x2*x3")
    out = json.loads(call("express", "--json", "x1^3 + x2^3 + x3^3 - 2*x1*x2*x3")[1])
    expected = to_conventional_e(express_in_elementary(S, 3)).poly
    assert parse(out["e_expr"].replace("e", "s")) == expected
    assert str(parse(out["sigma_expr"])) == out["sigma_expr"]


def test_output_is_deterministic():
    argv = ("express", "--json", "x1^4*x2 + x1*x2^4 + 3*x1^2*x2^2 - 7")
    assert len({call(*argv)[1] for _ in range(3)}) == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "symwedge", "resultant", "-f", "x - 3", "-F", "x^2"],
        capture_output=True, text=True, check=False,
    )
    assert (proc.returncode, proc.stdout) == (0, "9\n")
    proc = subprocess.run([sys.executable, "-m", "symwedge", "express", "x1 ^"], capture_output=True, text=True)
    assert proc.returncode == 2 and "byte offset" in proc.stderr
