import io
import json

import pytest

from cubicaudit.cli import EXIT_INVALID, EXIT_OK, EXIT_UNDECIDED, dispatch


def run(*argv):
    out = io.StringIO()
    code = dispatch(list(argv), out)
    text = out.getvalue()
    return code, (json.loads(text) if text.strip().startswith("{") else text)


def test_local_real_and_padic():
    code, js = run("local", "--form", "3,4,5,0,0,0,0,0,0,0", "--place", "inf")
    assert code == EXIT_OK and js["schema"] == "v1" and js["verdict"]["status"] == "solvable"
    code, js = run("local", "--form", "[1,2,4,0,0,0,0,0,0,0]", "--place", "2")
    assert code == EXIT_OK and js["verdict"]["status"] == "unsolvable"
    assert js["verdict"]["modulus"]["p"] == 2


def test_local_undecided_exit_code():
    code, js = run("local", "--form", "1,2,4,0,0,0,0,0,0,0", "--place", "3", "--depth", "1")
    assert code == EXIT_UNDECIDED and js["verdict"]["status"] == "undecided"
    code, js = run("--depth", "1", "local", "--form", "1,2,4,0,0,0,0,0,0,0", "--place", "2", "--depth", "3")
    assert code == EXIT_OK and js["verdict"]["status"] == "unsolvable"


def test_quadratic():
    code, js = run("quadratic", "--diag", "1,1,-1", "--vector")
    assert code == EXIT_OK and js["isotropic"] is True and js["vector"]
    code, js = run("quadratic", "--diag", "1,1,-3", "--place", "3")
    assert js["isotropic"] is False
    code, js = run("quadratic", "--matrix", "[[0,1],[1,0]]")
    assert js["isotropic"] is True


def test_reduce_emits():
    code, js = run("reduce", "--form", "1,1,-1,0,0,0,0,0,0,0", "--variant", "full")
    assert len(js["system"]["members"]) == 9
    code, js = run("reduce", "--form", "1,1,-1,0,0,0,0,0,0,0", "--emit", "resultants")
    assert js["resultants"]["formal_is_zero"] and not js["resultants"]["true_degree_is_zero"]
    code, js = run("reduce", "--form", "3,4,5,0,0,0,0,0,0,0", "--emit", "gcd")
    assert js["common_factor"]["kind"] == "none"
    code, _ = run("reduce", "--form", "1,1,1,0,0,0,0,0,0,0", "--variant", "full", "--emit", "resultants")
    assert code == EXIT_INVALID


def test_jacobian_and_enumerate():
    code, js = run("jacobian", "--diagonal", "1,1,1", "--verify")
    assert js["b"] == "-432" and js["identity"] is True
    code, js = run("enumerate", "--product", "60")
    assert js["count"] == 5 and [1, 6, 10] in js["classes"]


def test_search():
    code, js = run("--height", "50", "search", "--form", "1,1,-2,0,0,0,0,0,0,0")
    assert code == EXIT_OK and ["1", "1", "1"] in js["points"] and js["height"] == 50


def test_table_output():
    code, text = run("--output", "table", "enumerate", "--product", "2")
    assert code == EXIT_OK and text.startswith("schema")


@pytest.mark.parametrize(
    "argv",
    [
        ("local", "--form", "1,2,3", "--place", "2"),
        ("local", "--form", "0,0,0,0,0,0,0,0,0,0", "--place", "2"),
        ("local", "--form", "1,1,1,0,0,0,0,0,0,0", "--place", "4"),
        ("jacobian", "--diagonal", "1,0,1"),
        ("enumerate", "--product", "0"),
        ("quadratic", "--matrix", "[[1,2],[3,4]]"),
        ("nonsense",),
        ("--depth", "0", "local", "--form", "1,1,1,0,0,0,0,0,0,0", "--place", "2"),
    ],
)
def test_invalid_input(argv, capsys):
    code, _ = run(*argv)
    assert code == EXIT_INVALID


def test_audit_single_curve_filter():
    code, js = run("--height", "100", "audit", "--form", "1,1,-2,0,0,0,0,0,0,0", "--claims", "transfer")
    assert code == EXIT_OK
    assert {c["id"] for c in js["claims"]} == {"transfer.round_trip", "transfer.zero_pattern"}
    assert all(c["verdict"] == "holds" for c in js["claims"])
