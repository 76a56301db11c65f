import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import split_ratfuncs
from sgx.cli import ParseError, dumps, parse, parse_ast, parse_sigma_poly, run
from sgx.cli.parser import evaluate, to_text
from sgx.cli.specfile import spec_from_json, spec_to_json
from sgx.diffpoly import SigmaPolynomial
from sgx.errors import DivisionByZero, InvalidParameter
from sgx.ratfunc import I, X, delta
from sgx.sgroups import constant_points, fixture_gl2_example, full_algebraic, ga_linear_subgroup
from sgx.shiftrel import shift_combination

x = X


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv, "--json")
    assert code == 0, err
    return json.loads(out), out


# -- parser --------------------------------------------------------------------

def test_parse_examples():
    assert parse("-1/((x-i)*(x+1-i))") == -1 / ((x - I) * (x + 1 - I))
    f = parse("x^2+1")
    assert f == x ** 2 + 1 and f.den.degree == 0
    with pytest.raises(ParseError) as exc:
        parse("1/(x-")
    assert exc.value.offset == 5
    with pytest.raises(DivisionByZero):
        parse("1/(x-x)")


def test_parse_precedence():
    assert parse("2*x^2") == 2 * x ** 2
    assert parse("-x^2") == x ** 2  # unary minus binds tighter than ^
    assert parse("-1*x^2") == -(x ** 2)
    assert parse("1-x-x") == 1 - 2 * x
    assert parse("x/2/x") == parse("1/2")
    assert parse(" ( x + i ) ^ 2 ") == (x + I) ** 2


@pytest.mark.parametrize("text,offset", [("", 0), ("x+", 2), ("x^y", 2), ("(x", 2), ("x)", 1),
                                         ("2 3", 2), ("x^-1", 2), ("x**2", 2), ("y", 0)])
def test_parse_errors(text, offset):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert exc.value.offset == offset


def test_parse_caps():
    with pytest.raises(InvalidParameter):
        parse("x^1000")
    with pytest.raises(InvalidParameter):
        parse("(x^200)^3")
    with pytest.raises((ParseError, InvalidParameter)):
        parse("(" * 500 + "x" + ")" * 500)


@given(split_ratfuncs())
@settings(max_examples=150)
def test_print_parse_roundtrip(f):
    text = str(f)
    assert parse(text) == f
    assert str(parse(text)) == text


@given(split_ratfuncs())
@settings(max_examples=50)
def test_ast_text_roundtrip(f):
    node = parse_ast(str(f))
    assert evaluate(parse_ast(to_text(node))) == evaluate(node)


@st.composite
def entry_polys(draw):
    out = SigmaPolynomial.constant(draw(st.sampled_from([0, 1, -2, I, 1 - I])))
    for _ in range(draw(st.integers(0, 3))):
        term = SigmaPolynomial.constant(draw(st.sampled_from([1, -1, 3, I, -2 * I])))
        for _ in range(draw(st.integers(1, 3))):
            term = term * SigmaPolynomial.var(draw(st.sampled_from(["g11", "g12", "g21"])),
                                              draw(st.integers(0, 2)))
        out = out + term
    return out


@given(entry_polys())
def test_sigma_poly_roundtrip(p):
    assert parse_sigma_poly(str(p)) == p


def test_sigma_poly_syntax():
    u = SigmaPolynomial.var("g12")
    assert parse_sigma_poly("s^2(g_12)-3*s(g12)+g_1_2") == u.prolong(2) - u.prolong(1) * 3 + u


# -- certificates --------------------------------------------------------------

def test_spec_examples():
    cert, _ = call_json("classify", "gm", "--a", "-1/(x-i)^2")
    assert cert["verdict"] == "Full"
    cert, _ = call_json("realize", "--group", "sl2")
    assert cert["verdict"] == "Realizable"
    assert [b["generator"].split("[")[0] for b in cert["blocks"]] == ["Ga", "Ga"]
    code, out, _ = call("classify", "cyclic", "--b", "(x+1)/x", "--d", "4")
    assert code == 0 and "verdict: Full" in out


GA_INPUTS = ["1/(x-i)^2", "x^3+2", "-1/((x-i)*(x+1-i))", "1/x^2-1/(x+1)^2", "0"]
GM_INPUTS = ["1", "1/(2*x)", "x^2+1/(3*(x-i))", "-1/(x-i)^2", "i/x", "2/x-2/(x+1)", "0"]
CYCLIC_INPUTS = [("x^2", 2), ("(x+1)^3/x^3", 3), ("x^2/(x+i)^4", 6), ("3", 6), ("(x+1)/x", 2)]


@pytest.mark.parametrize("a", GA_INPUTS)
def test_ga_witness_reparses(a):
    cert, _ = call_json("classify", "ga", "--a", a)
    f = parse(cert["input"]["a"])
    assert f == parse(a)
    if cert["verdict"] == "Trivial":
        assert delta(parse(cert["witnesses"]["antiderivative"])) == f
    else:
        assert cert["witnesses"]["logarithmic_part"]


@pytest.mark.parametrize("a", GM_INPUTS)
def test_gm_witness_reparses(a):
    cert, _ = call_json("classify", "gm", "--a", a)
    f = parse(cert["input"]["a"])
    if cert["verdict"] == "NotFull":
        w = parse(cert["witnesses"]["witness"])
        e = cert["witnesses"]["exponents"]
        assert any(e)
        assert delta(w) / w == shift_combination(f, e)


@pytest.mark.parametrize("b,d", CYCLIC_INPUTS)
def test_cyclic_witness_reparses(b, d):
    cert, _ = call_json("classify", "cyclic", "--b", b, "--d", str(d))
    f = parse(cert["input"]["b"])
    if cert["verdict"] == "NotFull":
        p = cert["witnesses"]["prime"]
        assert d % p == 0
        assert (f / parse(cert["witnesses"]["witness"]) ** p).is_constant()


def test_pf_certificate():
    cert, _ = call_json("pf", "--f", "x^3/(x-1)")
    assert parse(cert["witnesses"]["poly_part"]) == x ** 2 + x + 1
    assert cert["witnesses"]["atoms"] == [{"beta": "-1", "coeff": "1", "order": 1}]


def test_realize_blocks_reparse():
    cert, _ = call_json("realize", "--group", "GL(2)")
    for b in cert["blocks"]:
        entries = [parse(e) for row in b["A"] for e in row]
        assert any(entries)
        assert b["check"]["classifier_verdict"] == "Full"
    cert, _ = call_json("realize", "--group", "Gm", "--constant")
    assert cert["verdict"] == "Realizable"
    assert cert["blocks"][0]["check"]["exponents"] == [-1, 1]


@pytest.mark.parametrize("argv", [
    ("classify", "gm", "--a", "-1/(x-i)^2"),
    ("classify", "ga", "--a", "-1/((x-i)*(x+1-i))"),
    ("classify", "gm", "--a", "1"),
    ("realize", "--group", "sl2"),
])
def test_json_byte_identical(argv):
    _, first = call_json(*argv)
    _, second = call_json(*argv)
    assert first == second
    assert first == dumps(json.loads(first)) + "\n"


def test_json_identical_across_processes():
    argv = [sys.executable, "-m", "sgx", "classify", "gm", "--a", "1", "--json"]
    outs = {subprocess.run(argv, capture_output=True, check=True).stdout for _ in range(2)}
    assert len(outs) == 1


def test_dumps_is_sorted_and_compact():
    assert dumps({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}'


# -- exit codes ----------------------------------------------------------------

@pytest.mark.parametrize("argv,code", [
    (("classify", "ga", "--a", "1/(x-"), 2),
    (("classify", "ga", "--a", "1/(x^2+2)"), 2),
    (("classify", "gm", "--a", "1/0"), 2),
    (("classify", "cyclic", "--b", "x", "--d", "1"), 2),
    (("classify", "cyclic", "--b", "0", "--d", "2"), 2),
    (("classify", "cyclic", "--b", "x", "--d", "two"), 2),
    (("realize", "--group", "foo"), 2),
    (("realize",), 2),
    (("bogus",), 2),
    ((), 2),
    (("classify", "ga", "--a", "--"), 2),
    (("classify", "cyclic", "--b", "x", "--d", "--"), 2),
    (("pf", "--f", "x", "--deadline-ms", "--"), 2),
    (("classify", "gm", "--a", "x", "--deadline-ms", "0"), 2),
    (("pf", "--f", "x", "--deadline-ms", "0"), 2),
    (("classify", "ga", "--a", "-x"), 0),
])
def test_exit_codes(argv, code):
    assert call(*argv)[0] == code


def test_version_and_help():
    assert call("--version")[0] == 0
    assert call("--help")[0] == 0


# -- spec files ------------------------------------------------------------------

def _write(tmp_path, spec, name="spec.json"):
    p = tmp_path / name
    p.write_text(json.dumps(spec_to_json(spec)))
    return str(p)


@pytest.mark.parametrize("spec", [full_algebraic("SL2"), constant_points("mu(2)"), ga_linear_subgroup([1, -3]),
                                  fixture_gl2_example().spec])
def test_spec_json_roundtrip(spec):
    back = spec_from_json(json.loads(json.dumps(spec_to_json(spec))))
    assert back.n == spec.n and back.defining == spec.defining
    assert type(back.family_tag) is type(spec.family_tag)


def test_group_commands(tmp_path):
    sl2 = _write(tmp_path, full_algebraic("SL2"))
    cert, _ = call_json("group", "dim", "--spec", sl2, "--order", "1")
    assert cert["dimension"] == 6
    gl = _write(tmp_path, ga_linear_subgroup([0]), "gl.json")
    cert, _ = call_json("group", "reduced", "--spec", gl)
    assert cert["value"] is False
    cert, _ = call_json("group", "connected", "--spec", gl)
    assert cert["value"] is True
    mu2 = _write(tmp_path, constant_points("mu(2)"), "mu2.json")
    cert, _ = call_json("group", "connected", "--spec", mu2)
    assert cert["value"] is False
    cert, _ = call_json("realize", "--spec", mu2)
    assert cert["reason"] == "NotSigmaConnected"
    fx = _write(tmp_path, fixture_gl2_example().spec, "fx.json")
    cert, _ = call_json("group", "reduced", "--spec", fx)
    assert cert["value"] == "Unsupported"
    cert, _ = call_json("realize", "--spec", fx)
    assert cert["verdict"] == "Unknown"


def test_group_budget_exit(tmp_path):
    sl3 = _write(tmp_path, full_algebraic("SL3"))
    assert call("group", "dim", "--spec", sl3, "--order", "2", "--deadline-ms", "1")[0] == 3


def test_bad_spec_files(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    assert call("group", "reduced", "--spec", str(p))[0] == 2
    p.write_text(json.dumps({"n": 1, "family_tag": {"kind": "ConstantPoints", "name": "Gm"},
                             "equations": ["g11^2-1"]}))
    assert call("group", "reduced", "--spec", str(p))[0] == 2
    p.write_text(json.dumps({"n": 1, "family_tag": {"kind": "Custom"}, "equations": ["s(g11"]}))
    assert call("group", "reduced", "--spec", str(p))[0] == 2
    assert call("group", "reduced", "--spec", str(tmp_path / "missing.json"))[0] == 2
