import json
import random

import pytest

from prozeta.cli import (
    OutputDoc,
    PolyParseError,
    main,
    parse_poly,
    ratfunc_jsonable,
    ratfunc_text,
)
from prozeta.exactalg import BiPoly, IntPoly, BiRatFunc, poly_to_str, ratfunc_normalize
from prozeta.numberfield import DecompType
from prozeta.zetacore import local_factor


# ---------------------------------------------------------------------------
# polynomial parsing
# ---------------------------------------------------------------------------

def test_parse_cubic():
    assert parse_poly("x^3-2").coeffs == (-2, 0, 0, 1)


def test_parse_product():
    assert parse_poly("(x+1)*(x-1)").coeffs == (-1, 0, 1)


def test_parse_rejects_fraction():
    with pytest.raises(PolyParseError, match="non-integer coefficient"):
        parse_poly("x^2 + 1/2")


def test_parse_error_carries_position():
    with pytest.raises(PolyParseError, match="position 8"):
        parse_poly("x^2 + 1/2")


def test_parse_unary_minus_and_whitespace():
    assert parse_poly(" - x ^ 2 + 3 * x - 4 ").coeffs == (-4, 3, -1)


def test_parse_nested_powers():
    assert parse_poly("(x+1)^3").coeffs == (1, 3, 3, 1)


def test_parse_syntax_errors():
    for bad in ("x +", "(x", "x^x", "2x", "x**2", "y"):
        with pytest.raises(PolyParseError):
            parse_poly(bad)


def test_parse_render_roundtrip():
    rng = random.Random(41)
    for _ in range(60):
        deg = rng.randint(0, 8)
        f = IntPoly([rng.randint(-30, 30) for _ in range(deg + 1)])
        if f.is_zero():
            continue
        assert parse_poly(poly_to_str(f)) == f


# ---------------------------------------------------------------------------
# JSON rendering
# ---------------------------------------------------------------------------

def test_ratfunc_json_constant_one():
    r = BiRatFunc.const(1)
    assert ratfunc_jsonable(r)["num"] == [[0, 0, "1"]]
    assert ratfunc_jsonable(r)["den"] == [[0, 0, "1"]]


def test_ratfunc_json_geometric_factor():
    r = ratfunc_normalize(BiPoly.const(1), BiPoly.one_minus(4, 2))
    out = ratfunc_jsonable(r)
    assert out["num"] == [[0, 0, "1"]]
    assert out["den"] == [[0, 0, "1"], [4, 2, "-1"]]
    assert out["den_factors"] == [[4, 2, 1]]


def test_ratfunc_json_inert_cubic_denominator():
    lf = local_factor(3, DecompType((1,), (3,)))
    out = ratfunc_jsonable(lf.value)
    assert out["den"] == [[0, 0, "1"], [12, 5, "-1"], [15, 5, "-1"], [27, 10, "1"]]


def test_output_doc_roundtrip():
    doc = OutputDoc("decomp", {"poly": "x^3 - 2", "p": "31",
                               "e": [1, 1, 1], "f": [1, 1, 1]})
    assert OutputDoc.parse_json(doc.render_json()) == doc


# ---------------------------------------------------------------------------
# command dispatch and exit codes
# ---------------------------------------------------------------------------

def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cmd_decomp(capsys):
    code, out, _ = run_cli(capsys, "decomp", "x^3-2", "31")
    assert code == 0
    assert "e=(1, 1, 1)" in out and "f=(1, 1, 1)" in out


def test_cmd_zeta_local_mixed(capsys):
    code, out, _ = run_cli(capsys, "zeta-local", "x^3-2", "5")
    assert code == 0
    assert "1 - X^27*Y^10" in out
    for a in (12, 13, 14, 15):
        assert "(1 - X^%d*Y^5)" % a in out


def test_cmd_zeta_local_json_roundtrip(capsys):
    code, out, _ = run_cli(capsys, "--json", "zeta-local", "x^3-2", "7")
    assert code == 0
    doc = OutputDoc.parse_json(out)
    assert doc.kind == "zeta-local"
    assert doc.data["value"]["den_factors"] == [[12, 5, 1], [15, 5, 1]]


def test_cmd_funceq_by_type(capsys):
    code, out, _ = run_cli(capsys, "funceq", "--type", "n=3", "e=1,1,1", "f=1,1,1")
    assert code == 0
    assert "X^27 Y^10" in out


def test_cmd_funceq_ramified_none(capsys):
    code, out, _ = run_cli(capsys, "funceq", "--type", "n=3", "e=3", "f=1")
    assert code == 0
    assert "no functional equation" in out


def test_cmd_coeffs_agreement(capsys):
    code, out, _ = run_cli(capsys, "coeffs", "x^3-2", "5", "--max-k", "6")
    assert code == 0
    assert "agreement: yes" in out


def test_cmd_coeffs_quadratic(capsys):
    code, out, _ = run_cli(capsys, "coeffs", "x^2+1", "3", "--max-k", "8")
    assert code == 0
    assert "direct-expansion" in out


def test_cmd_coeffs_disagreement_exit_code(capsys, monkeypatch):
    import prozeta.cli as cli_mod
    monkeypatch.setattr(cli_mod, "vsum_coeffs",
                        lambda n, d, p, K: [1] + [99] * K)
    code, out, _ = run_cli(capsys, "coeffs", "x^3-2", "5", "--max-k", "5")
    assert code == 1
    assert "agreement: NO" in out


def test_cmd_euler(capsys):
    code, out, _ = run_cli(capsys, "euler", "x^3-2", "--primes", "5",
                           "--index", "32")
    assert code == 0
    assert "b_32 = 61440" in out


def test_cmd_oracle_coset(capsys):
    code, out, _ = run_cli(capsys, "oracle", "coset", "--q", "3", "--e", "1",
                           "--v", "2")
    assert code == 0
    assert "13" in out and "agreement: yes" in out


def test_cmd_oracle_coset_with_distinctness(capsys):
    code, out, _ = run_cli(capsys, "oracle", "coset", "--q", "2", "--e", "1",
                           "--v", "1", "--max-m", "1")
    assert code == 0
    assert "0 collisions" in out


def test_cmd_lie_check(capsys):
    code, out, _ = run_cli(capsys, "lie", "check", "x^3-2")
    assert code == 0
    assert "result: pass" in out


def test_cmd_lie_sigma(capsys):
    code, out, _ = run_cli(capsys, "lie", "sigma", "x^2+3*x+1")
    assert code == 0
    assert "det = " in out


def test_cmd_lie_iso(capsys):
    code, out, _ = run_cli(capsys, "lie", "iso", "x^2+1")
    assert code == 0
    assert "verified" in out


def test_conductor_prime_exits_2(capsys):
    code, _, err = run_cli(capsys, "zeta-local", "x^2+3", "2")
    assert code == 2
    assert "conductor" in err


def test_reducible_poly_exits_2(capsys):
    code, _, err = run_cli(capsys, "decomp", "x^2-1", "7")
    assert code == 2
    assert "reducible" in err


def test_parse_error_exits_2(capsys):
    code, _, err = run_cli(capsys, "zeta-local", "x^2+1/2", "5")
    assert code == 2
    assert "non-integer coefficient" in err


def test_composite_p_exits_2(capsys):
    code, _, err = run_cli(capsys, "decomp", "x^3-2", "10")
    assert code == 2
    assert "not prime" in err


def test_json_outputs_parse_everywhere(capsys):
    cases = [
        ["--json", "decomp", "x^3-2", "31"],
        ["--json", "funceq", "--type", "n=4", "e=1,1", "f=1,3"],
        ["--json", "coeffs", "x^2+1", "5", "--max-k", "4"],
        ["--json", "oracle", "coset", "--q", "2", "--e", "2", "--v", "1"],
        ["--json", "lie", "check", "x^2+1"],
        ["--json", "lie", "iso", "x^2-x-1"],
    ]
    for argv in cases:
        code, out, _ = run_cli(capsys, *argv)
        assert code == 0, argv
        doc = OutputDoc.parse_json(out)
        assert OutputDoc.parse_json(doc.render_json()) == doc
        json.loads(out)    # valid JSON end to end
