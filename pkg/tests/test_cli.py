"""Grammar, serialization round trips, and end-to-end command behavior."""

import json
import random
import subprocess
import sys
from fractions import Fraction

import pytest

from polydecomp import Poly, PrimeField, Rationals, polynomial_tower
from polydecomp.cli import (
    UsageError,
    element_to_text,
    format_poly,
    main,
    parse_poly,
    poly_from_json,
    poly_to_json,
)
from polydecomp.errors import DivisionByZeroLiteral, ParseError, UnknownVariable
from support import rand_poly

QQ = Rationals()


# ------------------------------------------------------------------ parsing


def test_parse_golden_inputs():
    assert parse_poly("x^6+6*x^5+6*x+1", QQ, ["x"]) == Poly.from_coeffs(
        QQ, "x", [1, 6, 0, 0, 0, 6, 1]
    )
    assert parse_poly("x^3 + 3*x^2 - 9/2*x + 27/2", QQ, ["x"]) == Poly.from_coeffs(
        QQ, "x", [Fraction(27, 2), Fraction(-9, 2), 3, 1]
    )
    assert parse_poly("-x", QQ, ["x"]) == Poly.from_coeffs(QQ, "x", [0, -1])
    assert parse_poly("(x+1)^2 - (x-1)^2", QQ, ["x"]) == Poly.from_coeffs(QQ, "x", [0, 4])
    assert parse_poly("0", QQ, ["x"]).is_zero
    assert parse_poly("7/3", QQ, ["x"]) == Poly.constant(QQ, "x", Fraction(7, 3))


def test_parse_precedence_and_unary_minus():
    assert parse_poly("2*x^3", QQ, ["x"]) == Poly.from_coeffs(QQ, "x", [0, 0, 0, 2])
    assert parse_poly("-x^2", QQ, ["x"]) == Poly.from_coeffs(QQ, "x", [0, 0, -1])
    assert parse_poly("(-x)^2", QQ, ["x"]) == Poly.from_coeffs(QQ, "x", [0, 0, 1])
    assert parse_poly("--x", QQ, ["x"]) == Poly.gen(QQ, "x")
    assert parse_poly("2-3*x", QQ, ["x"]) == Poly.from_coeffs(QQ, "x", [2, -3])


def test_parse_multivariate_builds_tower():
    p = parse_poly("x^2 + y*x + 1", QQ, ["x", "y"])
    tower = polynomial_tower(QQ, ["y"])
    assert p.domain == tower
    assert p == Poly.from_coeffs(tower, "x", [tower.one, tower.generator("y"), tower.one])
    # same text with main variable y instead
    py = parse_poly("x^2 + y*x + 1", QQ, ["x", "y"], main_var="y")
    assert py.variable == "y"
    assert py.degree == 1


def test_parse_rejects_implicit_multiplication():
    with pytest.raises(ParseError) as info:
        parse_poly("2x", QQ, ["x"])
    assert info.value.position == 1
    with pytest.raises(ParseError):
        parse_poly("x y", QQ, ["x", "y"])


def test_parse_error_positions():
    with pytest.raises(ParseError) as info:
        parse_poly("x +", QQ, ["x"])
    assert info.value.position == 3
    with pytest.raises(ParseError) as info:
        parse_poly("x + $", QQ, ["x"])
    assert info.value.position == 4
    with pytest.raises(ParseError) as info:
        parse_poly("(x + 1", QQ, ["x"])
    assert info.value.position == 6
    with pytest.raises(ParseError):
        parse_poly("x^x", QQ, ["x"])
    with pytest.raises(ParseError):
        parse_poly("", QQ, ["x"])
    with pytest.raises(ParseError):
        parse_poly("x^20000", QQ, ["x"])


def test_parse_unknown_variable():
    with pytest.raises(UnknownVariable) as info:
        parse_poly("x + z", QQ, ["x", "y"])
    assert info.value.position == 4
    assert info.value.code == "UnknownVariable"


def test_parse_zero_denominator():
    with pytest.raises(DivisionByZeroLiteral):
        parse_poly("1/0", QQ, ["x"])
    # 5 is a unit-free denominator mod 5: same error, different route
    with pytest.raises(DivisionByZeroLiteral):
        parse_poly("1/5", PrimeField(5), ["x"])
    with pytest.raises(DivisionByZeroLiteral):
        parse_poly("x + 3/10", PrimeField(5), ["x"])


def test_parse_rational_literals_reduce_in_prime_fields():
    f5 = PrimeField(5)
    assert parse_poly("1/3", f5, ["x"]) == Poly.constant(f5, "x", 2)  # 3*2 = 6 = 1
    assert parse_poly("7", f5, ["x"]) == Poly.constant(f5, "x", 2)
    assert parse_poly("-1", f5, ["x"]) == Poly.constant(f5, "x", 4)


def test_parse_division_only_in_literals():
    with pytest.raises(ParseError):
        parse_poly("x/2", QQ, ["x"])
    with pytest.raises(ParseError):
        parse_poly("1/x", QQ, ["x"])
    with pytest.raises(ParseError):
        parse_poly("(1+1)/2", QQ, ["x"])


def test_parse_poly_validates_variable_lists():
    with pytest.raises(ValueError):
        parse_poly("x", QQ, [])
    with pytest.raises(ValueError):
        parse_poly("x", QQ, ["x", "x"])
    with pytest.raises(ValueError):
        parse_poly("x", QQ, ["x"], main_var="y")


# ----------------------------------------------------------- serialization


def test_text_round_trips():
    rng = random.Random(113)
    for field in (QQ, PrimeField(5), PrimeField(2)):
        for _ in range(1000):
            p = rand_poly(rng, field, "x", rng.randint(0, 6))
            assert parse_poly(format_poly(p, "text"), field, ["x"]) == p


def test_text_round_trips_bivariate():
    rng = random.Random(127)
    tower = polynomial_tower(QQ, ["y"])
    for _ in range(200):
        p = rand_poly(rng, tower, "x", rng.randint(0, 4))
        assert parse_poly(format_poly(p, "text"), QQ, ["x", "y"]) == p


def test_json_schema_shape():
    p = Poly.from_coeffs(QQ, "x", [Fraction(1, 2), 0, 1])
    obj = poly_to_json(p)
    assert obj == {"var": "x", "coeffs": ["1/2", "0", "1"]}
    tower = polynomial_tower(QQ, ["y"])
    q = Poly.from_coeffs(tower, "x", [tower.generator("y"), tower.one])
    nested = poly_to_json(q)
    assert nested["var"] == "x"
    assert nested["coeffs"][0] == {"var": "y", "coeffs": ["0", "1"]}
    assert nested["coeffs"][1] == {"var": "y", "coeffs": ["1"]}


def test_json_round_trips():
    rng = random.Random(131)
    tower = polynomial_tower(QQ, ["y"])
    for domain in (QQ, PrimeField(7), tower):
        for _ in range(200):
            p = rand_poly(rng, domain, "x", rng.randint(0, 5))
            through = json.loads(format_poly(p, "json"))
            assert poly_from_json(through, domain) == p


def test_json_round_trip_rejects_wrong_tower():
    tower = polynomial_tower(QQ, ["y"])
    p = Poly.from_coeffs(tower, "x", [tower.generator("y")])
    obj = poly_to_json(p)
    with pytest.raises(ValueError):
        poly_from_json(obj, QQ)
    wrong = polynomial_tower(QQ, ["z"])
    with pytest.raises(ValueError):
        poly_from_json(obj, wrong)


def test_element_to_text_flattens_towers():
    tower = polynomial_tower(QQ, ["a1", "a2", "a3"])
    a1 = tower.generator("a1")
    a2 = tower.generator("a2")
    a3 = tower.generator("a3")
    half = tower.element(Fraction(1, 2))
    eighth = tower.element(Fraction(1, 8))
    expr = a3 - a1 * a2 * half + a1 * a1 * a1 * eighth
    assert element_to_text(expr) == "a3 - 1/2*a1*a2 + 1/8*a1^3"
    assert element_to_text(tower.zero) == "0"
    assert element_to_text(tower.element(Fraction(-3, 4))) == "-3/4"


# ------------------------------------------------------------ CLI commands


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cli_root(capsys):
    code, out, err = run_cli(capsys, "root", "x^6+6*x^5+6*x+1", "--d", "2")
    assert code == 0
    assert out == "Q = x^3 + 3*x^2 - 9/2*x + 27/2\n"
    assert err == ""


def test_cli_root_json(capsys):
    code, out, _ = run_cli(capsys, "root", "x^6+6*x^5+6*x+1", "--d", "3", "--json")
    assert code == 0
    assert json.loads(out) == {"var": "x", "coeffs": ["-4", "2", "1"]}


def test_cli_decompose_text(capsys):
    code, out, _ = run_cli(capsys, "decompose", "x^6+6*x^5+6*x+1", "--d", "3")
    assert code == 0
    assert out.splitlines() == [
        "h = t^3 + 65",
        "Q = x^2 + 2*x - 4",
        "R = 40*x^3 - 90*x",
    ]


def test_cli_decompose_verify(capsys):
    code, out, _ = run_cli(capsys, "decompose", "x^6+6*x^5+6*x+1", "--d", "2", "--verify")
    lines = out.splitlines()
    assert code == 0
    assert "monic: pass" in lines
    assert "degree_bound: pass" in lines
    assert "index_condition: pass" in lines
    assert "reconstruction: pass" in lines


def test_cli_decompose_json(capsys):
    code, out, _ = run_cli(capsys, "decompose", "x^6+6*x^5+6*x+1", "--d", "6", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["d"] == 6
    assert obj["Q"] == {"var": "x", "coeffs": ["1", "1"]}
    assert obj["h"]["var"] == "t"
    assert obj["h"]["coeffs"] == ["-10", "30", "-45", "40", "-15", "0", "1"]
    assert obj["R"] == {"var": "x", "coeffs": []}
    assert obj["conditions"] == {
        "monic": True,
        "degree_bound": True,
        "index_condition": True,
        "reconstruction": True,
    }


def test_cli_check_yes(capsys):
    code, out, _ = run_cli(capsys, "check", "x^6+6*x^5+6*x+1", "--d", "6")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "decomposable: yes"
    assert "h = " in lines[1]
    assert "Q = x + 1" in lines[2]


def test_cli_check_no_exit_2(capsys):
    code, out, _ = run_cli(capsys, "check", "x^6+6*x^5+6*x+1", "--d", "2")
    assert code == 2
    lines = out.splitlines()
    assert lines[0] == "decomposable: no"
    assert lines[1] == "R = -405/4*x^2 + 255/2*x"


def test_cli_check_non_monic_scaling(capsys):
    code, out, _ = run_cli(capsys, "check", "2*x^4+4*x^2+2", "--d", "2")
    assert code == 0
    assert "scaled by: 2" in out.splitlines()


def test_cli_check_json(capsys):
    code, out, _ = run_cli(capsys, "check", "x^4+2*x^2+1", "--d", "2", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["decomposable"] is True
    assert obj["Q"] == {"var": "x", "coeffs": ["1", "0", "1"]}
    assert obj["h"] == {"var": "t", "coeffs": ["0", "0", "1"]}
    assert obj["residual"] == {"var": "x", "coeffs": []}
    assert obj["normalization"] is None


def test_cli_check_multivariate(capsys):
    code, out, _ = run_cli(
        capsys, "check", "(x^2+y*x+1)^2+3", "--d", "2", "--vars", "x,y"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "decomposable: yes"
    assert lines[1] == "h = t^2 + 3"

    code, out, _ = run_cli(capsys, "check", "x^2+y", "--d", "2", "--vars", "x,y")
    assert code == 2
    lines = out.splitlines()
    assert lines[0] == "decomposable: no"
    assert lines[1] == "R = 0"
    assert lines[2] == "obstruction: the outer polynomial has non-constant coefficients"


def test_cli_check_main_var_selection(capsys):
    # monic in y once y is the main variable
    code, out, _ = run_cli(
        capsys, "check", "y^2+x", "--d", "2", "--vars", "x,y", "--main-var", "y"
    )
    assert code == 2
    assert out.splitlines()[0] == "decomposable: no"


def test_cli_variety_text(capsys):
    code, out, _ = run_cli(capsys, "variety", "--n", "4", "--d", "2")
    assert code == 0
    assert out == "a3 - 1/2*a1*a2 + 1/8*a1^3\n"


def test_cli_variety_sextic(capsys):
    code, out, _ = run_cli(capsys, "variety", "--n", "6", "--d", "2")
    assert code == 0
    assert out.splitlines() == [
        "a4 - 1/2*a1*a3 - 1/4*a2^2 + 3/8*a1^2*a2 - 5/64*a1^4",
        "a5 - 1/2*a2*a3 + 1/8*a1^2*a3 + 1/4*a1*a2^2 - 1/8*a1^3*a2 + 1/64*a1^5",
    ]


def test_cli_variety_json(capsys):
    code, out, _ = run_cli(capsys, "variety", "--n", "4", "--d", "2", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["n"] == 4 and obj["d"] == 2
    assert obj["indeterminates"] == ["a1", "a2", "a3", "a4"]
    assert len(obj["equations"]) == 1
    eq = obj["equations"][0]
    # nested ascending-coefficient schema, outermost variable a4 absent
    assert eq["var"] == "a4"


def test_cli_gf_field(capsys):
    code, out, _ = run_cli(
        capsys, "root", "x^4+2*x^3+x^2+3", "--d", "2", "--field", "gf:5"
    )
    assert code == 0
    assert out == "Q = x^2 + x\n"


def test_cli_error_paths(capsys):
    cases = [
        (["root", "x^6+1", "--d", "4"], "DegreeNotDivisible"),
        (["root", "2*x^2", "--d", "2"], "NotMonic"),
        (["root", "x^2+1", "--d", "7"], "InvalidOuterDegree"),
        (["root", "2x", "--d", "2"], "ParseError"),
        (["root", "x+z", "--d", "2"], "UnknownVariable"),
        (["root", "1/0", "--d", "2"], "DivisionByZeroLiteral"),
        (["check", "x^4+x^2", "--d", "2", "--field", "gf:2"], "NotInvertible"),
        (["check", "y*x^2+y", "--d", "2", "--vars", "x,y"], "NotMonicInMainVar"),
        (["root", "x^2+1", "--d", "2", "--field", "gf:4"], "UsageError"),
        (["root", "x^2+1", "--d", "2", "--field", "R"], "UsageError"),
        (["root", "x^2+1", "--d", "2", "--field", "gf:x"], "UsageError"),
        (["root", "x^2+1", "--d", "2", "--vars", "x,x"], "UsageError"),
        (["root", "x^2+1", "--d", "2", "--main-var", "w"], "UsageError"),
        (["root", "x^2+1"], "UsageError"),
        (["frobnicate", "x", "--d", "2"], "UsageError"),
        (["variety", "--n", "6", "--d", "4"], "DegreeNotDivisible"),
    ]
    for argv, expected_code in cases:
        code = main(argv)
        captured = capsys.readouterr()
        assert code == 1, argv
        assert captured.err.startswith(f"error: {expected_code}: "), (argv, captured.err)


def test_cli_is_deterministic(capsys):
    argv = ["decompose", "x^6+6*x^5+6*x+1", "--d", "2", "--json"]
    assert run_cli(capsys, *argv) == run_cli(capsys, *argv)


def test_installed_script_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "polydecomp.cli", "check", "x^4+2*x^2+1", "--d", "2"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert result.stdout.splitlines()[0] == "decomposable: yes"
    script = subprocess.run(
        ["polydecomp", "check", "x^4+x", "--d", "2"],
        capture_output=True,
        text=True,
    )
    assert script.returncode == 2
    assert script.stdout.splitlines()[0] == "decomposable: no"
