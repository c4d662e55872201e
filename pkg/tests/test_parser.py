from fractions import Fraction

import pytest
from hypothesis import given

from exactquad.forms import DegenerateQuadraticError, GeneralForm, pretty_print
from exactquad.modular import CongruenceProblem
from exactquad.parser import NonIntegerModError, ParseError, ProdSum, parse, parse_congruence, parse_general

from conftest import general_forms, small_forms

F = Fraction


@pytest.mark.parametrize(
    "text,expected",
    [
        ("x^2 - 2x - 2", GeneralForm(1, -2, -2)),
        ("x^2 + 4 (mod 7)", CongruenceProblem(1, 0, 4, 7)),
        ("3x^2", GeneralForm(3, 0, 0)),
        ("0.25x^2 - 1.5 x", GeneralForm(F(1, 4), F(-3, 2), 0)),
        ("1/2*x^2 + x/1 + 0" .replace("x/1", "x"), GeneralForm(F(1, 2), 1, 0)),
        ("−3/2·x² + (−1/4)", GeneralForm(F(-3, 2), 0, F(-1, 4))),
        ("x^2 = 2x - 1", GeneralForm(1, -2, 1)),
        ("-x^2 - -x", GeneralForm(-1, 1, 0)),
        ("2x^2 + x^2 - x^1 + 3x^0", GeneralForm(3, -1, 3)),
        ("x^2 - 9 mod 5", CongruenceProblem(1, 0, 1, 5)),
        ("-x^2 (mod 6)", CongruenceProblem(5, 0, 0, 6)),
        ("prodsum alpha=6 beta=5", ProdSum(F(6), F(5))),
        ("prodsum beta=-1/2 alpha=0.75", ProdSum(F(3, 4), F(-1, 2))),
    ],
)
def test_parse_examples(text, expected):
    assert parse(text) == expected


def test_permutation_independence():
    assert parse("x^2+1-2x") == parse("x^2-2x+1") == parse("1 - 2x + x^2")


def test_whitespace_insensitive():
    assert parse("  x ^ 2-2 x -2 ") == parse("x^2-2x-2")


@pytest.mark.parametrize(
    "text,offset",
    [
        ("x^3", 2),
        ("2x +", 4),
        ("x^2 + + ", 8),
        ("x^2 $ 1", 4),
        ("x² − @", 8),  # byte offset counts the multi-byte ² and −
        ("x^2 (mod 7", 10),
        ("prodsum alpha=1", 15),
        ("prodsum gamma=1 beta=2", 8),
        ("1/0 x^2", 2),
    ],
)
def test_syntax_errors_carry_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.offset == offset
    assert info.value.expected


def test_degenerate_and_modular_errors():
    with pytest.raises(DegenerateQuadraticError):
        parse("2x + 1")
    with pytest.raises(DegenerateQuadraticError):
        parse("x^2 - x^2 + x")
    with pytest.raises(DegenerateQuadraticError):
        parse("7x^2 + 1 (mod 7)")
    with pytest.raises(NonIntegerModError):
        parse("x^2 + 1/2 (mod 7)")
    with pytest.raises(ParseError):
        parse("x^2 (mod 1)")


def test_typed_helpers():
    assert parse_general("x^2") == GeneralForm(1)
    assert parse_congruence("x^2 (mod 4)") == CongruenceProblem(1, 0, 0, 4)
    with pytest.raises(ParseError):
        parse_general("x^2 (mod 4)")
    with pytest.raises(ParseError):
        parse_congruence("x^2")


@given(general_forms)
def test_pretty_print_round_trip(q):
    assert parse(pretty_print(q)) == q
    assert parse(pretty_print(q, ascii=True)) == q


@given(small_forms)
def test_pretty_print_round_trip_small(q):
    assert parse(pretty_print(q)) == q
