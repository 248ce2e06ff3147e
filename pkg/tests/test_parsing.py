import pytest
from hypothesis import given

from spectralcurves import D, DiffOp, ParseError, load_example, parse_frac, parse_operator
from spectralcurves.cli import read_operator_file
from strategies import operators


def test_example_operator():
    L = parse_operator("D^3 - (6/x^2)*D + 12/x^3 + 1")
    assert L.order == 3
    assert L.coeff(1) == parse_frac("-6/x^2")
    assert L.coeff(0) == parse_frac("12/x^3 + 1")
    assert L == load_example()[0]


def test_bare_derivation():
    assert parse_operator("D") == D


def test_operator_products_are_noncommutative():
    assert parse_operator("D*x") == parse_operator("x*D + 1")


@pytest.mark.parametrize("src, column, kind", [
    ("D^^2", 2, "syntax"),
    ("D + 1.5", 5, "literal"),
    ("D + y", 5, "symbol"),
    ("D^x", 2, "syntax"),
    ("(D + 1", 7, "syntax"),
    ("D + * x", 5, "syntax"),
])
def test_parse_errors(src, column, kind):
    with pytest.raises(ParseError) as info:
        parse_operator(src)
    err = info.value
    assert err.line == 1
    assert err.column == column
    assert err.kind == kind
    assert err.token


def test_division_rules():
    assert parse_operator("(x^2 + 1)/x") == DiffOp([parse_frac("x + 1/x")])
    with pytest.raises(ParseError):
        parse_operator("D/x")
    with pytest.raises(ParseError):
        parse_operator("x/D")
    with pytest.raises(ParseError):
        parse_operator("1/(x - x)")


def test_error_line_numbers_in_files():
    with pytest.raises(ParseError) as info:
        read_operator_file("D\n\nD^2 + q\n")
    assert info.value.line == 3 and info.value.column == 7


def test_corpus_roundtrip():
    for op in load_example():
        assert parse_operator(str(op)) == op


@given(operators(max_order=4))
def test_roundtrip_random(op):
    assert parse_operator(str(op)) == op
