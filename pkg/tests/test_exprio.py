"""Expression grammar, canonical printing, and round-trip identities."""

from fractions import Fraction

import pytest
from support import random_poly, seeded

from kholo.errors import (
    DegreeOverflow,
    DivisionByZero,
    ExprSyntaxError,
    KholoError,
    NegativeExponent,
    UnknownVariable,
)
from kholo.exprio import (
    format_gaussian,
    parse_expression,
    parse_gaussian,
    parse_point,
    parse_poly,
    print_poly,
)
from kholo.polynomials import SparsePoly, VarSpace
from kholo.rationals import GaussianRational

XY1 = VarSpace.xy(1)
Z2 = VarSpace.z(2)


# -- parsing --------------------------------------------------------------------

def test_parse_difference_of_squares():
    p = parse_poly("x^2 - y^2", XY1)
    assert p == parse_poly("x1^2 - y1^2", XY1)
    assert p.degree_in("x1") == 2


def test_parse_imaginary_coefficient():
    p = parse_poly("(1/2)*i*z1*z2", Z2)
    assert p.coefficient((1, 1)) == GaussianRational(0, Fraction(1, 2))


def test_parse_negative_exponent():
    with pytest.raises(NegativeExponent):
        parse_poly("x^(-1)", XY1)
    with pytest.raises(NegativeExponent):
        parse_poly("x^-1", XY1)


def test_parse_reports_position():
    with pytest.raises(ExprSyntaxError) as info:
        parse_poly("x1 + @", XY1)
    assert info.value.line == 1
    assert info.value.column == 6


def test_parse_unknown_variable():
    with pytest.raises(UnknownVariable):
        parse_poly("q3 + 1", XY1)


def test_parse_zero_denominator():
    with pytest.raises(DivisionByZero):
        parse_poly("1/0", XY1)


def test_parse_whitespace_insensitive():
    assert parse_poly(" x ^ 2\n- y\t^2 ", XY1) == parse_poly("x^2-y^2", XY1)


def test_parse_no_implicit_multiplication():
    with pytest.raises(ExprSyntaxError):
        parse_poly("2 x", XY1)


def test_parse_unary_minus_nesting():
    assert parse_poly("--x", XY1) == parse_poly("x", XY1)
    assert parse_poly("-(x - y)", XY1) == parse_poly("y - x", XY1)


def test_parse_huge_integer_literals():
    p = parse_poly("123456789012345678901234567890", XY1)
    assert p.constant_term() == GaussianRational(
        123456789012345678901234567890)


def test_parse_exponent_overflow():
    with pytest.raises(DegreeOverflow):
        parse_poly("x^2000000", XY1)


def test_deep_nesting_is_an_error_not_a_crash():
    text = "(" * 5000 + "1" + ")" * 5000
    with pytest.raises(ExprSyntaxError):
        parse_poly(text, XY1)


def test_parse_gaussian_scalar():
    assert parse_gaussian("3/2 + i") == GaussianRational(Fraction(3, 2), 1)
    assert parse_gaussian("-i") == GaussianRational(0, -1)
    with pytest.raises(UnknownVariable):
        parse_gaussian("x + 1")


def test_parse_point_tuples():
    p = parse_point("1, 1/2+i", 2)
    assert p == (GaussianRational(1), GaussianRational(Fraction(1, 2), 1))
    with pytest.raises(ExprSyntaxError):
        parse_point("1, 2", 3)


def test_ast_shape():
    from kholo.exprio import Add, Const, Mul, Pow, Var
    ast = parse_expression("x^2 + 2*y")
    assert isinstance(ast, Add)
    assert isinstance(ast.left, Pow) and isinstance(ast.left.base, Var)
    assert isinstance(ast.right, Mul) and isinstance(ast.right.left, Const)


# -- printing -------------------------------------------------------------------

def test_print_goldens():
    assert print_poly(parse_poly("x^2 - y^2", XY1)) == "x1^2 - y1^2"
    assert print_poly(SparsePoly.zero(XY1)) == "0"
    assert print_poly(parse_poly("(1/2)*i*z1*z2", Z2)) == "(1/2*i)*z1*z2"


def test_print_sign_handling():
    assert print_poly(parse_poly("-x + 1", XY1)) == "-x1 + 1"
    assert print_poly(parse_poly("y - x", XY1)) == "-x1 + y1"


def test_print_complex_constant():
    assert print_poly(parse_poly("1 + i", XY1)) == "(1+i)"
    assert print_poly(parse_poly("2 - 3*i", XY1)) == "(2-3*i)"


def test_format_gaussian_forms():
    assert format_gaussian(GaussianRational(Fraction(3, 2))) == "3/2"
    assert format_gaussian(GaussianRational(-2)) == "-2"
    assert format_gaussian(GaussianRational(0, 1)) == "(i)"
    assert format_gaussian(GaussianRational(0, -1)) == "(-i)"
    assert format_gaussian(GaussianRational(1, Fraction(-1, 3))) == "(1-1/3*i)"


def test_graded_lex_descending_output():
    text = print_poly(parse_poly("1 + x + y^3 + x*y", XY1))
    assert text == "y1^3 + x1*y1 + x1 + 1"


# -- round trips ------------------------------------------------------------------

def test_parse_print_identity_random():
    rng = seeded(61)
    for _ in range(150):
        n = rng.choice([1, 2, 3])
        kind = rng.choice([VarSpace.xy, VarSpace.z, VarSpace.zt, VarSpace.xyt])
        space = kind(n)
        p = random_poly(space, rng, max_degree=5, max_terms=8, allow_zero=True)
        assert parse_poly(print_poly(p), space) == p


def test_print_parse_idempotent():
    rng = seeded(62)
    for _ in range(50):
        p = random_poly(VarSpace.zt(2), rng, max_degree=4, max_terms=6)
        text = print_poly(p)
        assert print_poly(parse_poly(text, p.space)) == text


def test_fuzz_never_crashes():
    rng = seeded(63)
    alphabet = "xyzwti0123456789+-*/^() .,;@#\\\"'αé"
    for _ in range(2000):
        text = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 40)))
        try:
            parse_poly(text, XY1)
        except KholoError:
            pass
