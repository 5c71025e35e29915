import pytest
from hypothesis import given

from qg2.coeff import param, q
from qg2.parse import (ParseError, parse_expr, parse_scalar, quotient_context,
                       torus_context, uq_context)
from qg2.pbw import UQ, gen
from qg2.quotient import quotient
from qg2.torus import TorusElem, matrix_M, matrix_N
from strategies import ratfuncs, uq_elements


def test_scalars():
    assert parse_scalar("q^2 - 1") == q**2 - 1
    assert parse_scalar("1/(q^2-1)") == 1 / (q**2 - 1)
    assert parse_scalar("aprime") == param("aprime")
    assert parse_scalar("q^-3") == q**-3


def test_uq_expression():
    x = parse_expr("E3*E1 - q^-1*E1*E3", uq_context())
    assert x == -(q + q**-1 + q**-3) * gen(2)


def test_quotient_reduces():
    Q = quotient(1, 1)
    assert parse_expr("e2*e1", quotient_context(Q)) == q**-3 * Q.gen(1) * Q.gen(2)


def test_torus_negative_powers():
    M = matrix_N()
    x = parse_expr("t3^-1*t3", torus_context(M))
    assert x == TorusElem.scalar(M, 1)


@pytest.mark.parametrize("text, pos", [
    ("E1 E2", 2),
    ("E1 + ", None),
    ("E7", 0),
    ("E1^x", None),
    ("E1/E2", None),
    ("", 0),
])
def test_errors(text, pos):
    with pytest.raises(ParseError) as info:
        parse_expr(text, uq_context())
    if pos is not None:
        assert info.value.pos == pos


def test_negative_power_needs_inverse():
    with pytest.raises(ParseError):
        parse_expr("E1^-1", uq_context())


def test_no_code_execution():
    for text in ("__import__('os')", "E1.terms", "[E1]", "E1 if 1 else E2", "lambda: 1"):
        with pytest.raises(ParseError):
            parse_expr(text, uq_context())


@given(uq_elements(cap=(6, 4)))
def test_round_trip_uq(x):
    assert parse_expr(str(x), uq_context()) == x


@given(ratfuncs())
def test_round_trip_scalar(c):
    assert parse_scalar(str(c)) == c


@given(uq_elements(cap=(6, 4)))
def test_round_trip_quotient(x):
    Q = quotient(q, 1 / (q**2 - 1))
    y = Q.reduce(x)
    assert parse_expr(str(y), quotient_context(Q)) == y


def test_round_trip_torus():
    from qg2.sampling import random_torus, rng_for
    rng = rng_for(0, "parse-test")
    for M in (matrix_M(), matrix_N()):
        for _ in range(30):
            t = random_torus(rng, M)
            assert parse_expr(str(t), torus_context(M)) == t


def test_scalar_element_round_trip():
    one = UQ.scalar(1)
    assert parse_expr(str(one), uq_context()) == one
    assert one == parse_expr("1", uq_context())
