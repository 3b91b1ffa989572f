import pytest

from qmathieu.expr import ParseError, format_scalar, parse, parse_number, parse_qrat, parse_scalar
from qmathieu.qfield import Q, qint, qrat


def test_parse_qrat():
    assert parse_qrat("q+q^-1") == qint(2)
    assert parse_qrat("(q^2 - q^-2)/(q - q^-1)") == qint(2)
    assert parse_qrat("3/4") == qrat(3) / 4
    assert parse_qrat("-q^2*2") == -2 * Q ** 2


def test_parse_errors():
    for bad in ("q+", "(q", "q^", "2**", ""):
        with pytest.raises(ParseError):
            parse(bad)
    with pytest.raises(ParseError):
        parse_qrat("q^0.5")


def test_numeric():
    assert parse_number("1/2") == 0.5
    assert parse_number("q^0.37", 0.5) == pytest.approx(0.5 ** 0.37)
    with pytest.raises(ParseError):
        parse_number("q")
    assert parse_scalar("q^0.5", q0=0.25, exact=True) == pytest.approx(0.5)


def test_format_scalar_round_trip():
    for x in (qint(2), Q / (Q ** 2 - 1), qrat(-3), -(Q ** 3) + Q, (Q + 1) / (Q - Q ** -1) ** 2):
        assert parse_qrat(format_scalar(x)) == x
