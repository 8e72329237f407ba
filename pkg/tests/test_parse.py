import pytest

from ramq.parse import ParseError, parse_polynomial, parse_rational
from ramq.polyrat import Parity, classify_parity, upper_half_poles


def test_basic_rationals():
    f = parse_rational("1/(x^2+1)")
    assert f.num.coeffs == ((1 + 0j),)
    assert f.den.coeffs == (1 + 0j, 0j, 1 + 0j)

    g = parse_rational("x/(x^2+1)")
    assert g.num.coeffs == (0j, 1 + 0j)
    assert classify_parity(g) is Parity.ODD


def test_factored_denominator_keeps_multiplicity():
    f = parse_rational("1/(x^2+1)^3")
    [pole] = upper_half_poles(f)
    assert pole.multiplicity == 3
    assert f.den.degree == 6

    g = parse_rational("x/((x^2+1)^2*(x^2+4))")
    poles = upper_half_poles(g)
    assert sorted(p.multiplicity for p in poles) == [1, 2]


def test_factor_juxtaposition():
    g = parse_rational("x/((x^2+1)(x^2+4))")
    assert g.den.degree == 4


def test_coefficient_forms():
    p = parse_polynomial("1 + 2*x + 3*x^2")
    assert p.coeffs == (1 + 0j, 2 + 0j, 3 + 0j)
    p = parse_polynomial("0.5 - x^3")
    assert p.coeffs == (0.5 + 0j, 0j, 0j, -1 + 0j)
    p = parse_polynomial("2x")
    assert p.coeffs == (0j, 2 + 0j)
    p = parse_polynomial("1.5e-2 + x")
    assert p.coeffs == (0.015 + 0j, 1 + 0j)
    p = parse_polynomial("-x + 1")
    assert p.coeffs == (1 + 0j, -1 + 0j)


def test_mixed_numerator():
    f = parse_rational("(x+1)/(x^2+4)")
    assert classify_parity(f) is Parity.NEITHER


def test_parse_errors():
    for bad in ("", "1/", "x^/(x^2+1)", "1/(x^2+1", "x y", "1/(x^2+1)x", "x**2/(x^4+1)"):
        with pytest.raises(ParseError):
            parse_rational(bad)


def test_rendering_round_trip():
    for text in ("1/(x^2+1)", "x/(x^2+1)^3", "(x+1)/(x^2+4)"):
        f = parse_rational(text)
        g = parse_rational(str(f))
        assert f == g
