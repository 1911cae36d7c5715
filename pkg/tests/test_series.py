from fractions import Fraction

import pytest
import sympy

from zonotopal.errors import DegenerateSeriesError, PolyParseError
from zonotopal.series import (PolySeries, compose, compositional_inverse, format_poly,
                              monomial_sum, normalize, parse_poly, scale_action,
                              truncated_exp, truncated_log)

U = PolySeries.from_coeffs([0, 1])


@pytest.mark.parametrize("text, coeffs", [
    ("u", [0, 1]),
    ("u + u^2", [0, 1, 1]),
    ("u - 1/2u^2 + 1/3u^3 - 1/4u^4", [0, 1, Fraction(-1, 2), Fraction(1, 3), Fraction(-1, 4)]),
    ("u+4/3*u^3", [0, 1, 0, Fraction(4, 3)]),
    ("2 + 3u", [2, 3]),
    ("0,1,1,-1/2", [0, 1, 1, Fraction(-1, 2)]),
    ("(-2/5)u^2 + u", [0, 1, Fraction(-2, 5)]),
])
def test_parse(text, coeffs):
    assert parse_poly(text).coeffs == tuple(Fraction(c) for c in coeffs)


@pytest.mark.parametrize("text", ["", "u^", "x + u", "u + + u^2", "1/0u", "u^2^3"])
def test_parse_rejects(text):
    with pytest.raises(PolyParseError):
        parse_poly(text)


@pytest.mark.parametrize("text", ["u", "u + u^2", "u - 1/2u^2 + 1/3u^3", "3 - u + 7u^4"])
def test_format_round_trip(text):
    f = parse_poly(text)
    assert format_poly(f) == text
    assert parse_poly(format_poly(f)) == f


def test_normalize_drops_constant_and_scales():
    f = parse_poly("5 + 2u + 4u^2 + 6u^3")
    assert normalize(f, 2) == parse_poly("u + 2u^2")
    with pytest.raises(DegenerateSeriesError):
        normalize(parse_poly("1 + u^2"), 3)


def test_compose_truncates():
    f = parse_poly("u + u^2")
    assert compose(f, f, 3) == PolySeries.from_coeffs([0, 1, 2, 2])
    assert compose(f, U, 5) == f.truncate(5)


def test_inverse_of_u_over_1_minus_u_is_u_over_1_plus_u():
    f = PolySeries.from_coeffs([0, 1, 1, 1, 1, 1, 1])
    g = compositional_inverse(f, 6)
    assert g.coeffs == tuple(Fraction((-1) ** (k + 1)) if k else Fraction(0) for k in range(7))


def test_catalan_numbers_from_inversion():
    # u - u^2 inverts to the Catalan generating function
    g = compositional_inverse(parse_poly("u - u^2"), 8)
    catalan = [1, 1, 2, 5, 14, 42, 132, 429]
    assert [int(g.coeff(k)) for k in range(1, 9)] == catalan


def test_log_and_exp_are_mutual_inverses():
    d = 7
    assert compositional_inverse(truncated_log(d), d) == truncated_exp(d)
    assert compose(truncated_log(d), truncated_exp(d), d) == U.truncate(d)


@pytest.mark.parametrize("coeffs", [
    [0, 1, 2, -3, 5],
    [0, Fraction(2, 3), Fraction(-1, 7), 0, 4, 1],
    [0, -1, 0, 0, 0, 0, Fraction(1, 2)],
])
def test_inverse_matches_sympy_reversion(coeffs):
    d = len(coeffs) - 1
    f = PolySeries.from_coeffs(coeffs)
    g = compositional_inverse(f, d)
    # independent route: solve f(g(u)) = u with undetermined coefficients
    u = sympy.Symbol("u")
    b = sympy.symbols(f"b1:{d + 1}")
    gs = sum(b[k - 1] * u**k for k in range(1, d + 1))
    fs = sum(sympy.Rational(c.numerator, c.denominator) * gs**k for k, c in enumerate(f.coeffs))
    poly = sympy.Poly(sympy.expand(fs - u), u)
    eqs = [poly.coeff_monomial(u**k) for k in range(1, d + 1)]
    sol = sympy.solve(eqs, b, dict=True)
    assert len(sol) == 1
    assert [Fraction(str(sol[0][bk])) for bk in b] == list(g.coeffs[1:])


def test_inverse_requires_nondegenerate():
    with pytest.raises(DegenerateSeriesError):
        compositional_inverse(parse_poly("u^2"), 3)


def test_scale_action_rescales_coefficients():
    f = parse_poly("u + u^2 + u^3")
    assert scale_action(f, 2) == parse_poly("u + 2u^2 + 4u^3")
    assert scale_action(scale_action(f, 3), Fraction(1, 3)) == f


def test_evaluation_and_helpers():
    f = parse_poly("1 + 2u + 3u^2")
    assert f(Fraction(1, 2)) == Fraction(11, 4)
    assert monomial_sum(1, 3) == parse_poly("u + u^3")
    assert f.support() == (0, 1, 2)
    assert not parse_poly("u^2").is_nondegenerate()
