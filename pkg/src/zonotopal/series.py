"""Truncated univariate polynomials with exact rational coefficients.

A :class:`PolySeries` is a polynomial ``a_0 + a_1 u + ... + a_d u^d`` that is
understood modulo ``u^(d+1)``.  The truncation degree ``d`` is part of the
value: two series with the same coefficients but different ``d`` compare
unequal.

Text grammar accepted by :func:`parse_poly`::

    u + u^2 - 1/2u^3        (sum of terms, coefficient glued or with '*')
    0,1,1,-1/2              (coefficient list a_0, a_1, ...)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence, Union

from .errors import DegenerateSeriesError, InputError, PolyParseError

Number = Union[int, Fraction]


@dataclass(frozen=True)
class PolySeries:
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) < 1:
            raise InputError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Number], degree: int | None = None) -> "PolySeries":
        cs = [Fraction(c) for c in coeffs]
        if degree is not None:
            cs = (cs + [Fraction(0)] * (degree + 1))[: degree + 1]
        return cls(tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def support(self) -> tuple[int, ...]:
        return tuple(k for k, c in enumerate(self.coeffs) if c)

    def is_nondegenerate(self) -> bool:
        return self.coeff(1) != 0

    def truncate(self, d: int) -> "PolySeries":
        return PolySeries.from_coeffs(self.coeffs, d)

    def __call__(self, x):
        """Horner evaluation; works for anything supporting ``*`` and ``+``."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        return acc

    def __str__(self) -> str:
        return format_poly(self)


_TERM = re.compile(
    r"^(?:\(?(?P<num>\d+)(?:/(?P<den>\d+))?\)?)?\*?(?P<var>u(?:\^(?P<exp>\d+))?)?$"
)


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise PolyParseError(f"bad coefficient {text!r}") from exc


def parse_poly(text: str) -> PolySeries:
    """Parse a polynomial; the truncation degree is the largest power written."""
    src = text.strip()
    if not src:
        raise PolyParseError("empty polynomial")
    if "," in src:
        coeffs = [_parse_rational(tok) for tok in src.split(",")]
        if len(coeffs) < 2:
            coeffs.append(Fraction(0))
        return PolySeries(tuple(coeffs))

    compact = re.sub(r"\s+", "", src)
    if compact[0] not in "+-":
        compact = "+" + compact
    # a signed parenthesized coefficient folds its sign into the term sign
    for outer, inner, folded in (("+", "-", "-"), ("-", "-", "+"), ("+", "+", "+"), ("-", "+", "-")):
        compact = compact.replace(f"{outer}({inner}", f"{folded}(")
    pieces = re.findall(r"([+-])([^+-]*)", compact)
    if "".join(s + b for s, b in pieces) != compact:
        raise PolyParseError(f"cannot parse {text!r}")
    terms: dict[int, Fraction] = {}
    for sign, body in pieces:
        m = _TERM.match(body)
        if (not body or m is None or (m.group("num") is None and m.group("var") is None)
                or body.count("(") != body.count(")")):
            raise PolyParseError(f"bad term {sign}{body!r} in {text!r}")
        num = int(m.group("num")) if m.group("num") is not None else 1
        den = int(m.group("den")) if m.group("den") is not None else 1
        if den == 0:
            raise PolyParseError(f"zero denominator in {text!r}")
        if m.group("var") is None:
            power = 0
        else:
            power = int(m.group("exp")) if m.group("exp") is not None else 1
        c = Fraction(num, den) * (-1 if sign == "-" else 1)
        terms[power] = terms.get(power, Fraction(0)) + c
    d = max(max(terms), 1)
    return PolySeries.from_coeffs([terms.get(k, 0) for k in range(d + 1)])


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(f: PolySeries) -> str:
    parts: list[str] = []
    for k, c in enumerate(f.coeffs):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = _format_coeff(mag)
        else:
            var = "u" if k == 1 else f"u^{k}"
            body = var if mag == 1 else _format_coeff(mag) + var
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _mul_trunc(a: Sequence[Fraction], b: Sequence[Fraction], d: int) -> list[Fraction]:
    out = [Fraction(0)] * (d + 1)
    for i, x in enumerate(a):
        if not x or i > d:
            continue
        for j, y in enumerate(b[: d + 1 - i]):
            if y:
                out[i + j] += x * y
    return out


def normalize(f: PolySeries, d: int) -> PolySeries:
    """Drop the constant term, divide by the linear coefficient, truncate at ``d``."""
    a1 = f.coeff(1)
    if a1 == 0:
        raise DegenerateSeriesError(f"linear coefficient of {f} is zero")
    return PolySeries.from_coeffs([0] + [f.coeff(k) / a1 for k in range(1, d + 1)])


def compose(f: PolySeries, g: PolySeries, d: int) -> PolySeries:
    """``f(g(u))`` modulo ``u^(d+1)``."""
    gc = list(g.truncate(d).coeffs)
    acc = [Fraction(0)] * (d + 1)
    for c in reversed(f.coeffs):
        acc = _mul_trunc(acc, gc, d)
        acc[0] += c
    return PolySeries(tuple(acc))


def compositional_inverse(f: PolySeries, d: int) -> PolySeries:
    """The unique ``g`` with ``g(0) = 0`` and ``f(g(u)) = g(f(u)) = u`` mod ``u^(d+1)``."""
    if f.coeff(0) != 0:
        raise InputError(f"{f} has a nonzero constant term and no compositional inverse")
    a1 = f.coeff(1)
    if a1 == 0:
        raise DegenerateSeriesError(f"linear coefficient of {f} is zero")
    g = [Fraction(0)] * (d + 1)
    if d >= 1:
        g[1] = 1 / a1
    for n in range(2, d + 1):
        # coefficient n of f(g) is a1*g[n] plus terms in g[1..n-1]
        residual = compose(f, PolySeries(tuple(g)), n).coeff(n)
        g[n] = -residual / a1
    return PolySeries(tuple(g))


def scale_action(f: PolySeries, eps: Number) -> PolySeries:
    """The series ``f(eps*u)/eps``: coefficient ``a_k`` becomes ``eps^(k-1) a_k``."""
    e = Fraction(eps)
    if e == 0:
        raise InputError("scaling factor must be nonzero")
    return PolySeries.from_coeffs(c * e ** (k - 1) for k, c in enumerate(f.coeffs))


def truncated_log(d: int) -> PolySeries:
    """``log(1+u)`` truncated at degree ``d``."""
    return PolySeries.from_coeffs([0] + [Fraction((-1) ** (k + 1), k) for k in range(1, d + 1)])


def truncated_exp(d: int) -> PolySeries:
    """``exp(u) - 1`` truncated at degree ``d``."""
    return PolySeries.from_coeffs([0] + [Fraction(1, factorial(k)) for k in range(1, d + 1)])


def monomial_sum(*powers: int) -> PolySeries:
    """``u^p1 + u^p2 + ...``; handy for the standard test polynomials."""
    d = max(max(powers), 1)
    cs = [0] * (d + 1)
    for p in powers:
        cs[p] += 1
    return PolySeries.from_coeffs(cs)
