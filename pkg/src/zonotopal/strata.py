"""Exploring how the filtered Hilbert sequence depends on the polynomial.

The polynomials ``u + a_2 u^2 + ... + a_d u^d`` with ``d`` the maximal vertex
degree form the parameter space.  :func:`sweep` samples it on a coordinate
subspace, groups the samples by their exact Hilbert sequence and orders the
groups lexicographically.  The remaining functions check individual
structural properties and evaluate closed-form claims about families.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import InputError
from .families import generate_family
from .filtration import hilbert_sequence
from .graph import Multigraph
from .series import (PolySeries, format_poly, monomial_sum, scale_action,
                     truncated_exp, truncated_log)

RANDOM_POOL = tuple(Fraction(x) for x in (1, -1, 2, -2, "1/2", "-1/2", "1/3", "-1/3"))


@dataclass(frozen=True)
class ParameterPoint:
    coeffs: tuple[Fraction, ...]
    provenance: str = ""

    def series(self) -> PolySeries:
        return PolySeries.from_coeffs((0, 1) + self.coeffs)

    def key(self) -> tuple[tuple[int, int], ...]:
        return tuple((c.numerator, c.denominator) for c in self.coeffs)


@dataclass(frozen=True)
class Locus:
    """A curve in parameter space, sampled at a few fixed parameter values."""

    name: str
    point: Callable[[Fraction], dict[int, Fraction]]
    params: tuple[Fraction, ...]


SPECIAL_LOCI: dict[str, tuple[Locus, ...]] = {
    "k3_plus_e": (
        Locus(
            "3c = 4b^2",
            lambda b: {2: b, 3: Fraction(4, 3) * b * b},
            tuple(Fraction(x) for x in (1, 2, -1, "1/2", 3)),
        ),
    ),
}


@dataclass(frozen=True)
class StratumReport:
    hilbert: tuple[int, ...]
    count: int
    representatives: tuple[str, ...]
    lex_max: bool

    def as_dict(self) -> dict:
        return {
            "hilbert": list(self.hilbert),
            "count": self.count,
            "representatives": list(self.representatives),
            "lex_max": self.lex_max,
        }


def lex_compare(h1: Sequence[int], h2: Sequence[int]) -> int:
    """Compare after right-padding with zeros; returns -1, 0 or 1."""
    n = max(len(h1), len(h2))
    a = tuple(h1) + (0,) * (n - len(h1))
    b = tuple(h2) + (0,) * (n - len(h2))
    return (a > b) - (a < b)


def named_polynomials(d: int) -> list[tuple[str, PolySeries]]:
    out = []
    for powers in ((2,), (3,), (4,), (2, 3), (2, 4), (3, 4), (2, 3, 4)):
        f = monomial_sum(1, *powers)
        out.append((format_poly(f), f.truncate(d)))
    out.append(("exp", truncated_exp(d)))
    out.append(("log", truncated_log(d)))
    return out


def _random_coeff(rng: random.Random) -> Fraction:
    pick = rng.randrange(len(RANDOM_POOL) + 1)
    if pick < len(RANDOM_POOL):
        return RANDOM_POOL[pick]
    num = rng.choice([k for k in range(-50, 51) if k])
    return Fraction(num, rng.randint(1, 50))


def _iroot(n: int, m: int) -> int | None:
    """Exact integer ``m``-th root of ``n >= 0``, or ``None``."""
    r = round(n ** (1.0 / m)) if n else 0
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand**m == n:
            return cand
    return None


def orbit_representative(f: PolySeries) -> PolySeries:
    """Scale so that the first nonzero higher coefficient is 1, when a rational factor allows it."""
    for k in range(2, f.degree + 1):
        a = f.coeff(k)
        if not a:
            continue
        m = k - 1
        target = 1 / a
        if target < 0 and m % 2 == 0:
            return f
        num = _iroot(abs(target.numerator), m)
        den = _iroot(target.denominator, m)
        if num is None or den is None:
            return f
        eps = Fraction(num, den) * (-1 if target < 0 else 1)
        return scale_action(f, eps)
    return f


def sample_points(
    graph: Multigraph,
    degree_mask: Iterable[int],
    n_samples: int = 8,
    seed: int = 0,
    loci: Sequence[Locus] = (),
) -> list[ParameterPoint]:
    d = max(graph.max_degree(), 1)
    mask = sorted(set(degree_mask))
    if any(k < 2 or k > d for k in mask):
        raise InputError(f"mask {mask} must lie within 2..{d}")
    allowed = {1, *mask}

    def point(values: dict[int, Fraction], provenance: str) -> ParameterPoint:
        return ParameterPoint(tuple(Fraction(values.get(k, 0)) for k in range(2, d + 1)), provenance)

    pts = []
    for bits in itertools.product((0, 1), repeat=len(mask)):
        pts.append(point(dict(zip(mask, map(Fraction, bits))), "pattern"))
    rng = random.Random(seed)
    for _ in range(n_samples):
        pts.append(point({k: _random_coeff(rng) for k in mask}, "random"))
    for name, f in named_polynomials(d):
        if set(f.support()) <= allowed:
            pts.append(point({k: f.coeff(k) for k in range(2, d + 1)}, name))
    for locus in loci:
        for t in locus.params:
            values = locus.point(t)
            if set(values) <= allowed and max(values) <= d:
                pts.append(point(values, locus.name))
    unique: dict = {}
    for p in pts:
        unique.setdefault(p.key(), p)
    return sorted(unique.values(), key=lambda p: p.coeffs)


def sweep(
    graph: Multigraph,
    degree_mask: Iterable[int],
    n_samples: int = 8,
    seed: int = 0,
    loci: Sequence[Locus] = (),
    convention: str = "relations",
    max_representatives: int = 5,
) -> list[StratumReport]:
    """Group sampled parameter points by Hilbert sequence, in increasing lex order."""
    groups: dict[tuple[int, ...], list[ParameterPoint]] = {}
    for p in sample_points(graph, degree_mask, n_samples, seed, loci):
        h = hilbert_sequence(graph, p.series(), convention=convention).hilbert
        groups.setdefault(h, []).append(p)
    ordered = sorted(groups)
    reports = []
    for i, h in enumerate(ordered):
        reps: list[str] = []
        for p in groups[h]:
            s = format_poly(orbit_representative(p.series()))
            if s not in reps:
                reps.append(s)
        reports.append(StratumReport(h, len(groups[h]), tuple(reps[:max_representatives]),
                                     i == len(ordered) - 1))
    return reports


def check_scale_invariance(graph: Multigraph, f: PolySeries,
                           epsilons: Sequence = (2, Fraction(-1, 3), Fraction(5, 7)),
                           convention: str = "relations") -> dict:
    base = hilbert_sequence(graph, f, convention=convention).hilbert
    rows = []
    for eps in epsilons:
        h = hilbert_sequence(graph, scale_action(f, eps), convention=convention).hilbert
        rows.append({"eps": str(Fraction(eps)), "hilbert": list(h), "equal": h == base})
    return {"f": format_poly(f), "hilbert": list(base), "scaled": rows,
            "passed": all(r["equal"] for r in rows)}


def check_specialization(graph: Multigraph, f_generic: PolySeries, f_special: PolySeries,
                         convention: str = "relations") -> dict:
    """``f_special`` must arise from ``f_generic`` by zeroing coefficients.

    The special sequence is expected to be lexicographically at most the
    generic one; this is guaranteed when ``f_generic`` is a generic point of
    the coordinate subspace spanned by its support.
    """
    d = max(f_generic.degree, f_special.degree)
    for k in range(d + 1):
        s, g = f_special.coeff(k), f_generic.coeff(k)
        if s and s != g:
            raise InputError(f"{f_special} is not obtained from {f_generic} by zeroing coefficients")
    hg = hilbert_sequence(graph, f_generic, convention=convention).hilbert
    hs = hilbert_sequence(graph, f_special, convention=convention).hilbert
    return {"generic": list(hg), "special": list(hs), "passed": lex_compare(hs, hg) <= 0}


def check_subgraph_monotonicity(graph: Multigraph, sub: Multigraph, f: PolySeries,
                                convention: str = "relations") -> dict:
    """Cumulative dimensions of a spanning subgraph never exceed those of the graph."""
    if not sub.is_spanning_subgraph_of(graph):
        raise InputError("second graph is not obtained from the first by deleting edges")
    cg = hilbert_sequence(graph, f, convention=convention).cumulative
    cs = hilbert_sequence(sub, f, convention=convention).cumulative
    n = max(len(cg), len(cs))
    cg = cg + (cg[-1],) * (n - len(cg))
    cs = cs + (cs[-1],) * (n - len(cs))
    return {"graph": list(cg), "subgraph": list(cs), "passed": all(a >= b for a, b in zip(cg, cs))}


def log_concavity_violations(seq: Sequence[int]) -> list[tuple[int, int, int]]:
    """Interior positions ``k`` with ``h_k^2 < h_(k-1) h_(k+1)``, as ``(k, h_k^2, product)``."""
    return [
        (k, seq[k] ** 2, seq[k - 1] * seq[k + 1])
        for k in range(1, len(seq) - 1)
        if seq[k] ** 2 < seq[k - 1] * seq[k + 1]
    ]


@dataclass(frozen=True)
class ConjectureCheck:
    claim: str
    n: int
    expected: Fraction | int | None
    actual: int | None
    passed: bool


def _entry(h: Sequence[int], i: int) -> int:
    return h[i] if i < len(h) else 0


# (description, first n, 0-based entry, closed form); divisions are exact when the claim holds
CHAIN_FORMS = (
    ("3rd entry (n^2+n-10)/2", 5, 2, lambda n: Fraction(n**2 + n - 10, 2)),
    ("4th entry (n^3+3n^2-46n+30)/6", 7, 3, lambda n: Fraction(n**3 + 3 * n**2 - 46 * n + 30, 6)),
    ("5th entry (n^4+6n^3-121n^2+42n+1080)/24", 9, 4,
     lambda n: Fraction(n**4 + 6 * n**3 - 121 * n**2 + 42 * n + 1080, 24)),
    ("6th entry (n^5+10n^4-245n^3-250n^2+9364n-12000)/120", 11, 5,
     lambda n: Fraction(n**5 + 10 * n**4 - 245 * n**3 - 250 * n**2 + 9364 * n - 12000, 120)),
    ("7th entry (n^6+15n^5+3325n^4+1785n^3+11874n^2-201960n+93600)/720", 13, 6,
     lambda n: Fraction(n**6 + 15 * n**5 + 3325 * n**4 + 1785 * n**3 + 11874 * n**2
                        - 201960 * n + 93600, 720)),
)
CYCLE_FORMS = (
    ("3rd entry (n^2+n-2)/2", 5, 2, lambda n: Fraction(n**2 + n - 2, 2)),
    ("4th entry (n^3+3n^2-16n)/6", 7, 3, lambda n: Fraction(n**3 + 3 * n**2 - 16 * n, 6)),
)
PASCAL_FAMILIES = {"dn", "dn_hat", "leg(3)", "leg(4)", "leg(5)", "fork_leg(3)", "fork_leg(4)",
                   "fork_leg(5)", "fork_leg_start(3)"}


def conjecture_report(family: str, f: PolySeries, n_range: Iterable[int],
                      convention: str = "relations") -> list[ConjectureCheck]:
    """Evaluate the recorded closed forms and recurrences for a family; never raises on failure."""
    ns = sorted(set(n_range))
    seqs = {n: hilbert_sequence(generate_family(family, n), f, convention=convention).hilbert
            for n in ns}
    out: list[ConjectureCheck] = []
    for n, h in seqs.items():
        if format_poly(f) != "u":
            out.append(ConjectureCheck("2nd entry equals n", n, n, _entry(h, 1), _entry(h, 1) == n))
    forms = {"chain": CHAIN_FORMS, "cycle": CYCLE_FORMS}.get(family, ())
    for claim, first, idx, form in forms:
        for n, h in seqs.items():
            if n >= first:
                exp = form(n)
                out.append(ConjectureCheck(claim, n, exp, _entry(h, idx), exp == _entry(h, idx)))
    if family == "chain":
        for n, h in seqs.items():
            if n % 2 == 0 and n >= 4:
                k = n // 2
                out.append(ConjectureCheck("entry k+1 equals 3^(k-1) for n=2k", n, 3 ** (k - 1),
                                           _entry(h, k), _entry(h, k) == 3 ** (k - 1)))
    if family in PASCAL_FAMILIES:
        for n in ns:
            if n - 1 not in seqs:
                continue
            prev, h = seqs[n - 1], seqs[n]
            bad = [k for k in range(1, max(len(h), len(prev) + 1)) if _entry(h, k) != _entry(prev, k) + _entry(prev, k - 1)]
            out.append(ConjectureCheck("Pascal rule h(n,k) = h(n-1,k) + h(n-1,k-1)"
                                       + (f" fails at k={bad}" if bad else ""), n, None, None, not bad))
    return out
