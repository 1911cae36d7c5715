"""Defining relations of the graded and deformed power algebras, and checks on them.

Relations are stored symbolically (kind, vertex subset, exponent) together with
the polynomial ``h`` substituted into each variable.  A cut relation for the
subset ``I`` reads ``(sum_(v in I) h(y_v))^(D_I + 1) = 0`` where ``D_I`` counts
edges leaving ``I``; a nilpotency relation reads ``y_v^(deg v + 1) = 0``.

:func:`verify_relations` evaluates every relation at ``y_v = g(X_v)`` inside the
edge algebra, where ``g`` is the generator polynomial and ``h`` its inverse.
:class:`MPoly` gives the expanded form of a relation when it is wanted
explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .edge_algebra import AlgebraElement, eval_poly_at, vertex_flow
from .errors import CapExceededError
from .filtration import generator_series, hilbert_sequence
from .graph import MAX_VERTICES_FOR_SUBSETS, Multigraph, graded_hilbert, spanning_forest_count
from .series import PolySeries, compositional_inverse, normalize

IDENTITY = PolySeries.from_coeffs([0, 1])


class MPoly:
    """Sparse polynomial in ``n`` variables with rational coefficients.

    ``bounds[i]``, when given, imposes ``y_i^(bounds[i] + 1) = 0``.
    """

    __slots__ = ("n", "terms", "bounds")

    def __init__(self, n: int, terms: Mapping[tuple[int, ...], Fraction] | None = None,
                 bounds: Sequence[int] | None = None):
        self.n = n
        self.bounds = tuple(bounds) if bounds is not None else None
        self.terms = {
            e: Fraction(c) for e, c in (terms or {}).items() if c and self._allowed(e)
        }

    def _allowed(self, e: tuple[int, ...]) -> bool:
        return self.bounds is None or all(x <= b for x, b in zip(e, self.bounds))

    @classmethod
    def variable(cls, n: int, i: int, bounds=None) -> "MPoly":
        e = [0] * n
        e[i] = 1
        return cls(n, {tuple(e): Fraction(1)}, bounds)

    @classmethod
    def constant(cls, n: int, c, bounds=None) -> "MPoly":
        return cls(n, {(0,) * n: Fraction(c)}, bounds)

    def __add__(self, other: "MPoly") -> "MPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MPoly(self.n, out, self.bounds)

    def __mul__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            return MPoly(self.n, {e: c * other for e, c in self.terms.items()}, self.bounds)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if self._allowed(e):
                    out[e] = out.get(e, 0) + c1 * c2
        return MPoly(self.n, out, self.bounds)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MPoly":
        out = MPoly.constant(self.n, 1, self.bounds)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, MPoly) and self.n == other.n and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def substitute(self, values: Sequence[AlgebraElement]) -> AlgebraElement:
        """Evaluate at algebra elements, one per variable."""
        n_edges = values[0].n_edges
        powers: list[list[AlgebraElement]] = [[AlgebraElement.one(n_edges)] for _ in values]
        out = AlgebraElement(n_edges)
        for e, c in self.terms.items():
            term = AlgebraElement.one(n_edges)
            for i, k in enumerate(e):
                while len(powers[i]) <= k:
                    powers[i].append(powers[i][-1] * values[i])
                term = term * powers[i][k]
            out = out + term.scalar_mul(c)
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e)):
            mono = "*".join(f"y{i}^{k}" if k > 1 else f"y{i}" for i, k in enumerate(e) if k)
            parts.append(f"{self.terms[e]}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def poly_in(h: PolySeries, x: MPoly) -> MPoly:
    out = MPoly(x.n, bounds=x.bounds)
    for c in reversed(h.coeffs):
        out = out * x + MPoly.constant(x.n, c, x.bounds)
    return out


@dataclass(frozen=True)
class Relation:
    kind: str
    subset: tuple[int, ...]
    exponent: int


@dataclass(frozen=True)
class RelationSet:
    graph: Multigraph
    relations: tuple[Relation, ...]
    generators: PolySeries
    substitution: PolySeries

    def polynomial(self, rel: Relation) -> MPoly:
        """Expanded relation in ``y_0..y_(n-1)`` modulo the nilpotency bounds."""
        n = self.graph.n_vertices
        bounds = self.graph.degrees()
        ys = [MPoly.variable(n, v, bounds) for v in range(n)]
        if rel.kind == "nilpotency":
            return ys[rel.subset[0]] ** rel.exponent
        s = MPoly(n, bounds=bounds)
        for v in rel.subset:
            s = s + poly_in(self.substitution, ys[v])
        return s ** rel.exponent


def _check_subset_cap(graph: Multigraph) -> None:
    if graph.n_vertices > MAX_VERTICES_FOR_SUBSETS:
        raise CapExceededError(
            f"{graph.n_vertices} vertices; subset enumeration is capped at {MAX_VERTICES_FOR_SUBSETS}"
        )


def _subsets(n: int, min_size: int) -> Iterable[tuple[int, ...]]:
    for size in range(min_size, n + 1):
        yield from combinations(range(n), size)


def graded_relations(graph: Multigraph) -> RelationSet:
    """One relation ``(sum_(v in I) x_v)^(D_I + 1)`` per nonempty vertex subset."""
    _check_subset_cap(graph)
    rels = tuple(
        Relation("graded", I, graph.cut_size(I) + 1) for I in _subsets(graph.n_vertices, 1)
    )
    return RelationSet(graph, rels, IDENTITY, IDENTITY)


def deformed_relations(graph: Multigraph, f: PolySeries, convention: str = "relations") -> RelationSet:
    """Nilpotency relations plus one cut relation per subset of size at least two."""
    _check_subset_cap(graph)
    md = max(graph.max_degree(), 1)
    g = generator_series(f, md, convention)
    if convention != "relations":
        # constant and scale of g do not change the filtered algebra
        g = normalize(g, md)
    h = compositional_inverse(g, md)
    deg = graph.degrees()
    rels = [Relation("nilpotency", (v,), deg[v] + 1) for v in range(graph.n_vertices)]
    rels += [Relation("deformed", I, graph.cut_size(I) + 1) for I in _subsets(graph.n_vertices, 2)]
    return RelationSet(graph, tuple(rels), g, h)


def redundancy_filter(rels: RelationSet) -> RelationSet:
    """Drop cut relations that follow from the relation of the complementary subset.

    For ``1 < |I| < |V|`` the subset ``I`` is kept when it is smaller than its
    complement; on a tie the lexicographically smaller of the two is kept.
    """
    n = rels.graph.n_vertices
    kept = []
    for r in rels.relations:
        if r.kind in ("graded", "deformed") and 1 < len(r.subset) < n:
            comp = tuple(v for v in range(n) if v not in r.subset)
            if len(r.subset) > len(comp) or (len(r.subset) == len(comp) and comp < r.subset):
                continue
        kept.append(r)
    return RelationSet(rels.graph, tuple(kept), rels.generators, rels.substitution)


@dataclass(frozen=True)
class RelationCheck:
    relation: Relation
    verified: bool


def generator_elements(graph: Multigraph, g: PolySeries) -> list[AlgebraElement]:
    deg = graph.degrees()
    return [eval_poly_at(g, vertex_flow(graph, v), deg[v]) for v in range(graph.n_vertices)]


def verify_relations(rels: RelationSet) -> list[RelationCheck]:
    """Evaluate every relation at ``y_v = g(X_v)`` and report whether it vanishes."""
    graph = rels.graph
    deg = graph.degrees()
    ys = generator_elements(graph, rels.generators)
    hy = [eval_poly_at(rels.substitution, y, deg[v]) for v, y in enumerate(ys)]
    out = []
    for r in rels.relations:
        if r.kind == "nilpotency":
            value = ys[r.subset[0]] ** r.exponent
        else:
            s = AlgebraElement(graph.n_edges)
            for v in r.subset:
                s = s + hy[v]
            value = s ** r.exponent
        out.append(RelationCheck(r, value.is_zero()))
    return out


def relation_report(checks: Sequence[RelationCheck], graph: Multigraph) -> list[dict]:
    return [
        {
            "subset": [graph.labels[v] for v in c.relation.subset],
            "exponent": c.relation.exponent,
            "kind": c.relation.kind,
            "verified": c.verified,
        }
        for c in checks
    ]


def dimension_consistency(graph: Multigraph, f: PolySeries, convention: str = "relations") -> dict:
    """Filtered total, graded total and forest count side by side."""
    filtered = hilbert_sequence(graph, f, convention=convention).total_dim
    graded = sum(graded_hilbert(graph))
    forests = spanning_forest_count(graph)
    return {
        "filtered_total": filtered,
        "graded_total": graded,
        "forest_count": forests,
        "consistent": filtered == graded == forests,
    }
