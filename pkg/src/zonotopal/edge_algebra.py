"""The commutative algebra generated by one square-zero variable per edge.

An element is a sparse map from edge subsets (bitmasks, bit ``i`` for edge
``i``) to rational coefficients.  Products of monomials sharing an edge vanish;
there are no signs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence, Union

from .errors import InputError
from .graph import Multigraph
from .series import PolySeries

Scalar = Union[int, Fraction]


def mul_terms(a: Mapping[int, object], b: Mapping[int, object]) -> dict:
    """Product of two sparse term maps; the smaller map drives the outer loop."""
    if len(a) > len(b):
        a, b = b, a
    out: dict = {}
    for s, x in a.items():
        for t, y in b.items():
            if s & t:
                continue
            st = s | t
            out[st] = out.get(st, 0) + x * y
    return {k: v for k, v in out.items() if v}


class AlgebraElement:
    __slots__ = ("n_edges", "terms")

    def __init__(self, n_edges: int, terms: Mapping[int, Scalar] | None = None):
        self.n_edges = n_edges
        self.terms: dict[int, Scalar] = {}
        limit = 1 << n_edges
        for mask, c in (terms or {}).items():
            if not 0 <= mask < limit:
                raise InputError(f"monomial {mask:#b} uses edges beyond {n_edges}")
            if c:
                self.terms[mask] = c

    @classmethod
    def one(cls, n_edges: int) -> "AlgebraElement":
        return cls(n_edges, {0: 1})

    @classmethod
    def edge(cls, n_edges: int, e: int) -> "AlgebraElement":
        return cls(n_edges, {1 << e: 1})

    def _same_ring(self, other: "AlgebraElement") -> None:
        if other.n_edges != self.n_edges:
            raise InputError("elements live in algebras with different edge counts")

    def _lift(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            self._same_ring(other)
            return other
        if isinstance(other, (int, Fraction)):
            return AlgebraElement(self.n_edges, {0: other})
        return NotImplemented

    def __add__(self, other) -> "AlgebraElement":
        o = self._lift(other)
        if o is NotImplemented:
            return o
        out = dict(self.terms)
        for k, v in o.terms.items():
            out[k] = out.get(k, 0) + v
        return AlgebraElement(self.n_edges, out)

    __radd__ = __add__

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.n_edges, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other) -> "AlgebraElement":
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other) -> "AlgebraElement":
        return (-self) + other

    def scalar_mul(self, c: Scalar) -> "AlgebraElement":
        return AlgebraElement(self.n_edges, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other) -> "AlgebraElement":
        if isinstance(other, (int, Fraction)):
            return self.scalar_mul(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._same_ring(other)
        return AlgebraElement(self.n_edges, mul_terms(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "AlgebraElement":
        if k < 0:
            raise InputError("negative powers are not defined")
        out = AlgebraElement.one(self.n_edges)
        for _ in range(k):
            out = out * self
            if out.is_zero():
                break
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = AlgebraElement(self.n_edges, {0: other})
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.n_edges == other.n_edges and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n_edges, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> Scalar:
        return self.terms.get(0, 0)

    def degree(self) -> int:
        return max((bin(m).count("1") for m in self.terms), default=-1)

    def __repr__(self) -> str:
        return f"AlgebraElement({self.n_edges}, {str(self)!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mask in sorted(self.terms):
            mono = "".join(f"e{i}" for i in range(self.n_edges) if mask >> i & 1) or "1"
            parts.append(f"{self.terms[mask]} * {mono}")
        return " + ".join(parts)


def vertex_flow(graph: Multigraph, v: int) -> AlgebraElement:
    """Signed sum of the edges at ``v``: ``+1`` towards a later vertex, ``-1`` towards an earlier one."""
    terms: dict[int, int] = {}
    for i, (a, b) in enumerate(graph.ends):
        if a == b:
            continue
        if v == a:
            terms[1 << i] = 1
        elif v == b:
            terms[1 << i] = -1
    return AlgebraElement(graph.n_edges, terms)


def eval_poly_at(f: PolySeries, a: AlgebraElement, bound: int | None = None) -> AlgebraElement:
    """``f(a)`` using powers of ``a`` up to ``bound`` only.

    Pass ``bound`` when ``a`` is known to satisfy ``a^(bound+1) = 0``; a vertex
    flow satisfies this with ``bound`` equal to the degree of the vertex.
    """
    top = f.degree if bound is None else min(f.degree, bound)
    out = AlgebraElement(a.n_edges, {0: f.coeff(0)})
    power = AlgebraElement.one(a.n_edges)
    for k in range(1, top + 1):
        power = power * a
        if power.is_zero():
            break
        c = f.coeff(k)
        if c:
            out = out + power.scalar_mul(c)
    return out


def project_delete(a: AlgebraElement, e: int) -> AlgebraElement:
    """Image under ``phi_e -> 0``, re-indexed to match :meth:`Multigraph.delete_edge`."""
    low = (1 << e) - 1
    out = {}
    for mask, c in a.terms.items():
        if mask >> e & 1:
            continue
        out[(mask & low) | ((mask >> (e + 1)) << e)] = c
    return AlgebraElement(a.n_edges - 1, out)


def partial_derivative(a: AlgebraElement, e: int) -> AlgebraElement:
    """Derivative in ``phi_e``: monomials containing ``e`` lose it, the rest vanish."""
    bit = 1 << e
    return AlgebraElement(
        a.n_edges, {mask ^ bit: c for mask, c in a.terms.items() if mask & bit}
    )


def pullback(edge_map: Sequence[int], a: AlgebraElement, n_source_edges: int | None = None) -> AlgebraElement:
    """Pull ``a`` back along an injective edge map.

    ``edge_map[i]`` is the target edge of source edge ``i``.  Target edges
    outside the image are sent to zero.
    """
    n_source = len(edge_map) if n_source_edges is None else n_source_edges
    if len(set(edge_map)) != len(edge_map):
        raise InputError("edge map must be injective")
    back = {t: s for s, t in enumerate(edge_map)}
    out = {}
    for mask, c in a.terms.items():
        src = 0
        m = mask
        while m:
            low = m & -m
            t = low.bit_length() - 1
            if t not in back:
                break
            src |= 1 << back[t]
            m ^= low
        else:
            out[src] = c
    return AlgebraElement(n_source, out)
