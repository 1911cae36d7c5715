"""Finite multigraphs with totally ordered vertices.

Vertices are identified by their position ``0..n-1`` in the order; labels are
kept for display only.  Edges are identified by their index in the edge tuple
and stored with ``u <= v``.  A loop has ``u == v``.  The vertex order fixes the
orientation conventions used by the edge algebra, so reordering a graph is an
explicit operation (:meth:`Multigraph.reorder`).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import CapExceededError, GraphFormatError, InputError

DEFAULT_MAX_EDGES = 24
MAX_VERTICES_FOR_SUBSETS = 12


@dataclass(frozen=True)
class Edge:
    id: int
    u: int
    v: int

    @property
    def is_loop(self) -> bool:
        return self.u == self.v


@dataclass(frozen=True)
class Multigraph:
    labels: tuple[str, ...]
    ends: tuple[tuple[int, int], ...]
    name: str = ""

    def __post_init__(self) -> None:
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise GraphFormatError("vertex labels must be distinct")
        fixed = []
        for u, v in self.ends:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u}, {v}) refers to a missing vertex")
            fixed.append((min(u, v), max(u, v)))
        object.__setattr__(self, "ends", tuple(fixed))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], name: str = "") -> "Multigraph":
        return cls(tuple(f"v{i}" for i in range(n)), tuple(edges), name)

    @property
    def n_vertices(self) -> int:
        return len(self.labels)

    @property
    def n_edges(self) -> int:
        return len(self.ends)

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(Edge(i, u, v) for i, (u, v) in enumerate(self.ends))

    def degree(self, v: int) -> int:
        """Number of non-loop edges at ``v``."""
        return sum(1 for a, b in self.ends if a != b and v in (a, b))

    def degrees(self) -> list[int]:
        deg = [0] * self.n_vertices
        for a, b in self.ends:
            if a != b:
                deg[a] += 1
                deg[b] += 1
        return deg

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def cut_size(self, subset: Iterable[int]) -> int:
        """Number of edges with exactly one endpoint in ``subset``."""
        s = set(subset)
        return sum(1 for a, b in self.ends if (a in s) != (b in s))

    def edge_multiset(self) -> Counter:
        return Counter(self.ends)

    def has_loops(self) -> bool:
        return any(a == b for a, b in self.ends)

    def without_loops(self) -> "Multigraph":
        return Multigraph(self.labels, tuple(e for e in self.ends if e[0] != e[1]), self.name)

    def delete_edge(self, e: int) -> "Multigraph":
        """Remove edge ``e``; edges after it shift down by one."""
        self._check_edge(e)
        return Multigraph(self.labels, self.ends[:e] + self.ends[e + 1:], self.name)

    def identify_endpoints(self, e: int) -> "Multigraph":
        """Merge the endpoints of ``e`` keeping every edge, so ``e`` becomes a loop.

        Edge ids are unchanged, which makes the edge map of the quotient
        morphism the identity.  The merged vertex takes the smaller position.
        """
        self._check_edge(e)
        a, b = self.ends[e]
        if a == b:
            return self

        def image(x: int) -> int:
            if x == b:
                x = a
            return x - 1 if x > b else x

        labels = list(self.labels)
        labels[a] = f"{labels[a]}+{labels[b]}"
        del labels[b]
        return Multigraph(tuple(labels), tuple((image(x), image(y)) for x, y in self.ends), self.name)

    def contract_edge(self, e: int) -> "Multigraph":
        """Merge the endpoints of ``e`` and drop ``e``; parallel edges become loops."""
        self._check_edge(e)
        if self.ends[e][0] == self.ends[e][1]:
            raise InputError(f"edge {e} is a loop and cannot be contracted")
        return self.identify_endpoints(e).delete_edge(e)

    def reorder(self, order: Sequence[int]) -> "Multigraph":
        """Graph whose ``i``-th vertex is the old vertex ``order[i]``."""
        if sorted(order) != list(range(self.n_vertices)):
            raise InputError("reorder needs a permutation of the vertex positions")
        pos = {old: new for new, old in enumerate(order)}
        return Multigraph(
            tuple(self.labels[o] for o in order),
            tuple((pos[a], pos[b]) for a, b in self.ends),
            self.name,
        )

    def is_spanning_subgraph_of(self, other: "Multigraph") -> bool:
        if self.n_vertices != other.n_vertices:
            return False
        mine, theirs = self.edge_multiset(), other.edge_multiset()
        return all(theirs[k] >= c for k, c in mine.items())

    def _check_edge(self, e: int) -> None:
        if not 0 <= e < self.n_edges:
            raise InputError(f"no edge with id {e}")


def check_edge_cap(graph: Multigraph, max_edges: int = DEFAULT_MAX_EDGES) -> None:
    if graph.n_edges > max_edges:
        raise CapExceededError(f"graph has {graph.n_edges} edges; the cap is {max_edges}")


def parse_graph(text: str, name: str = "") -> Multigraph:
    """Parse the edge-list format.

    ``#`` starts a comment.  An optional ``vertices: a b c`` line fixes the
    vertex order; otherwise vertices are ordered by first appearance.  Every
    other non-empty line is ``u v``; ``u v`` with ``u == v`` is a loop and
    repeated lines are parallel edges.
    """
    declared: list[str] | None = None
    pairs: list[tuple[str, str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower().startswith("vertices:"):
            if declared is not None or pairs:
                raise GraphFormatError(f"line {lineno}: vertex header must come first and once")
            declared = line.split(":", 1)[1].split()
            if len(set(declared)) != len(declared):
                raise GraphFormatError(f"line {lineno}: duplicate vertex in header")
            continue
        toks = line.split()
        if len(toks) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {raw.strip()!r}")
        pairs.append((toks[0], toks[1], lineno))

    order: list[str] = list(declared) if declared is not None else []
    index = {lab: i for i, lab in enumerate(order)}
    ends = []
    for a, b, lineno in pairs:
        for lab in (a, b):
            if lab not in index:
                if declared is not None:
                    raise GraphFormatError(f"line {lineno}: vertex {lab!r} not declared")
                index[lab] = len(order)
                order.append(lab)
        ends.append((index[a], index[b]))
    return Multigraph(tuple(order), tuple(ends), name)


def format_graph(graph: Multigraph) -> str:
    lines = ["vertices: " + " ".join(graph.labels)]
    lines += [f"{graph.labels[a]} {graph.labels[b]}" for a, b in graph.ends]
    return "\n".join(lines) + "\n"


def spanning_forest_count(graph: Multigraph, max_edges: int = DEFAULT_MAX_EDGES) -> int:
    """Number of acyclic edge subsets (the empty set included).

    Subsets are enumerated by backtracking over the edges with a union-find
    that supports rollback, so cyclic branches are cut as soon as they close.
    """
    check_edge_cap(graph, max_edges)
    edges = [e for e in graph.ends if e[0] != e[1]]
    parent = list(range(graph.n_vertices))

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def count(i: int) -> int:
        if i == len(edges):
            return 1
        total = count(i + 1)
        ra, rb = find(edges[i][0]), find(edges[i][1])
        if ra != rb:
            parent[ra] = rb
            total += count(i + 1)
            parent[ra] = ra
        return total

    return count(0)


def _poly_add(p: tuple[int, ...], q: tuple[int, ...], shift: int = 0) -> tuple[int, ...]:
    out = list(p) + [0] * max(0, len(q) + shift - len(p))
    for i, c in enumerate(q):
        out[i + shift] += c
    return tuple(out)


def _canonical(edges: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    """Drop loops and isolated vertices, then renumber vertices densely."""
    kept = sorted((min(a, b), max(a, b)) for a, b in edges if a != b)
    relabel: dict[int, int] = {}
    for a, b in kept:
        relabel.setdefault(a, len(relabel))
        relabel.setdefault(b, len(relabel))
    return tuple(sorted((relabel[a], relabel[b]) for a, b in kept))


@lru_cache(maxsize=None)
def _deletion_contraction(edges: tuple[tuple[int, int], ...]) -> tuple[int, ...]:
    # the key is the exact labeled edge multiset, so a cache hit is always valid
    if not edges:
        return (1,)
    deg = Counter()
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    pick = next((i for i, (a, b) in enumerate(edges) if deg[a] == 1 or deg[b] == 1), 0)
    a, b = edges[pick]
    rest = edges[:pick] + edges[pick + 1:]
    contracted = _canonical(
        (a if x == b else x, a if y == b else y) for x, y in rest
    )
    h_contract = _deletion_contraction(contracted)
    if deg[a] == 1 or deg[b] == 1:
        # pendant edge: deletion and contraction agree up to an isolated vertex
        return _poly_add(h_contract, h_contract, 1)
    return _poly_add(h_contract, _deletion_contraction(_canonical(rest)), 1)


def graded_hilbert(graph: Multigraph, max_edges: int = DEFAULT_MAX_EDGES) -> tuple[int, ...]:
    """Graded Hilbert sequence from ``H(G) = H(G/e) + t H(G - e)`` with ``H`` of an edgeless graph ``1``."""
    check_edge_cap(graph, max_edges)
    return trim(_deletion_contraction(_canonical(graph.ends)))


def trim(seq: Iterable[int]) -> tuple[int, ...]:
    """Drop trailing zeros."""
    out = list(seq)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)
