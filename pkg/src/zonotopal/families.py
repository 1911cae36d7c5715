"""Named graph families.

Vertex order conventions (vertices are ``v0, v1, ...``):

* path-like families (``chain``, ``dn``, ``dn_hat``, ``leg(k)``, ``fork_leg(k)``,
  ``fork_leg_start(k)``) list the spine from left to right and then the extra
  pendant vertices in the order of their attachment points;
* ``cycle`` goes once around the cycle;
* complete graphs use ``0..n-1`` and the removed edges are ``{v0,v1}`` and
  ``{v2,v3}``;
* the squares run ``v0 v1 v2 v3`` around the square.

``leg(k)`` is a path on ``n-1`` vertices with one pendant vertex on the
``k``-th spine vertex counted from the right end, so ``leg(2)`` is ``dn``.
``fork_leg(k)`` is ``dn`` (a path ending in a fork) with one more pendant
vertex on the ``k``-th spine vertex from the forked end.  ``fork_leg_start(k)``
puts that pendant vertex on the ``k``-th spine vertex from the other end.
"""

from __future__ import annotations

import re
from typing import Callable, Sequence

from .errors import InputError
from .graph import Multigraph


def caterpillar(spine: int, legs: Sequence[int], name: str = "") -> Multigraph:
    """Path on ``spine`` vertices plus one pendant vertex per entry of ``legs``.

    Entries of ``legs`` are spine indices; negative values count from the end.
    """
    edges = [(i, i + 1) for i in range(spine - 1)]
    for j, at in enumerate(legs):
        pos = at if at >= 0 else spine + at
        if not 0 <= pos < spine:
            raise InputError(f"leg position {at} outside a spine of length {spine}")
        edges.append((pos, spine + j))
    return Multigraph.from_edges(spine + len(legs), edges, name)


def chain(n: int) -> Multigraph:
    return caterpillar(n, [], f"chain({n})")


def cycle(n: int) -> Multigraph:
    return Multigraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"cycle({n})")


def dn(n: int) -> Multigraph:
    return caterpillar(n - 1, [-2], f"dn({n})")


def dn_hat(n: int) -> Multigraph:
    return caterpillar(n - 2, [1, -2], f"dn_hat({n})")


def leg(k: int, n: int) -> Multigraph:
    return caterpillar(n - 1, [-k], f"leg({k})({n})")


def fork_leg(k: int, n: int) -> Multigraph:
    return caterpillar(n - 2, [-k, -2], f"fork_leg({k})({n})")


def fork_leg_start(k: int, n: int) -> Multigraph:
    return caterpillar(n - 2, [k - 1, -2], f"fork_leg_start({k})({n})")


def complete(n: int) -> Multigraph:
    return Multigraph.from_edges(
        n, [(i, j) for i in range(n) for j in range(i + 1, n)], f"kn({n})"
    )


def _complete_minus(n: int, removed: set[tuple[int, int]], name: str) -> Multigraph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in removed]
    return Multigraph.from_edges(n, edges, name)


def complete_minus_edge(n: int) -> Multigraph:
    return _complete_minus(n, {(0, 1)}, f"kn_minus_edge({n})")


def complete_minus_two_disjoint(n: int) -> Multigraph:
    return _complete_minus(n, {(0, 1), (2, 3)}, f"kn_minus_two_disjoint({n})")


def square_parallel_doubles(n: int | None = None) -> Multigraph:
    """Four-cycle with the two opposite edges ``v0v1`` and ``v2v3`` doubled."""
    return Multigraph.from_edges(
        4, [(0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (3, 0)], "square_parallel_doubles"
    )


def square_adjacent_doubles(n: int | None = None) -> Multigraph:
    """Four-cycle with the two edges at ``v0`` doubled."""
    return Multigraph.from_edges(
        4, [(0, 1), (0, 1), (1, 2), (2, 3), (3, 0), (3, 0)], "square_adjacent_doubles"
    )


def k3_plus_e(n: int | None = None) -> Multigraph:
    """Triangle with ``v1v2`` doubled, so ``v1`` and ``v2`` have degree 3."""
    return Multigraph.from_edges(3, [(0, 1), (0, 2), (1, 2), (1, 2)], "k3_plus_e")


# name -> (builder, smallest n, whether a (k) parameter is required)
_FAMILIES: dict[str, tuple[Callable, int, bool]] = {
    "chain": (chain, 1, False),
    "cycle": (cycle, 3, False),
    "dn": (dn, 4, False),
    "dn_hat": (dn_hat, 5, False),
    "kn": (complete, 1, False),
    "kn_minus_edge": (complete_minus_edge, 2, False),
    "kn_minus_two_disjoint": (complete_minus_two_disjoint, 4, False),
    "square_parallel_doubles": (square_parallel_doubles, 0, False),
    "square_adjacent_doubles": (square_adjacent_doubles, 0, False),
    "k3_plus_e": (k3_plus_e, 0, False),
    "leg": (leg, 3, True),
    "fork_leg": (fork_leg, 4, True),
    "fork_leg_start": (fork_leg_start, 4, True),
}

FIXED_SIZE = {"square_parallel_doubles", "square_adjacent_doubles", "k3_plus_e"}


def family_names() -> list[str]:
    return sorted(_FAMILIES)


def generate_family(token: str, n: int | None = None) -> Multigraph:
    """Build a family member from a token such as ``chain`` or ``leg(3)``."""
    m = re.fullmatch(r"\s*([a-z][a-z0-9_]*)\s*(?:\(\s*(\d+)\s*\))?\s*", token)
    if m is None or m.group(1) not in _FAMILIES:
        raise InputError(f"unknown family {token!r}; known: {', '.join(family_names())}")
    fam, param = m.group(1), m.group(2)
    builder, n_min, needs_param = _FAMILIES[fam]
    if needs_param != (param is not None):
        raise InputError(f"family {fam!r} {'needs' if needs_param else 'takes no'} (k) parameter")
    if fam in FIXED_SIZE:
        return builder()
    if n is None:
        raise InputError(f"family {fam!r} needs a size n")
    if param is not None:
        k = int(param)
        # the pendant vertex must land on an existing spine vertex
        spine = n - 1 if fam == "leg" else n - 2
        if k < 1 or k > spine:
            raise InputError(f"{token} needs 1 <= k <= spine length {spine} (n={n})")
        return builder(k, n)
    if n < n_min:
        raise InputError(f"family {fam!r} needs n >= {n_min}, got {n}")
    return builder(n)
