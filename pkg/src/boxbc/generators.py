"""Named graph families with a fixed canonical vertex ordering.

Paths and cycles number vertices by position, complete graphs arbitrarily,
stars put the hub at id 0.  Grids, hypercubes, Hamming graphs and tori are
materialized as Cartesian products, so their ids follow the mixed-radix
labeling of :mod:`boxbc.product`.
"""

from __future__ import annotations

from .graph import Graph, GraphError, graph_from_edges
from .product import cartesian_product


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path needs at least 1 vertex, got {n}")
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph needs at least 1 vertex, got {n}")
    return graph_from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves: int) -> Graph:
    """Hub vertex 0 joined to ``leaves`` leaf vertices."""
    if leaves < 1:
        raise GraphError(f"star needs at least 1 leaf, got {leaves}")
    return graph_from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def grid(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise GraphError(f"grid sides must be at least 1, got {m} x {n}")
    return cartesian_product([path(m), path(n)]).graph


def hypercube(r: int) -> Graph:
    if r < 1:
        raise GraphError(f"hypercube dimension must be at least 1, got {r}")
    return cartesian_product([complete(2)] * r).graph


def hamming(*sizes: int) -> Graph:
    if not sizes:
        raise GraphError("hamming graph needs at least one factor size")
    if any(s < 2 for s in sizes):
        raise GraphError(f"hamming factor sizes must be at least 2, got {sizes}")
    return cartesian_product([complete(s) for s in sizes]).graph


def torus(m: int, n: int) -> Graph:
    if m < 3 or n < 3:
        raise GraphError(f"torus cycle lengths must be at least 3, got {m} x {n}")
    return cartesian_product([cycle(m), cycle(n)]).graph


_FIXED_ARITY = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "star": (star, 1),
    "grid": (grid, 2),
    "hypercube": (hypercube, 1),
    "torus": (torus, 2),
}

FAMILIES = tuple(_FIXED_ARITY) + ("hamming",)


def generate(family: str, *params: int) -> Graph:
    """Build a named family instance; see :data:`FAMILIES` for the names."""
    if family == "hamming":
        return hamming(*params)
    try:
        builder, arity = _FIXED_ARITY[family]
    except KeyError:
        raise GraphError(f"unknown family {family!r}; expected one of {FAMILIES}") from None
    if len(params) != arity:
        raise GraphError(f"family {family!r} takes {arity} parameter(s), got {len(params)}")
    return builder(*params)
