"""Immutable simple undirected graphs with dense integer vertex ids."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Invalid graph input: bad vertex ids, self-loops, duplicate edges, bad parameters."""


class DisconnectedGraphError(GraphError):
    """An operation that needs a connected graph received a disconnected one."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``.  Instances are
    immutable and hashable; build them through :func:`graph_from_edges` or the
    generators so the invariants (no loops, no duplicate edges, symmetric
    adjacency) hold.
    """

    adjacency: tuple[tuple[int, ...], ...]

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    @cached_property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[self.check_vertex(v)])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[self.check_vertex(v)]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as ``(u, v)`` with ``u < v``, in sorted order."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if v > u:
                    yield (u, v)

    def check_vertex(self, v: int) -> int:
        """Return ``v`` if it is a valid vertex id, else raise :class:`GraphError`."""
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < len(self.adjacency):
            raise GraphError(f"vertex id {v!r} out of range 0..{len(self.adjacency) - 1}")
        return v


def graph_from_edges(vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a canonical :class:`Graph` from an edge list.

    Rejects out-of-range ids, self-loops and duplicate edges.  Connectivity is
    not required here; analysis entry points check it separately.
    """
    if vertex_count < 0:
        raise GraphError(f"vertex count must be non-negative, got {vertex_count}")
    nbrs: list[set[int]] = [set() for _ in range(vertex_count)]
    for u, v in edges:
        for w in (u, v):
            if not isinstance(w, int) or isinstance(w, bool) or not 0 <= w < vertex_count:
                raise GraphError(f"vertex id {w!r} out of range 0..{vertex_count - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if v in nbrs[u]:
            raise GraphError(f"duplicate edge ({u}, {v})")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(tuple(tuple(sorted(s)) for s in nbrs))


def is_connected(g: Graph) -> bool:
    """True when every vertex is reachable from vertex 0 (vacuously for n <= 1)."""
    n = g.vertex_count
    if n <= 1:
        return True
    seen = bytearray(n)
    seen[0] = 1
    queue = deque([0])
    count = 1
    adjacency = g.adjacency
    while queue:
        v = queue.popleft()
        for w in adjacency[v]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                queue.append(w)
    return count == n


def require_connected(g: Graph) -> Graph:
    """Return ``g`` unchanged, raising :class:`DisconnectedGraphError` if disconnected."""
    if not is_connected(g):
        raise DisconnectedGraphError(
            f"graph with {g.vertex_count} vertices and {g.edge_count} edges is not connected"
        )
    return g
