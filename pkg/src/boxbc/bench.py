"""Timing ladders comparing the two routes to product betweenness.

Each ladder instance is timed end to end from its factor graphs: the
``brandes`` route pays for materializing the product before accumulating,
the ``factorized`` route works from factor tables alone.  Row order is
deterministic; only the seconds column varies between runs.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from time import perf_counter
from typing import Iterator, Sequence

from .centrality import betweenness
from .generators import complete, cycle, path
from .graph import Graph, GraphError
from .product import cartesian_product, factorized_betweenness_all, product_spec

BENCH_FAMILIES = ("torus", "hamming", "grid", "hypercube")
BENCH_METHODS = ("brandes", "factorized")

# Keep accidental ladder sizes from materializing something enormous.
_MAX_BENCH_VERTICES = 100_000


@dataclass(frozen=True)
class BenchRow:
    instance: str
    n: int
    method: str
    seconds: float


def _ladder(family: str, maximum: int) -> Iterator[tuple[str, tuple[Graph, ...]]]:
    if family == "torus":
        low, size = 3, lambda m: (f"C_{m} x C_{m}", (cycle(m), cycle(m)))
    elif family == "hamming":
        low, size = 2, lambda m: (f"K_{m} x K_{m}", (complete(m), complete(m)))
    elif family == "grid":
        low, size = 2, lambda m: (f"P_{m} x P_{m}", (path(m), path(m)))
    elif family == "hypercube":
        low, size = 1, lambda m: (f"Q_{m}", (complete(2),) * m)
    else:
        raise GraphError(f"unknown bench family {family!r}; expected one of {', '.join(BENCH_FAMILIES)}")
    if maximum < low:
        raise GraphError(f"bench family {family!r} needs a maximum of at least {low}")
    for m in range(low, maximum + 1):
        yield size(m)


def run_bench(
    family: str,
    maximum: int,
    methods: Sequence[str] = BENCH_METHODS,
) -> list[BenchRow]:
    """Time every ladder instance with every requested method."""
    for method in methods:
        if method not in BENCH_METHODS:
            raise GraphError(f"unknown bench method {method!r}; expected one of {', '.join(BENCH_METHODS)}")
    rows = []
    for label, factors in _ladder(family, maximum):
        n = 1
        for g in factors:
            n *= g.vertex_count
        if n > _MAX_BENCH_VERTICES:
            raise GraphError(f"{label} has {n} vertices; bench instances are capped at {_MAX_BENCH_VERTICES}")
        for method in methods:
            start = perf_counter()
            if method == "brandes":
                betweenness(cartesian_product(factors).graph, method="brandes")
            else:
                factorized_betweenness_all(product_spec(factors))
            rows.append(BenchRow(label, n, method, perf_counter() - start))
    return rows


def bench_to_csv(rows: Sequence[BenchRow]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["instance", "n", "method", "seconds"])
    for row in rows:
        writer.writerow([row.instance, row.n, row.method, f"{row.seconds:.6f}"])
    return out.getvalue()
