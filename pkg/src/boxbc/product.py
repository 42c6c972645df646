"""Cartesian products and factorized distance, geodesic-count and dependency formulas.

A product vertex is a coordinate vector, one coordinate per factor.  Distances
add across factors, and a geodesic in the product interleaves one geodesic per
factor, so the count multiplies the factor counts by the number of ways to
interleave the factor steps (a multinomial coefficient).  Pair dependencies
therefore factor through per-factor geodesic tables, and betweenness of a
product vertex never needs a search of the product itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import comb
from typing import Iterable, Sequence

from .centrality import wiener
from .geodesic import GeodesicTable, all_pairs_tables
from .graph import Graph, GraphError, graph_from_edges, require_connected
from .rational import ZERO

Coords = tuple[int, ...]


@dataclass(frozen=True)
class ProductSpec:
    """Ordered factor list plus the mixed-radix labeling of the product vertices.

    Vertex ids are row-major: ``id = sum(v[i] * prod(radices[i+1:]))``, so the
    last coordinate varies fastest.  ``encode``/``decode`` are mutually inverse
    on ``0..vertex_count-1``.
    """

    factors: tuple[Graph, ...]

    @cached_property
    def radices(self) -> tuple[int, ...]:
        return tuple(f.vertex_count for f in self.factors)

    @cached_property
    def strides(self) -> tuple[int, ...]:
        strides = [1] * len(self.factors)
        for i in range(len(self.factors) - 2, -1, -1):
            strides[i] = strides[i + 1] * self.radices[i + 1]
        return tuple(strides)

    @cached_property
    def vertex_count(self) -> int:
        count = 1
        for r in self.radices:
            count *= r
        return count

    def encode(self, coords: Sequence[int]) -> int:
        if len(coords) != len(self.factors):
            raise GraphError(f"expected {len(self.factors)} coordinates, got {len(coords)}")
        vid = 0
        for c, radix, stride in zip(coords, self.radices, self.strides):
            if not 0 <= c < radix:
                raise GraphError(f"coordinate {c} out of range 0..{radix - 1}")
            vid += c * stride
        return vid

    def decode(self, vid: int) -> Coords:
        if not 0 <= vid < self.vertex_count:
            raise GraphError(f"vertex id {vid} out of range 0..{self.vertex_count - 1}")
        coords = []
        for radix in reversed(self.radices):
            vid, c = divmod(vid, radix)
            coords.append(c)
        return tuple(reversed(coords))

    def coordinates(self) -> list[Coords]:
        """All coordinate vectors in vertex-id order."""
        return [self.decode(vid) for vid in range(self.vertex_count)]


@dataclass(frozen=True)
class ProductGraph:
    """A product spec together with the materialized graph on the labeled vertices."""

    spec: ProductSpec
    graph: Graph


def product_spec(factors: Iterable[Graph]) -> ProductSpec:
    """Validated :class:`ProductSpec`; every factor must be connected and non-empty."""
    factors = tuple(factors)
    if not factors:
        raise GraphError("a product needs at least one factor")
    for f in factors:
        if f.vertex_count == 0:
            raise GraphError("a product factor cannot be empty")
        require_connected(f)
    return ProductSpec(factors)


def cartesian_product(factors: Iterable[Graph]) -> ProductGraph:
    """Materialize the Cartesian product under the mixed-radix labeling.

    Two product vertices are adjacent when their coordinates differ in exactly
    one position and that pair is an edge of the corresponding factor.
    """
    spec = product_spec(factors)
    edges: list[tuple[int, int]] = []
    for vid in range(spec.vertex_count):
        coords = spec.decode(vid)
        for i, factor in enumerate(spec.factors):
            stride = spec.strides[i]
            ci = coords[i]
            for w in factor.adjacency[ci]:
                if w > ci:
                    edges.append((vid, vid + (w - ci) * stride))
    return ProductGraph(spec, graph_from_edges(spec.vertex_count, edges))


def factor_tables(spec: ProductSpec) -> tuple[tuple[GeodesicTable, ...], ...]:
    """All-pairs geodesic tables of every factor, computed once per spec."""
    cached = spec.__dict__.get("_factor_tables")
    if cached is None:
        cached = tuple(all_pairs_tables(f) for f in spec.factors)
        object.__setattr__(spec, "_factor_tables", cached)
    return cached


def _check_coords(spec: ProductSpec, coords: Sequence[int]) -> Coords:
    spec.encode(coords)
    return tuple(coords)


def _multinomial(parts: Iterable[int]) -> int:
    # number of interleavings of blocks with the given sizes: (sum parts)! / prod(part!)
    total = 0
    result = 1
    for p in parts:
        total += p
        result *= comb(total, p)
    return result


def product_distance(spec: ProductSpec, u: Sequence[int], v: Sequence[int]) -> int:
    """Distance in the product: the sum of per-factor distances."""
    u = _check_coords(spec, u)
    v = _check_coords(spec, v)
    tables = factor_tables(spec)
    return sum(tables[i][u[i]].dist[v[i]] for i in range(len(spec.factors)))


def product_sigma(spec: ProductSpec, u: Sequence[int], v: Sequence[int]) -> int:
    """Geodesic count in the product.

    The product of the factor counts, times the multinomial coefficient that
    counts the interleavings of the per-factor steps.
    """
    u = _check_coords(spec, u)
    v = _check_coords(spec, v)
    tables = factor_tables(spec)
    count = 1
    dists = []
    for i in range(len(spec.factors)):
        t = tables[i][u[i]]
        count *= t.sigma[v[i]]
        dists.append(t.dist[v[i]])
    return count * _multinomial(dists)


def interval_membership(spec: ProductSpec, v1: Sequence[int], v2: Sequence[int], v3: Sequence[int]) -> bool:
    """True when ``v3`` lies on a shortest ``v1``-``v2`` path in the product.

    Holds exactly when every coordinate of ``v3`` lies in the corresponding
    factor interval, which is the per-factor distance test below.
    """
    v1 = _check_coords(spec, v1)
    v2 = _check_coords(spec, v2)
    v3 = _check_coords(spec, v3)
    tables = factor_tables(spec)
    for i in range(len(spec.factors)):
        ta = tables[i][v1[i]]
        tc = tables[i][v3[i]]
        if ta.dist[v3[i]] + tc.dist[v2[i]] != ta.dist[v2[i]]:
            return False
    return True


def product_pair_dependency(spec: ProductSpec, u: Sequence[int], v: Sequence[int], x: Sequence[int]) -> Fraction:
    """Pair dependency of ``{u, v}`` on ``x``, from factor tables alone.

    Computes ``sigma(u,x) * sigma(x,v) / sigma(u,v)`` with every sigma in its
    factorized form.  Factors where ``u`` and ``v`` project to the same vertex
    contribute a unit count, and an endpoint projection contributes the full
    factor count, so coincident projections need no special casing.
    """
    u = _check_coords(spec, u)
    v = _check_coords(spec, v)
    x = _check_coords(spec, x)
    if u == v:
        raise GraphError("pair dependency needs two distinct endpoints")
    if x == u or x == v:
        return ZERO
    tables = factor_tables(spec)
    num = 1
    den = 1
    d_ux: list[int] = []
    d_xv: list[int] = []
    d_uv: list[int] = []
    for i in range(len(spec.factors)):
        ta = tables[i][u[i]]
        tx = tables[i][x[i]]
        a, b, c = u[i], v[i], x[i]
        dac = ta.dist[c]
        dcb = tx.dist[b]
        dab = ta.dist[b]
        if dac + dcb != dab:
            return ZERO
        num *= ta.sigma[c] * tx.sigma[b]
        den *= ta.sigma[b]
        d_ux.append(dac)
        d_xv.append(dcb)
        d_uv.append(dab)
    num *= _multinomial(d_ux) * _multinomial(d_xv)
    den *= _multinomial(d_uv)
    return Fraction(num, den)


def factorized_betweenness(spec: ProductSpec, x: Sequence[int]) -> Fraction:
    """Betweenness of one product vertex, summed over unordered product pairs.

    Works entirely from the factor geodesic tables; the product graph is never
    materialized or searched.
    """
    x = _check_coords(spec, x)
    xid = spec.encode(x)
    coords = spec.coordinates()
    n = spec.vertex_count
    total = ZERO
    for uid in range(n):
        if uid == xid:
            continue
        cu = coords[uid]
        for vid in range(uid + 1, n):
            if vid == xid:
                continue
            total += product_pair_dependency(spec, cu, coords[vid], x)
    return total


def factorized_betweenness_all(spec: ProductSpec) -> tuple[Fraction, ...]:
    """Betweenness of every product vertex via the factorized dependency.

    Pair-outer accumulation: for each unordered pair the interval test prunes
    cheap misses, and the shared denominator is built once per pair.
    """
    tables = factor_tables(spec)
    coords = spec.coordinates()
    n = spec.vertex_count
    k = len(spec.factors)
    acc = [ZERO] * n
    idx = range(k)
    for uid in range(n):
        cu = coords[uid]
        t_u = [tables[i][cu[i]] for i in idx]
        for vid in range(uid + 1, n):
            cv = coords[vid]
            den = 1
            d_uv = []
            for i in idx:
                den *= t_u[i].sigma[cv[i]]
                d_uv.append(t_u[i].dist[cv[i]])
            den *= _multinomial(d_uv)
            for xid in range(n):
                if xid == uid or xid == vid:
                    continue
                cx = coords[xid]
                num = 1
                d_ux = []
                d_xv = []
                for i in idx:
                    tu = t_u[i]
                    tx = tables[i][cx[i]]
                    c, b = cx[i], cv[i]
                    dac = tu.dist[c]
                    dcb = tx.dist[b]
                    if dac + dcb != tu.dist[b]:
                        num = 0
                        break
                    num *= tu.sigma[c] * tx.sigma[b]
                    d_ux.append(dac)
                    d_xv.append(dcb)
                if num:
                    num *= _multinomial(d_ux) * _multinomial(d_xv)
                    acc[xid] += Fraction(num, den)
    return tuple(acc)


def product_wiener(factors: Iterable[Graph]) -> int:
    """Wiener index of the product from the factor indices alone.

    ``sum_i W(G_i) * prod_{j != i} |G_j|^2``; no product materialization.
    """
    spec = product_spec(factors)
    radices = spec.radices
    total = 0
    for i, factor in enumerate(spec.factors):
        scale = 1
        for j, r in enumerate(radices):
            if j != i:
                scale *= r * r
        total += wiener(factor) * scale
    return total
