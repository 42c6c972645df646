"""Self-checking suites that cross-validate every computation route.

Each check compares two independent routes to the same quantity (for
example a closed-form formula against Brandes accumulation on the
materialized graph) over a fixed instance set, and fails fast with a
counterexample string.  ``run_verify`` executes the checks for one
scope, or all of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb, factorial, prod
from typing import Callable, Iterator

from .centrality import average_distance, betweenness, wiener
from .closedform import (
    cycle_product_wiener,
    cycle_wiener,
    debruijn_count,
    even_cycles_bc,
    even_cycles_bc_alt,
    grid_bc,
    hamming_bc,
    hypercube_bc,
    odd_cycles_bc,
    torus_bc,
    torus_bc_alt,
    uniform_kn_bc,
)
from .edgelist import format_edge_list, parse_edge_list
from .generators import complete, cycle, grid, hamming, hypercube, path, star, torus
from .geodesic import (
    all_pairs_tables,
    diameter,
    distance,
    interval,
    is_geodetic,
    pair_dependency,
    sigma,
)
from .graph import Graph, GraphError
from .product import (
    ProductGraph,
    cartesian_product,
    factorized_betweenness_all,
    interval_membership,
    product_distance,
    product_pair_dependency,
    product_sigma,
    product_spec,
    product_wiener,
)
from .rational import ONE, ZERO
from .report import report_from_json, report_to_csv, report_to_json, values_from_csv

SCOPES = ("core", "products", "closed-forms", "sum-identity", "cli", "all")


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check within a scope."""

    scope: str
    name: str
    passed: bool
    detail: str


class CheckFailure(Exception):
    """Raised inside a check body at the first counterexample."""


_CHECKS: list[tuple[str, str, Callable[[], str]]] = []


def _check(scope: str, name: str) -> Callable[[Callable[[], str]], Callable[[], str]]:
    def register(fn: Callable[[], str]) -> Callable[[], str]:
        _CHECKS.append((scope, name, fn))
        return fn

    return register


def run_verify(scope: str = "all") -> list[CheckResult]:
    """Run every check in *scope* and return their results in order."""
    if scope not in SCOPES:
        raise GraphError(f"unknown scope {scope!r}; expected one of {', '.join(SCOPES)}")
    results = []
    for check_scope, name, fn in _CHECKS:
        if scope != "all" and check_scope != scope:
            continue
        try:
            detail = fn()
            results.append(CheckResult(check_scope, name, True, detail))
        except CheckFailure as failure:
            results.append(CheckResult(check_scope, name, False, str(failure)))
    return results


# ---------------------------------------------------------------------------
# instance sets


@lru_cache(maxsize=1)
def _basket() -> tuple[tuple[str, Graph], ...]:
    entries: list[tuple[str, Graph]] = []
    entries.extend((f"P_{n}", path(n)) for n in range(2, 6))
    entries.extend((f"C_{n}", cycle(n)) for n in range(3, 7))
    entries.extend((f"K_{n}", complete(n)) for n in range(2, 6))
    entries.append(("star_3", star(3)))
    return tuple(entries)


@lru_cache(maxsize=1)
def _distinct_basket() -> tuple[tuple[str, Graph], ...]:
    # P_2 == K_2 and C_3 == K_3 as labeled graphs; keep the first label.
    seen: dict[Graph, str] = {}
    for label, g in _basket():
        seen.setdefault(g, label)
    return tuple((label, g) for g, label in seen.items())


@lru_cache(maxsize=None)
def _product_multisets(max_vertices: int, max_arity: int) -> tuple[tuple[str, tuple[Graph, ...]], ...]:
    """Multisets of basket factors whose product stays within *max_vertices*."""
    out = []
    for arity in range(1, max_arity + 1):
        for combo in combinations_with_replacement(_distinct_basket(), arity):
            if prod(g.vertex_count for _, g in combo) <= max_vertices:
                label = " x ".join(name for name, _ in combo)
                out.append((label, tuple(g for _, g in combo)))
    return tuple(out)


@lru_cache(maxsize=1)
def _agreement_instances() -> tuple[tuple[str, tuple[Graph, ...]], ...]:
    k2, k3 = complete(2), complete(3)
    pairs = [
        (f"{a} x {b}", (g, h))
        for (a, g), (b, h) in combinations_with_replacement(_distinct_basket(), 2)
        if g.vertex_count * h.vertex_count <= 36
    ]
    pairs.append(("Q_3", (k2, k2, k2)))
    pairs.append(("Q_4", (k2, k2, k2, k2)))
    pairs.append(("K_2 x K_2 x K_3", (k2, k2, k3)))
    return tuple(pairs)


@lru_cache(maxsize=None)
def _materialize(factors: tuple[Graph, ...]) -> ProductGraph:
    return cartesian_product(factors)


def _size_multisets(min_size: int, max_product: int, step: int = 1) -> Iterator[tuple[int, ...]]:
    """Nondecreasing size tuples with the given product bound."""

    def extend(prefix: tuple[int, ...], low: int, budget: int) -> Iterator[tuple[int, ...]]:
        if prefix:
            yield prefix
        n = low
        while n <= budget:
            yield from extend(prefix + (n,), n, budget // n)
            n += step
        return

    yield from extend((), min_size, max_product)


# ---------------------------------------------------------------------------
# core scope


@lru_cache(maxsize=1)
def _core_instances() -> tuple[tuple[str, Graph], ...]:
    extra = (
        ("P_7", path(7)),
        ("C_7", cycle(7)),
        ("K_6", complete(6)),
        ("star_5", star(5)),
        ("grid_3x4", grid(3, 4)),
        ("Q_3", hypercube(3)),
        ("torus_3x4", torus(3, 4)),
    )
    return _basket() + extra


@_check("core", "geodesic-tables")
def _check_geodesic_tables() -> str:
    checked = 0
    for label, g in _core_instances():
        tables = all_pairs_tables(g)
        for s, table in enumerate(tables):
            if table.dist[s] != 0 or table.sigma[s] != 1:
                raise CheckFailure(f"{label}: source row broken at s={s}")
            for v in range(g.vertex_count):
                if table.sigma[v] < 1:
                    raise CheckFailure(f"{label}: unreachable vertex {v} from {s}")
                if v == s:
                    continue
                below = [w for w in g.neighbors(v) if table.dist[w] == table.dist[v] - 1]
                if not below:
                    raise CheckFailure(f"{label}: no predecessor for v={v} from s={s}")
                if table.sigma[v] != sum(table.sigma[w] for w in below):
                    raise CheckFailure(f"{label}: count recurrence broken at v={v}, s={s}")
                checked += 1
            for u, v in g.edges():
                if abs(table.dist[u] - table.dist[v]) > 1:
                    raise CheckFailure(f"{label}: edge ({u},{v}) jumps levels from s={s}")
    return f"geodesic recurrence holds at {checked} vertices across {len(_core_instances())} graphs"


@_check("core", "method-agreement")
def _check_method_agreement() -> str:
    for label, g in _core_instances():
        by_def = betweenness(g, method="definitional").values
        by_brandes = betweenness(g, method="brandes").values
        if by_def != by_brandes:
            x = next(i for i, (a, b) in enumerate(zip(by_def, by_brandes)) if a != b)
            raise CheckFailure(
                f"{label}: vertex {x}: definitional {by_def[x]} != brandes {by_brandes[x]}"
            )
    return f"definitional and accumulation routes agree on {len(_core_instances())} graphs"


@_check("core", "dependency-range")
def _check_dependency_range() -> str:
    triples = 0
    for label, g in _core_instances():
        n = g.vertex_count
        if n > 12:
            continue
        for u in range(n):
            for v in range(u + 1, n):
                for x in range(n):
                    if x in (u, v):
                        continue
                    value = pair_dependency(g, u, v, x)
                    if not ZERO <= value <= ONE:
                        raise CheckFailure(f"{label}: delta({u},{v}|{x}) = {value} outside [0,1]")
                    triples += 1
    return f"pair dependencies within [0,1] on {triples} triples"


@_check("core", "dependency-sum")
def _check_dependency_sum() -> str:
    # Every interior vertex of a geodesic contributes, so the dependencies
    # over x sum to d(u,v) - 1 exactly.
    pairs = 0
    for label, g in _core_instances():
        n = g.vertex_count
        if n > 12:
            continue
        for u in range(n):
            for v in range(u + 1, n):
                total = sum(
                    pair_dependency(g, u, v, x) for x in range(n) if x not in (u, v)
                )
                if total != distance(g, u, v) - 1:
                    raise CheckFailure(
                        f"{label}: sum_x delta({u},{v}|x) = {total} != d-1 = {distance(g, u, v) - 1}"
                    )
                pairs += 1
    return f"dependency totals equal d(u,v)-1 on {pairs} pairs"


@_check("core", "geodetic-flags")
def _check_geodetic_flags() -> str:
    expected = (
        ("P_5", path(5), True),
        ("star_4", star(4), True),
        ("K_4", complete(4), True),
        ("C_5", cycle(5), True),
        ("C_7", cycle(7), True),
        ("C_4", cycle(4), False),
        ("C_6", cycle(6), False),
        ("grid_2x2", grid(2, 2), False),
        ("grid_3x3", grid(3, 3), False),
        ("Q_3", hypercube(3), False),
    )
    for label, g, want in expected:
        if is_geodetic(g) is not want:
            raise CheckFailure(f"{label}: is_geodetic = {not want}, expected {want}")
        tables = all_pairs_tables(g)
        unique = all(s == 1 for t in tables for s in t.sigma)
        if unique is not want:
            raise CheckFailure(f"{label}: geodesic counts disagree with flag")
    return f"geodetic classification correct on {len(expected)} graphs"


# ---------------------------------------------------------------------------
# products scope


@_check("products", "labeling-roundtrip")
def _check_labeling_roundtrip() -> str:
    vertices = 0
    for label, factors in _product_multisets(64, 6):
        spec = product_spec(factors)
        for vid, coords in enumerate(spec.coordinates()):
            if spec.encode(coords) != vid or spec.decode(vid) != coords:
                raise CheckFailure(f"{label}: labeling broken at vertex {vid}")
            vertices += 1
    return f"mixed-radix labels round-trip on {vertices} vertices"


@_check("products", "distance-additivity")
def _check_distance_additivity() -> str:
    pairs = 0
    for label, factors in _product_multisets(64, 6):
        pg = _materialize(factors)
        coords = pg.spec.coordinates()
        n = pg.graph.vertex_count
        for u in range(n):
            for v in range(u + 1, n):
                want = distance(pg.graph, u, v)
                got = product_distance(pg.spec, coords[u], coords[v])
                if got != want:
                    raise CheckFailure(f"{label}: d({coords[u]},{coords[v]}) = {got} != {want}")
                pairs += 1
    return f"coordinate distances match materialized distances on {pairs} pairs"


@_check("products", "sigma-agreement")
def _check_sigma_agreement() -> str:
    pairs = 0
    for label, factors in _product_multisets(64, 6):
        pg = _materialize(factors)
        coords = pg.spec.coordinates()
        n = pg.graph.vertex_count
        for u in range(n):
            for v in range(u + 1, n):
                want = sigma(pg.graph, u, v)
                got = product_sigma(pg.spec, coords[u], coords[v])
                if got != want:
                    raise CheckFailure(
                        f"{label}: sigma({coords[u]},{coords[v]}) = {got} != {want}"
                    )
                pairs += 1
    return f"factorized geodesic counts match BFS counts on {pairs} pairs"


@_check("products", "dependency-agreement")
def _check_dependency_agreement() -> str:
    triples = 0
    for label, factors in _product_multisets(36, 5):
        pg = _materialize(factors)
        coords = pg.spec.coordinates()
        n = pg.graph.vertex_count
        for u in range(n):
            for v in range(u + 1, n):
                for x in range(n):
                    if x in (u, v):
                        continue
                    got = product_pair_dependency(pg.spec, coords[u], coords[v], coords[x])
                    want = pair_dependency(pg.graph, u, v, x)
                    if got != want:
                        raise CheckFailure(
                            f"{label}: delta({coords[u]},{coords[v]}|{coords[x]})"
                            f" = {got} != {want}"
                        )
                    triples += 1
    return f"factorized dependencies match materialized ones on {triples} triples"


@_check("products", "interval-characterization")
def _check_interval_characterization() -> str:
    triples = 0
    for label, factors in _product_multisets(36, 5):
        pg = _materialize(factors)
        spec = pg.spec
        coords = spec.coordinates()
        tables = all_pairs_tables(pg.graph)
        n = pg.graph.vertex_count
        for u in range(n):
            du = tables[u].dist
            for v in range(u + 1, n):
                duv = du[v]
                dv = tables[v].dist
                for x in range(n):
                    want = du[x] + dv[x] == duv
                    got = interval_membership(spec, coords[u], coords[v], coords[x])
                    if got is not want:
                        raise CheckFailure(
                            f"{label}: membership of {coords[x]} between"
                            f" {coords[u]} and {coords[v]}: {got} != {want}"
                        )
                    triples += 1
    return f"per-factor interval test matches the distance test on {triples} triples"


@_check("products", "fiber-convexity")
def _check_fiber_convexity() -> str:
    # A fiber (one coordinate free, the rest pinned) is an isometric copy of
    # its factor, and geodesics between fiber vertices never leave it.
    checked = 0
    for label, factors in _product_multisets(36, 5):
        pg = _materialize(factors)
        spec = pg.spec
        tables = all_pairs_tables(pg.graph)
        for axis, factor in enumerate(spec.factors):
            for base in range(pg.graph.vertex_count):
                if spec.decode(base)[axis] != 0:
                    continue
                fiber = [base + w * spec.strides[axis] for w in range(factor.vertex_count)]
                for a_pos, u in enumerate(fiber):
                    du = tables[u].dist
                    for b_pos in range(a_pos + 1, len(fiber)):
                        v = fiber[b_pos]
                        if du[v] != distance(factor, a_pos, b_pos):
                            raise CheckFailure(f"{label}: fiber not isometric at axis {axis}")
                        for x in interval(pg.graph, u, v):
                            if x not in fiber:
                                raise CheckFailure(
                                    f"{label}: geodesic between fiber vertices {u},{v}"
                                    f" leaves the fiber through {x}"
                                )
                        checked += 1
    return f"fibers are isometric and convex on {checked} vertex pairs"


@_check("products", "diameter-additivity")
def _check_diameter_additivity() -> str:
    for label, factors in _product_multisets(64, 6):
        pg = _materialize(factors)
        want = sum(diameter(g) for g in factors)
        got = diameter(pg.graph)
        if got != want:
            raise CheckFailure(f"{label}: diameter {got} != sum of factor diameters {want}")
    return f"diameters add across factors on {len(_product_multisets(64, 6))} products"


@_check("products", "betweenness-agreement")
def _check_betweenness_agreement() -> str:
    for label, factors in _agreement_instances():
        pg = _materialize(factors)
        by_brandes = betweenness(pg.graph, method="brandes").values
        by_def = betweenness(pg.graph, method="definitional").values
        by_factors = factorized_betweenness_all(pg.spec)
        if not by_brandes == by_def == by_factors:
            x = next(
                i for i in range(len(by_brandes))
                if not by_brandes[i] == by_def[i] == by_factors[i]
            )
            raise CheckFailure(
                f"{label}: vertex {x}: brandes {by_brandes[x]}, definitional {by_def[x]},"
                f" factorized {by_factors[x]}"
            )
    return f"three betweenness routes agree on {len(_agreement_instances())} products"


@_check("products", "wiener-agreement")
def _check_wiener_agreement() -> str:
    for label, factors in _product_multisets(64, 6):
        pg = _materialize(factors)
        want = wiener(pg.graph)
        got = product_wiener(factors)
        if got != want:
            raise CheckFailure(f"{label}: composed total distance {got} != BFS total {want}")
    return f"total-distance composition holds on {len(_product_multisets(64, 6))} products"


@_check("products", "associativity")
def _check_associativity() -> str:
    cases = (
        ("P_3, C_4, K_2", (path(3), cycle(4), complete(2))),
        ("K_2 x4", (complete(2),) * 4),
        ("P_2, P_3, P_4", (path(2), path(3), path(4))),
    )
    for label, factors in cases:
        flat = cartesian_product(factors).graph
        left = cartesian_product([cartesian_product(factors[:2]).graph, *factors[2:]]).graph
        right = cartesian_product([factors[0], cartesian_product(factors[1:]).graph]).graph
        if not flat == left == right:
            raise CheckFailure(f"{label}: regrouped products differ from the flat product")
    return f"products associate under the row-major labeling on {len(cases)} cases"


# ---------------------------------------------------------------------------
# closed-forms scope


def _family_sweep(label: str, g: Graph, expected: Fraction) -> None:
    for x, value in enumerate(betweenness(g).values):
        if value != expected:
            raise CheckFailure(f"{label}: vertex {x}: formula {expected} != brandes {value}")


@_check("closed-forms", "hamming")
def _check_hamming() -> str:
    count = 0
    for sizes in _size_multisets(2, 64):
        _family_sweep(f"H{list(sizes)}", hamming(*sizes), hamming_bc(sizes))
        count += 1
    return f"complete-factor formula matches accumulation on {count} instances"


@_check("closed-forms", "uniform-complete")
def _check_uniform_complete() -> str:
    cases = [(n, r) for n in range(2, 7) for r in range(1, 7) if n**r <= 64]
    for n, r in cases:
        want = hamming_bc([n] * r)
        got = uniform_kn_bc(n, r)
        if got != want:
            raise CheckFailure(f"(n={n}, r={r}): uniform form {got} != general form {want}")
    return f"uniform specialization agrees on {len(cases)} (n, r) pairs"


@_check("closed-forms", "hypercube")
def _check_hypercube() -> str:
    for r in range(1, 7):
        _family_sweep(f"Q_{r}", hypercube(r), hypercube_bc(r))
    for r in range(1, 9):
        if not hypercube_bc(r) == uniform_kn_bc(2, r) == hamming_bc([2] * r):
            raise CheckFailure(f"Q_{r}: binary specializations disagree")
    return "binary-factor formula matches accumulation for r <= 6 and specializations for r <= 8"


@_check("closed-forms", "hypercube-sigma")
def _check_hypercube_sigma() -> str:
    pairs = 0
    for r in range(1, 7):
        g = hypercube(r)
        tables = all_pairs_tables(g)
        for u in range(g.vertex_count):
            for v in range(u + 1, g.vertex_count):
                d = tables[u].dist[v]
                if tables[u].sigma[v] != factorial(d):
                    raise CheckFailure(
                        f"Q_{r}: sigma({u},{v}) = {tables[u].sigma[v]} != {d}!"
                    )
                pairs += 1
    return f"geodesic counts equal d! on {pairs} hypercube pairs"


@_check("closed-forms", "cycle-products")
def _check_cycle_products() -> str:
    count = 0
    for sizes in _size_multisets(4, 64, step=2):
        g = _materialize(tuple(cycle(n) for n in sizes)).graph
        _family_sweep(f"even C{list(sizes)}", g, even_cycles_bc(sizes))
        count += 1
    for sizes in _size_multisets(3, 64, step=2):
        _family_sweep(f"odd C{list(sizes)}", _materialize(tuple(cycle(n) for n in sizes)).graph, odd_cycles_bc(sizes))
        count += 1
    return f"cycle-product formulas match accumulation on {count} instances"


@_check("closed-forms", "even-cycles-alt")
def _check_even_cycles_alt() -> str:
    count = 0
    for sizes in _size_multisets(4, 12**3, step=2):
        if max(sizes) > 12 or len(sizes) > 3:
            continue
        if even_cycles_bc(sizes) != even_cycles_bc_alt(sizes):
            raise CheckFailure(f"C{list(sizes)}: the two even-cycle forms disagree")
        count += 1
    return f"both even-cycle forms agree on {count} size multisets"


@_check("closed-forms", "torus")
def _check_torus() -> str:
    swept = 0
    for m in range(3, 9):
        for n in range(m, 9):
            value = torus_bc(m, n)
            _family_sweep(f"C_{m} x C_{n}", torus(m, n), value)
            if torus_bc(n, m) != value:
                raise CheckFailure(f"torus ({m},{n}): order of sizes changed the value")
            swept += 1
    for m in range(3, 13):
        for n in range(3, 13):
            if torus_bc(m, n) != torus_bc_alt(m, n):
                raise CheckFailure(f"torus ({m},{n}): the two case forms disagree")
    return f"torus formula matches accumulation on {swept} size pairs and both forms agree to 12"


@_check("closed-forms", "grid")
def _check_grid() -> str:
    positions = 0
    for m in range(1, 8):
        for n in range(1, 8):
            if m * n < 2:
                continue
            g = grid(m, n)
            values = betweenness(g).values
            for a in range(1, m + 1):
                for b in range(1, n + 1):
                    want = grid_bc(m, n, a, b)
                    got = values[(a - 1) * n + (b - 1)]
                    if want != got:
                        raise CheckFailure(
                            f"grid {m}x{n}: position ({a},{b}): formula {want} != brandes {got}"
                        )
                    positions += 1
            if sum(values) != wiener(g) - comb(m * n, 2):
                raise CheckFailure(f"grid {m}x{n}: totals identity broken")
    return f"grid formula matches accumulation at {positions} positions"


@_check("closed-forms", "anchors")
def _check_anchors() -> str:
    anchors: tuple[tuple[str, object, object], ...] = (
        ("hypercube_bc(2)", hypercube_bc(2), Fraction(1, 2)),
        ("hypercube_bc(3)", hypercube_bc(3), Fraction(5, 2)),
        ("hypercube_bc(4)", hypercube_bc(4), Fraction(17, 2)),
        ("hamming_bc([3,4])", hamming_bc([3, 4]), Fraction(3)),
        ("hamming_bc([2,2,2])", hamming_bc([2, 2, 2]), Fraction(5, 2)),
        ("hamming_bc([5])", hamming_bc([5]), Fraction(0)),
        ("uniform_kn_bc(2,3)", uniform_kn_bc(2, 3), Fraction(5, 2)),
        ("uniform_kn_bc(3,2)", uniform_kn_bc(3, 2), Fraction(2)),
        ("uniform_kn_bc(7,1)", uniform_kn_bc(7, 1), Fraction(0)),
        ("torus_bc(3,4)", torus_bc(3, 4), Fraction(9, 2)),
        ("torus_bc(4,6)", torus_bc(4, 6), Fraction(37, 2)),
        ("torus_bc(5,5)", torus_bc(5, 5), Fraction(18)),
        ("torus_bc(3,3)", torus_bc(3, 3), Fraction(2)),
        ("even_cycles_bc([4])", even_cycles_bc([4]), Fraction(1, 2)),
        ("even_cycles_bc([6])", even_cycles_bc([6]), Fraction(2)),
        ("even_cycles_bc([4,4])", even_cycles_bc([4, 4]), Fraction(17, 2)),
        ("odd_cycles_bc([5])", odd_cycles_bc([5]), Fraction(1)),
        ("odd_cycles_bc([3,3])", odd_cycles_bc([3, 3]), Fraction(2)),
        ("odd_cycles_bc([5,5])", odd_cycles_bc([5, 5]), Fraction(18)),
        ("grid_bc(3,3,2,2)", grid_bc(3, 3, 2, 2), Fraction(32, 3)),
        ("grid_bc(3,3,1,1)", grid_bc(3, 3, 1, 1), Fraction(4, 3)),
        ("grid_bc(1,5,1,3)", grid_bc(1, 5, 1, 3), Fraction(4)),
        ("cycle_wiener(4)", cycle_wiener(4), 8),
        ("cycle_wiener(5)", cycle_wiener(5), 15),
        ("cycle_wiener(7)", cycle_wiener(7), 42),
        ("cycle_product_wiener([4,4])", cycle_product_wiener([4, 4], "even"), 256),
        ("cycle_product_wiener([3,3])", cycle_product_wiener([3, 3], "odd"), 54),
        ("debruijn_count(2,2)", debruijn_count(2, 2), 6),
        ("debruijn_count(2,3)", debruijn_count(2, 3), 20),
        ("debruijn_count(3,3)", debruijn_count(3, 3), 1680),
    )
    for label, got, want in anchors:
        if got != want:
            raise CheckFailure(f"{label} = {got}, expected {want}")
    return f"all {len(anchors)} pinned values reproduced exactly"


@_check("closed-forms", "debruijn-lattice-paths")
def _check_debruijn() -> str:
    # (kn)!/(n!)^k counts corner-to-corner geodesics in the path power
    # P_{n+1}^k, i.e. interleavings of k runs of n steps.
    checked = 0
    for k in range(1, 4):
        for n in range(0, 4):
            spec = product_spec([path(n + 1)] * k)
            got = product_sigma(spec, (0,) * k, (n,) * k)
            if got != debruijn_count(k, n):
                raise CheckFailure(
                    f"(k={k}, n={n}): lattice count {got} != {debruijn_count(k, n)}"
                )
            checked += 1
    for n in range(0, 9):
        if debruijn_count(2, n) != comb(2 * n, n):
            raise CheckFailure(f"(k=2, n={n}): count is not a central binomial coefficient")
    return f"interleaving counts match lattice geodesics on {checked} (k, n) pairs"


@_check("closed-forms", "cycle-wiener")
def _check_cycle_wiener() -> str:
    for n in range(3, 21):
        want = wiener(cycle(n))
        got = cycle_wiener(n)
        if got != want:
            raise CheckFailure(f"C_{n}: formula {got} != BFS total {want}")
    return "cycle total distances match BFS for 3 <= n <= 20"


@_check("closed-forms", "cycle-product-wiener")
def _check_cycle_product_wiener() -> str:
    count = 0
    for parity, min_size in (("even", 4), ("odd", 3)):
        for sizes in _size_multisets(min_size, 64, step=2):
            factors = tuple(cycle(n) for n in sizes)
            want = product_wiener(factors)
            got = cycle_product_wiener(sizes, parity)
            if got != want:
                raise CheckFailure(f"C{list(sizes)}: closed form {got} != composed {want}")
            count += 1
    try:
        cycle_product_wiener([3, 4], "even")
    except GraphError:
        pass
    else:
        raise CheckFailure("mixed-parity cycle sizes were not rejected")
    return f"uniform-parity total-distance form agrees on {count} multisets"


# ---------------------------------------------------------------------------
# sum-identity scope


@lru_cache(maxsize=1)
def _sum_identity_instances() -> tuple[tuple[str, Graph], ...]:
    entries = [(label, _materialize(factors).graph) for label, factors in _agreement_instances()]
    entries.extend(
        (label, g)
        for label, g in (
            ("H(3,4)", hamming(3, 4)),
            ("torus_4x6", torus(4, 6)),
            ("torus_5x5", torus(5, 5)),
            ("grid_6x7", grid(6, 7)),
            ("C_3 x C_3 x C_3", _materialize((cycle(3),) * 3).graph),
        )
    )
    return tuple(entries)


@_check("sum-identity", "totals")
def _check_totals() -> str:
    # Summing dependencies by pair instead of by vertex gives d(u,v) - 1
    # per pair, so the betweenness total is the total distance minus the
    # number of pairs; dividing instead gives the mean distance.
    for label, g in _sum_identity_instances():
        n = g.vertex_count
        total = sum(betweenness(g).values)
        w = wiener(g)
        if total != w - comb(n, 2):
            raise CheckFailure(
                f"{label}: sum B = {total} but W - C(n,2) = {w - comb(n, 2)}"
            )
        if average_distance(g) != Fraction(w, comb(n, 2)):
            raise CheckFailure(f"{label}: mean distance disagrees with total distance")
    return f"sum identity holds on {len(_sum_identity_instances())} graphs"


# ---------------------------------------------------------------------------
# cli scope


@_check("cli", "edge-list-roundtrip")
def _check_edge_list_roundtrip() -> str:
    instances = (
        ("P_6", path(6)),
        ("C_5", cycle(5)),
        ("K_5", complete(5)),
        ("star_4", star(4)),
        ("grid_3x4", grid(3, 4)),
        ("Q_3", hypercube(3)),
        ("H(2,3,4)", hamming(2, 3, 4)),
        ("torus_3x4", torus(3, 4)),
        ("P_3 x C_4", _materialize((path(3), cycle(4))).graph),
    )
    for label, g in instances:
        if parse_edge_list(format_edge_list(g)) != g:
            raise CheckFailure(f"{label}: edge-list round trip changed the graph")
    return f"edge lists round-trip on {len(instances)} graphs"


@_check("cli", "report-exactness")
def _check_report_exactness() -> str:
    reports = (
        betweenness(grid(3, 3), descriptor="grid 3x3"),
        betweenness(_materialize((cycle(3), path(4))).graph, descriptor="C_3 x P_4"),
    )
    for report in reports:
        decoded = values_from_csv(report_to_csv(report))
        if tuple(decoded[str(x)] for x in range(len(report.values))) != report.values:
            raise CheckFailure(f"{report.graph}: CSV round trip lost exactness")
        if report_from_json(report_to_json(report)) != report:
            raise CheckFailure(f"{report.graph}: JSON round trip changed the report")
    return f"serialized reports reconstruct exactly on {len(reports)} reports"
