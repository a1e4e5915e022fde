"""Symplectic polar spaces W(2n-1, p) and graphs derived from clique families.

Points of W(2n-1, p) are nonzero vectors of F_p^{2n} up to scalars, with
coordinates ordered per qudit as ``(b_1, c_1, ..., b_n, c_n)`` and alternating
form ``sum_i c_i b'_i - c'_i b_i``. Two points are collinear when the form
vanishes, which is exactly commutation of the matching Pauli observables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod

import numpy as np

from .errors import BudgetExceeded, VerificationError
from .graphs import CliqueFamily, Graph, is_isomorphism, maximal_cliques
from .graphs.core import bits_of
from .numtheory import is_prime, sigma
from .pauli import Factorization, build_pauli_graph

__all__ = [
    "PolarSpace",
    "Spread",
    "PuncturedSpace",
    "polar_space",
    "find_spread",
    "puncture",
    "dual_graph",
    "k_intersection_graph",
    "intersection_profile",
    "clique_split",
    "generator_count",
    "point_count",
]

DEFAULT_POLAR_BUDGET = 10**4
DEFAULT_SPREAD_NODES = 10**6


def point_count(p: int, n: int) -> int:
    return (p ** (2 * n) - 1) // (p - 1)


def generator_count(p: int, n: int) -> int:
    return prod(1 + p**i for i in range(1, n + 1))


def _normalize(v, p):
    for x in v:
        if x:
            inv = pow(x, p - 2, p)
            return tuple((y * inv) % p for y in v)
    raise ValueError("zero vector")


@dataclass(frozen=True, eq=False)
class PolarSpace:
    p: int
    n: int
    points: tuple[tuple[int, ...], ...]
    graph: Graph
    generators: CliqueFamily

    def index(self, v) -> int:
        return self.points.index(_normalize(tuple(x % self.p for x in v), self.p))

    @property
    def symbol(self) -> str:
        return f"W({2 * self.n - 1},{self.p})"


def _form(p: int, n: int, pts: np.ndarray) -> np.ndarray:
    total = np.zeros((len(pts), len(pts)), dtype=np.int64)
    for i in range(n):
        b, c = pts[:, 2 * i], pts[:, 2 * i + 1]
        total += np.outer(c, b) - np.outer(b, c)
    return total % p


def polar_space(p: int, n: int, *, budget: int = DEFAULT_POLAR_BUDGET, cross_check: bool = True) -> PolarSpace:
    """Build W(2n-1, p) from F_p^{2n} and cross-check it against the n-fold p-dit Pauli graph.

    The Pauli route identifies observables that differ by a power; the
    resulting collinearity graph must match the vector-space one under the
    coordinate map, otherwise ``VerificationError`` is raised.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError("rank must be >= 1")
    if p ** (2 * n) > budget:
        raise BudgetExceeded("polar_space", budget, p ** (2 * n))
    pts = sorted({_normalize(v, p) for v in itertools.product(range(p), repeat=2 * n) if any(v)})
    arr = np.array(pts, dtype=np.int64)
    adj = _form(p, n, arr) == 0
    np.fill_diagonal(adj, False)
    graph = Graph.from_matrix(adj, labels=pts)
    if cross_check:
        _check_against_pauli(p, n, pts, graph)
    gens = maximal_cliques(graph)
    ps = PolarSpace(p, n, tuple(pts), graph, gens)
    if len(pts) != point_count(p, n) or len(pts) != sigma(p ** (2 * n - 1)):
        raise VerificationError(f"{ps.symbol}: {len(pts)} points")
    if len(gens) != generator_count(p, n):
        raise VerificationError(f"{ps.symbol}: {len(gens)} generators, expected {generator_count(p, n)}")
    if set(gens.by_size) != {(p**n - 1) // (p - 1)}:
        raise VerificationError(f"{ps.symbol}: generator sizes {gens.by_size}")
    return ps


def _check_against_pauli(p: int, n: int, pts, graph: Graph) -> None:
    pg = build_pauli_graph(Factorization([p] * n))
    index = {v: i for i, v in enumerate(pts)}
    reps = [None] * len(pts)
    classes = []
    for k, o in enumerate(pg.labels):
        i = index[_normalize(o.flat, p)]
        classes.append(i)
        if reps[i] is None:
            reps[i] = k
    quotient = Graph.from_matrix(pg.matrix[np.ix_(reps, reps)], labels=[pg.labels[r] for r in reps])
    # commutation must not depend on the chosen scalar multiple
    cls = np.array(classes)
    if not np.array_equal(pg.matrix, quotient.matrix[np.ix_(cls, cls)] | np.equal.outer(cls, cls) & ~np.eye(len(cls), dtype=bool)):
        raise VerificationError("Pauli commutation is not constant on scalar classes")
    if not is_isomorphism(quotient, graph, list(range(len(pts)))):
        raise VerificationError("Pauli-graph and vector-space constructions disagree")


@dataclass(frozen=True)
class Spread:
    generators: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.generators)


def find_spread(ps: PolarSpace, *, node_budget: int = DEFAULT_SPREAD_NODES) -> Spread:
    """One set of pairwise disjoint generators covering every point (exact-cover backtracking)."""
    masks = ps.generators.masks
    npts = len(ps.points)
    full = (1 << npts) - 1
    through = [[] for _ in range(npts)]
    for gi, m in enumerate(masks):
        for v in bits_of(m):
            through[v].append(gi)
    nodes = 0

    def solve(covered: int, chosen: list[int]):
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceeded("find_spread", node_budget)
        if covered == full:
            return chosen
        free = ~covered & full
        v = (free & -free).bit_length() - 1
        for gi in through[v]:
            if not masks[gi] & covered:
                res = solve(covered | masks[gi], chosen + [gi])
                if res is not None:
                    return res
        return None

    found = solve(0, [])
    if found is None:
        raise VerificationError(f"{ps.symbol} has no spread")
    spread = Spread(tuple(ps.generators[i] for i in found))
    expected = ps.p**ps.n + 1
    if len(spread) != expected:
        raise VerificationError(f"spread of size {len(spread)}, expected {expected}")
    return spread


@dataclass(frozen=True, eq=False)
class PuncturedSpace:
    """A space with one point and every generator through it removed."""

    base_point: int
    removed: tuple[int, ...]
    surviving: CliqueFamily
    dual: Graph
    lines_through_base: int | None = None
    point_count: int | None = None


def puncture(space: PolarSpace | CliqueFamily, u: int | None = None) -> PuncturedSpace:
    """Remove the perp-set of ``u``: the point and all generators (maximal cliques) through it.

    Default ``u`` is vertex 0, the first point in canonical order. For a polar
    space the punctured point count is the number of points minus the number
    of totally isotropic lines through ``u``.
    """
    cf = space.generators if isinstance(space, PolarSpace) else space
    n = cf.source.n
    if u is None:
        u = 0
    if not 0 <= u < n:
        raise ValueError(f"{u} is not a point")
    removed = tuple(cf.containing(u))
    keep = [i for i in range(len(cf)) if i not in set(removed)]
    surviving = cf.select(keep)
    lines = count = None
    if isinstance(space, PolarSpace):
        lines = _lines_through(space, u)
        count = len(space.points) - lines
    return PuncturedSpace(u, removed, surviving, dual_graph(surviving), lines, count)


def _lines_through(ps: PolarSpace, u: int) -> int:
    """Totally isotropic projective lines through point ``u``, by enumeration."""
    p = ps.p
    pu = ps.points[u]
    lines = set()
    for v in ps.graph.neighbors(u):
        pv = ps.points[v]
        span = frozenset(
            _normalize(tuple((a * x + b * y) % p for x, y in zip(pu, pv)), p)
            for a, b in itertools.product(range(p), repeat=2)
            if (a, b) != (0, 0)
        )
        lines.add(span)
    return len(lines)


def _clique_graph(cf: CliqueFamily, adj: np.ndarray) -> Graph:
    np.fill_diagonal(adj, False)
    return Graph.from_matrix(adj, labels=cf.labelled())


def dual_graph(cf: CliqueFamily, size: int | None = None) -> Graph:
    """Graph on the cliques (optionally only those of one size); edges join disjoint cliques."""
    if size is not None:
        cf = cf.of_size(size)
    return _clique_graph(cf, cf.intersection_sizes() == 0)


def k_intersection_graph(cf: CliqueFamily, k: int) -> Graph:
    """Graph on the cliques; edges join cliques meeting in exactly ``k`` vertices."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return _clique_graph(cf, cf.intersection_sizes() == k)


def intersection_profile(cf: CliqueFamily) -> set[int]:
    """Distinct sizes of pairwise intersections of distinct cliques."""
    sizes = cf.intersection_sizes()
    iu = np.triu_indices(len(cf), k=1)
    return {int(x) for x in np.unique(sizes[iu])}


def clique_split(cf: CliqueFamily) -> tuple[list[int], list[int]]:
    """Clique indices in non-trivial components of the dual graph, and the isolated ones."""
    d = dual_graph(cf)
    main, isolated = [], []
    for comp in d.component_vertex_sets():
        (main if len(comp) > 1 else isolated).extend(comp)
    return sorted(main), sorted(isolated)
