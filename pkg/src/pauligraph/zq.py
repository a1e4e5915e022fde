"""Isotropic lines, free cyclic submodules and the projective line over Z_q."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import BudgetExceeded, VerificationError
from .graphs import Graph, maximal_cliques
from .numtheory import local_dimension, psi, sigma
from .pauli import Factorization, Observable, build_pauli_graph, parse_factorization

__all__ = [
    "LatticeVector",
    "IsotropicLine",
    "is_perpendicular",
    "perpendicularity_graph",
    "isotropic_lines",
    "admissible_vectors",
    "is_admissible",
    "cyclic_submodule",
    "projective_line",
    "lines_through",
    "projective_points_through",
    "clique_line_bijection",
]

LatticeVector = tuple[int, int]

DEFAULT_LATTICE_BUDGET = 10**4


@dataclass(frozen=True)
class IsotropicLine:
    """Maximal set of mutually perpendicular nonzero vectors (zero vector implied)."""

    points: frozenset[LatticeVector]
    free: bool
    generator: LatticeVector | None = None

    def __contains__(self, v) -> bool:
        return tuple(v) in self.points

    def sorted_points(self) -> list[LatticeVector]:
        return sorted(self.points)


def is_perpendicular(q: int, v1: LatticeVector, v2: LatticeVector) -> bool:
    (b, c), (b2, c2) = v1, v2
    return (b2 * c - b * c2) % q == 0


def _nonzero_vectors(q: int) -> list[LatticeVector]:
    return [v for v in itertools.product(range(q), repeat=2) if v != (0, 0)]


def perpendicularity_graph(q: int, *, budget: int = DEFAULT_LATTICE_BUDGET) -> Graph:
    if q * q - 1 > budget:
        raise BudgetExceeded("perpendicularity_graph", budget, q * q - 1)
    vs = _nonzero_vectors(q)
    a = np.array(vs, dtype=np.int64)
    b, c = a[:, 0], a[:, 1]
    adj = (np.outer(c, b) - np.outer(b, c)) % q == 0
    np.fill_diagonal(adj, False)
    return Graph.from_matrix(adj, labels=vs)


def cyclic_submodule(q: int, v: LatticeVector) -> frozenset[LatticeVector]:
    """``Z_q (b, c)`` including the zero vector."""
    b, c = v
    return frozenset(((u * b) % q, (u * c) % q) for u in range(q))


def is_admissible(q: int, v: LatticeVector) -> bool:
    return gcd(gcd(v[0], v[1]), q) == 1


def isotropic_lines(q: int, *, budget: int = DEFAULT_LATTICE_BUDGET) -> list[IsotropicLine]:
    """The sigma(q) isotropic lines of Z_q^2, as maximal cliques of perpendicularity."""
    if q < 2:
        raise ValueError("need q >= 2")
    g = perpendicularity_graph(q, budget=budget)
    lines = []
    for clique in maximal_cliques(g):
        pts = frozenset(g.labels[v] for v in clique)
        gen = None
        for v in sorted(pts):
            span = cyclic_submodule(q, v)
            if len(span) == q and span - {(0, 0)} == pts:
                gen = v
                break
        lines.append(IsotropicLine(pts, gen is not None, gen))
    return sorted(lines, key=lambda ln: (ln.free, ln.sorted_points()))


def admissible_vectors(q: int) -> set[LatticeVector]:
    return {v for v in itertools.product(range(q), repeat=2) if is_admissible(q, v)}


def projective_line(q: int) -> list[frozenset[LatticeVector]]:
    """Distinct free cyclic submodules ``Z_q (b, c)`` over admissible (b, c), as point sets."""
    seen = set()
    out = []
    for v in sorted(admissible_vectors(q)):
        sub = cyclic_submodule(q, v)
        if sub not in seen:
            seen.add(sub)
            out.append(sub)
    return out


def lines_through(q: int, x: LatticeVector, lines: list[IsotropicLine] | None = None) -> int:
    """Number of isotropic lines containing the nonzero vector ``x`` (by enumeration)."""
    x = (x[0] % q, x[1] % q)
    if x == (0, 0):
        raise ValueError("the zero vector lies on every line")
    if lines is None:
        lines = isotropic_lines(q)
    return sum(x in ln for ln in lines)


def projective_points_through(q: int, x: LatticeVector) -> dict:
    """Free cyclic submodules containing ``x``: enumerated count next to psi(local dimension).

    The two need not agree away from admissible vectors; ``agrees`` flags it.
    """
    x = (x[0] % q, x[1] % q)
    count = sum(x in sub for sub in projective_line(q))
    formula = psi(local_dimension(q, x))
    return {"vector": x, "enumerated": count, "formula": formula, "agrees": count == formula}


def clique_line_bijection(f: Factorization | str | int) -> dict[tuple[Observable, ...], IsotropicLine]:
    """Map maximal cliques of the single-qudit Pauli graph to isotropic lines.

    Each clique is sent to the set of its exponent vectors, which must be one
    of the enumerated lines; the map must be a perfect matching.
    """
    if isinstance(f, int):
        f = Factorization([f])
    f = parse_factorization(f)
    if len(f) != 1:
        raise ValueError("clique/line bijection is defined for a single factor")
    q = f.q
    g = build_pauli_graph(f)
    cliques = maximal_cliques(g)
    lines = isotropic_lines(q)
    by_points = {ln.points: ln for ln in lines}
    out: dict[tuple[Observable, ...], IsotropicLine] = {}
    for c in cliques.labelled():
        pts = frozenset(o.exponents[0] for o in c)
        ln = by_points.get(pts)
        if ln is None:
            raise VerificationError(f"clique {[str(o) for o in c]} is not an isotropic line")
        out[c] = ln
    if len(out) != len(lines) or len({ln.points for ln in out.values()}) != len(lines):
        raise VerificationError("clique/line map is not a bijection")
    if len(lines) != sigma(q):
        raise VerificationError(f"found {len(lines)} lines, expected sigma({q}) = {sigma(q)}")
    return out
