"""Maximal-clique enumeration (Bron-Kerbosch with Tomita pivoting on bitsets)."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ..errors import BudgetExceeded
from .core import Graph, bits_of, iter_bits, mask_of

__all__ = ["CliqueFamily", "maximal_cliques"]

DEFAULT_VERTEX_BUDGET = 10**4
DEFAULT_CLIQUE_BUDGET = 10**7


@dataclass(frozen=True, eq=False)
class CliqueFamily:
    """A list of vertex sets of ``source``, each stored as a sorted tuple.

    Order is deterministic: by size, then lexicographically.
    """

    cliques: tuple[tuple[int, ...], ...]
    source: Graph
    _masks: tuple[int, ...] = field(default=(), repr=False)

    def __post_init__(self):
        if not self._masks:
            object.__setattr__(self, "_masks", tuple(mask_of(c) for c in self.cliques))

    def __len__(self) -> int:
        return len(self.cliques)

    def __iter__(self):
        return iter(self.cliques)

    def __getitem__(self, i):
        return self.cliques[i]

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    @property
    def by_size(self) -> dict[int, int]:
        return dict(sorted(Counter(len(c) for c in self.cliques).items()))

    def of_size(self, k: int) -> "CliqueFamily":
        return self.select(i for i, c in enumerate(self.cliques) if len(c) == k)

    def select(self, indices) -> "CliqueFamily":
        idx = list(indices)
        return CliqueFamily(
            tuple(self.cliques[i] for i in idx), self.source, tuple(self._masks[i] for i in idx)
        )

    def containing(self, v: int) -> list[int]:
        """Indices of the cliques containing vertex ``v``."""
        bit = 1 << v
        return [i for i, m in enumerate(self._masks) if m & bit]

    def labelled(self) -> list[tuple]:
        labels = self.source.labels
        return [tuple(labels[v] for v in c) for c in self.cliques]

    def incidence(self) -> np.ndarray:
        """``len(self) x n`` 0/1 incidence matrix."""
        m = np.zeros((len(self.cliques), self.source.n), dtype=np.int32)
        for i, c in enumerate(self.cliques):
            m[i, list(c)] = 1
        return m

    def intersection_sizes(self) -> np.ndarray:
        """Matrix of pairwise intersection sizes (diagonal holds clique sizes)."""
        inc = self.incidence().astype(np.float64)
        return np.rint(inc @ inc.T).astype(np.int64)

    def is_valid(self) -> bool:
        """Every member is a clique, maximal in ``source``, and there are no duplicates."""
        rows = self.source.rows
        if len(set(self._masks)) != len(self._masks):
            return False
        for m in self._masks:
            for v in iter_bits(m):
                if (rows[v] | (1 << v)) & m != m:
                    return False
            # a vertex adjacent to all members would extend the clique
            ext = (1 << self.source.n) - 1
            for v in iter_bits(m):
                ext &= rows[v]
            if ext:
                return False
        return True


def maximal_cliques(
    g: Graph,
    *,
    vertex_budget: int = DEFAULT_VERTEX_BUDGET,
    clique_budget: int = DEFAULT_CLIQUE_BUDGET,
) -> CliqueFamily:
    """All maximal cliques of ``g``.

    Raises ``BudgetExceeded`` (and returns nothing) if the graph has more than
    ``vertex_budget`` vertices or more than ``clique_budget`` maximal cliques.
    Isolated vertices count as maximal cliques of size one.
    """
    n = g.n
    if n > vertex_budget:
        raise BudgetExceeded("maximal_cliques", vertex_budget, n)
    rows = g.rows
    found: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p:
            if not x:
                found.append(r)
                if len(found) > clique_budget:
                    raise BudgetExceeded("maximal_cliques", clique_budget, len(found))
            return
        # pivot: vertex of P | X with most neighbours in P
        best, pivot = -1, 0
        for u in iter_bits(p | x):
            c = (p & rows[u]).bit_count()
            if c > best:
                best, pivot = c, u
        cand = p & ~rows[pivot]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            nv = rows[v]
            expand(r | low, p & nv, x & nv)
            p &= ~low
            x |= low

    expand(0, (1 << n) - 1, 0)
    cliques = sorted((tuple(bits_of(m)) for m in found), key=lambda c: (len(c), c))
    return CliqueFamily(tuple(cliques), g)


def naive_maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """Exponential reference enumerator: every vertex subset, kept if a maximal clique."""
    n = g.n
    rows = g.rows
    out = []
    for s in range(1, 1 << n):
        vs = bits_of(s)
        if any((rows[v] | (1 << v)) & s != s for v in vs):
            continue
        common = (1 << n) - 1
        for v in vs:
            common &= rows[v]
        if common:
            continue
        out.append(tuple(vs))
    return sorted(out, key=lambda c: (len(c), c))
