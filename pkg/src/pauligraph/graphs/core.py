"""Immutable simple graphs with bitset adjacency rows."""

from __future__ import annotations

from typing import Hashable, Iterable, Iterator, Sequence

import numpy as np

__all__ = ["Graph", "iter_bits", "bits_of", "mask_of"]


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_of(mask: int) -> list[int]:
    return list(iter_bits(mask))


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _row_to_int(row: np.ndarray) -> int:
    return int.from_bytes(np.packbits(row.astype(bool), bitorder="little").tobytes(), "little")


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Adjacency is stored as one Python integer per vertex (bit ``j`` of
    ``rows[i]`` is set iff ``i ~ j``). Labels are optional external names, kept
    through subgraph extraction.
    """

    __slots__ = ("_rows", "_labels", "_matrix")

    def __init__(self, rows: Sequence[int], labels: Sequence[Hashable] | None = None):
        rows = tuple(int(r) for r in rows)
        n = len(rows)
        for i, r in enumerate(rows):
            if r >> i & 1:
                raise ValueError(f"self-loop at vertex {i}")
            if r >> n:
                raise ValueError(f"row {i} references a vertex >= {n}")
        for i, r in enumerate(rows):
            for j in iter_bits(r):
                if not rows[j] >> i & 1:
                    raise ValueError(f"adjacency not symmetric at ({i}, {j})")
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("need one label per vertex")
        self._rows = rows
        self._labels = labels
        self._matrix = None

    @classmethod
    def from_matrix(cls, adj, labels=None) -> "Graph":
        a = np.asarray(adj).astype(bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency matrix must be square")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency matrix must be symmetric")
        if a.diagonal().any():
            raise ValueError("adjacency matrix has self-loops")
        g = cls.__new__(cls)
        g._rows = tuple(_row_to_int(r) for r in a)
        g._labels = tuple(labels) if labels is not None else None
        if g._labels is not None and len(g._labels) != a.shape[0]:
            raise ValueError("need one label per vertex")
        g._matrix = a.astype(np.uint8)
        g._matrix.setflags(write=False)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(rows, labels)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls([full & ~(1 << i) for i in range(n)])

    @property
    def n(self) -> int:
        return len(self._rows)

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    @property
    def labels(self) -> tuple:
        if self._labels is None:
            return tuple(range(self.n))
        return self._labels

    def label(self, v: int):
        return self.labels[v]

    @property
    def matrix(self) -> np.ndarray:
        """Read-only 0/1 adjacency matrix (uint8)."""
        if self._matrix is None:
            n = self.n
            m = np.zeros((n, n), dtype=np.uint8)
            for i, r in enumerate(self._rows):
                if r:
                    b = np.frombuffer(r.to_bytes((n + 7) // 8, "little"), dtype=np.uint8)
                    m[i] = np.unpackbits(b, bitorder="little")[:n]
            m.setflags(write=False)
            self._matrix = m
        return self._matrix

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits_of(self._rows[v])

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self._rows]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i, r in enumerate(self._rows):
            for j in iter_bits(r >> (i + 1)):
                out.append((i, i + 1 + j))
        return out

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1

    def subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph; vertex order follows ``vertices``, labels carried over."""
        vs = list(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        rows = []
        for v in vs:
            r = 0
            for w in iter_bits(self._rows[v]):
                i = pos.get(w)
                if i is not None:
                    r |= 1 << i
            rows.append(r)
        g = Graph.__new__(Graph)
        g._rows = tuple(rows)
        g._labels = tuple(self.labels[v] for v in vs)
        g._matrix = None
        return g

    def relabeled(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        n = self.n
        inv = [0] * n
        for v, w in enumerate(perm):
            inv[w] = v
        return Graph.from_edges(
            n, ((perm[u], perm[v]) for u, v in self.edges()), [self.labels[inv[i]] for i in range(n)]
        )

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        rows = [(~r & full) & ~(1 << i) for i, r in enumerate(self._rows)]
        g = Graph.__new__(Graph)
        g._rows = tuple(rows)
        g._labels = self._labels
        g._matrix = None
        return g

    def connected_components(self) -> list["Graph"]:
        """Induced subgraphs of the components, ordered by smallest vertex."""
        return [self.subgraph(c) for c in self.component_vertex_sets()]

    def component_vertex_sets(self) -> list[list[int]]:
        seen = 0
        comps = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = 1 << v
            frontier = comp
            while frontier:
                nxt = 0
                for w in iter_bits(frontier):
                    nxt |= self._rows[w]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(bits_of(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n == 0 or len(self.component_vertex_sets()) == 1

    def strongly_regular_parameters(self) -> tuple[int, int, int, int] | None:
        """``(n, k, lambda, mu)`` if the graph is strongly regular, else None.

        Complete and edgeless graphs are not counted as strongly regular since
        one of lambda, mu is undefined for them.
        """
        n = self.n
        if n < 2 or not self.is_regular():
            return None
        k = self.degree(0)
        if k == 0 or k == n - 1:
            return None
        a = self.matrix.astype(np.int64)
        common = a @ a
        off = ~np.eye(n, dtype=bool)
        adj = a.astype(bool)
        lam = np.unique(common[adj])
        mu = np.unique(common[~adj & off])
        if len(lam) != 1 or len(mu) != 1:
            return None
        return n, k, int(lam[0]), int(mu[0])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._rows == other._rows and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.num_edges})"

    # serialization

    def to_edgelist(self) -> str:
        lines = [f"{self.n}"]
        lines += [f"{u} {v}" for u, v in self.edges()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edgelist(cls, text: str) -> "Graph":
        """Parse the ``to_edgelist`` format: vertex count, then one ``u v`` per line.

        Blank lines and ``#`` comments are ignored.
        """
        items = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        items = [ln for ln in items if ln]
        if not items:
            raise ValueError("empty edge list")
        n = int(items[0])
        edges = []
        for ln in items[1:]:
            u, v = (int(t) for t in ln.split())
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            edges.append((u, v))
        return cls.from_edges(n, edges)

    def to_dot(self, name: str = "G") -> str:
        out = [f"graph {name} {{"]
        for v in range(self.n):
            lab = str(self.labels[v]).replace('"', '\\"')
            out.append(f'  {v} [label="{lab}"];')
        for u, v in self.edges():
            out.append(f"  {u} -- {v};")
        out.append("}")
        return "\n".join(out) + "\n"
