"""Integer graph spectra with exact multiplicity certificates.

Floating-point eigenvalues are only used to propose integer candidates. A
candidate ``lam`` with proposed multiplicity ``m`` is accepted when the
nullity of ``A - lam*I`` over the rationals is proved to be ``m``:

* lower bound on the rank: rank modulo a prime never exceeds the rational rank;
* upper bound on the rank: the mod-p null-space basis is lifted to rationals
  and checked to be annihilated exactly in integer arithmetic.

Small matrices are instead ranked directly by fraction-free (Bareiss)
elimination. Mass that cannot be certified is reported as a residual degree.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass

import numpy as np

from ..errors import BudgetExceeded, SpectrumError
from .core import Graph

__all__ = ["Spectrum", "spectrum", "exact_rank", "certified_nullity"]

SPECTRUM_MAX_N = 2000
CLUSTER_TOL = 1e-6
BAREISS_MAX_N = 48
# primes below 2**31 keep products of residues inside int64
_PRIMES = (2147483647, 2147483629, 2147483587)


@dataclass(frozen=True)
class Spectrum:
    """Multiset of integer eigenvalues, sorted by decreasing eigenvalue."""

    entries: tuple[tuple[int, int], ...]
    residual_degree: int = 0

    def __post_init__(self):
        merged = Counter()
        for lam, m in self.entries:
            if m <= 0:
                raise ValueError("multiplicities must be positive")
            merged[int(lam)] += int(m)
        object.__setattr__(self, "entries", tuple(sorted(merged.items(), reverse=True)))

    @classmethod
    def from_dict(cls, d: dict[int, int], residual_degree: int = 0) -> "Spectrum":
        return cls(tuple(d.items()), residual_degree)

    @classmethod
    def parse(cls, text: str) -> "Spectrum":
        """Parse ``"{6^1, 1^9, -3^5}"``; exponents like ``0^{3+1}`` are summed."""
        body = text.strip().strip("{}")
        entries = []
        for tok in re.split(r",(?![^{]*\})", body):
            tok = tok.strip()
            if not tok:
                continue
            if "^" in tok:
                lam, mult = tok.split("^", 1)
                mult = sum(int(x) for x in mult.strip("{}").split("+"))
            else:
                lam, mult = tok, 1
            entries.append((int(lam), mult))
        return cls(tuple(entries))

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.entries) + self.residual_degree

    @property
    def is_complete(self) -> bool:
        return self.residual_degree == 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def pairs(self) -> str:
        """Stable serialization as sorted ``(lambda, m)`` pairs."""
        s = " ".join(f"({lam}, {m})" for lam, m in self.entries)
        if self.residual_degree:
            s += f" residual={self.residual_degree}"
        return s

    def __str__(self) -> str:
        body = ", ".join(f"{lam}^{m}" for lam, m in self.entries)
        if self.residual_degree:
            body += f", ?^{self.residual_degree}"
        return "{" + body + "}"


def exact_rank(matrix) -> int:
    """Rank over Q by fraction-free Gaussian (Bareiss) elimination on Python ints."""
    a = [[int(x) for x in row] for row in np.asarray(matrix)]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    rank = 0
    prev = 1
    for c in range(cols):
        piv = next((i for i in range(rank, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pr = a[rank]
        pv = pr[c]
        for i in range(rank + 1, rows):
            ri = a[i]
            f = ri[c]
            for j in range(c + 1, cols):
                # exact division is guaranteed by Sylvester's identity
                ri[j] = (pv * ri[j] - f * pr[j]) // prev
            ri[c] = 0
        prev = pv
        rank += 1
        if rank == rows:
            break
    return rank


def _rref_mod(m: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    m = np.array(m, dtype=np.int64) % p
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r, c:] = (m[r, c:] * inv) % p
        col = m[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            m[hit, c:] = (m[hit, c:] - np.outer(col[hit], m[r, c:]) % p) % p
        pivots.append(c)
        r += 1
    return m[:r], pivots


def _rational_reconstruct(a: int, p: int) -> tuple[int, int] | None:
    bound = math.isqrt(p // 2)
    r0, r1 = p, a % p
    s0, s1 = 0, 1
    while r1 > bound:
        qt = r0 // r1
        r0, r1 = r1, r0 - qt * r1
        s0, s1 = s1, s0 - qt * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    if s1 < 0:
        r1, s1 = -r1, -s1
    return r1, s1


def _null_basis_certified(m: np.ndarray, p: int) -> int | None:
    """Nullity of integer matrix ``m`` over Q, or None if this prime gives no proof."""
    n = m.shape[1]
    red, pivots = _rref_mod(m, p)
    rank = len(pivots)
    free = [c for c in range(n) if c not in set(pivots)]
    if not free:
        return 0
    block = (-red[:, free]) % p
    cache: dict[int, tuple[int, int] | None] = {}
    for val in np.unique(block):
        cache[int(val)] = _rational_reconstruct(int(val), p)
    if any(v is None for v in cache.values()):
        return None
    basis = np.zeros((n, len(free)), dtype=object)
    for j, f in enumerate(free):
        fracs = [cache[int(v)] for v in block[:, j]]
        den = 1
        for _, d in fracs:
            den = den * d // math.gcd(den, d)
        basis[f, j] = den
        for i, (num, d) in enumerate(fracs):
            basis[pivots[i], j] = num * (den // d)
    vmax = max(abs(int(x)) for x in basis.ravel())
    mmax = int(np.abs(m).sum(axis=1).max()) if m.size else 0
    if vmax * mmax < 2**52:
        prod = m.astype(np.float64) @ basis.astype(np.float64)
        ok = not np.any(prod)
    else:
        prod = m.astype(object) @ basis
        ok = all(x == 0 for x in prod.ravel())
    if not ok:
        return None
    # mod-p rank bounds the rational rank from below, the lifted basis from above
    return n - rank


def certified_nullity(matrix) -> int | None:
    """Exact nullity of an integer matrix over Q, or None when no certificate is found."""
    m = np.asarray(matrix, dtype=np.int64)
    if m.shape[0] <= BAREISS_MAX_N:
        return m.shape[1] - exact_rank(m)
    for p in _PRIMES:
        res = _null_basis_certified(m, p)
        if res is not None:
            return res
    return None


def spectrum(g: Graph, *, max_n: int = SPECTRUM_MAX_N) -> Spectrum:
    """Certified integer spectrum of the adjacency matrix of ``g``.

    Non-integer eigenvalues, and integer candidates whose multiplicity cannot
    be certified, contribute to ``residual_degree`` instead of being rounded.
    """
    n = g.n
    if n > max_n:
        raise BudgetExceeded("spectrum", max_n, n)
    if n == 0:
        return Spectrum(())
    a = g.matrix.astype(np.int64)
    try:
        vals = np.linalg.eigvalsh(a.astype(np.float64))
    except np.linalg.LinAlgError as exc:
        raise SpectrumError(f"eigensolver failed: {exc}") from exc
    rounded = np.rint(vals)
    is_int = np.abs(vals - rounded) < CLUSTER_TOL
    hints = Counter(int(x) for x in rounded[is_int])
    entries = []
    for lam, m in sorted(hints.items(), reverse=True):
        nullity = certified_nullity(a - lam * np.eye(n, dtype=np.int64))
        if nullity is None:
            continue
        if nullity != m:
            raise SpectrumError(
                f"eigenvalue {lam}: numerical multiplicity {m} but exact nullity {nullity}"
            )
        entries.append((lam, m))
    spec = Spectrum(tuple(entries), n - sum(m for _, m in entries))
    if spec.residual_degree == 0:
        trace = sum(lam * m for lam, m in spec.entries)
        trace2 = sum(lam * lam * m for lam, m in spec.entries)
        if trace != 0 or trace2 != 2 * g.num_edges:
            raise SpectrumError(f"trace identities fail for {spec}")
    return spec
