"""Generalized Pauli groups modulo their centre, for any ordered factorization.

An observable of the system ``d_1 x d_2 x ...`` is a tensor product of Weyl
monomials ``X^b Z^c`` (one per factor), stored by its exponent pairs only:
the scalar phase is a central element and is dropped.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import reduce
from math import lcm, prod
from typing import Sequence

import numpy as np

from .errors import BudgetExceeded
from .graphs import Graph

__all__ = [
    "Factorization",
    "Observable",
    "PhaseMatrix",
    "parse_factorization",
    "observables",
    "symplectic_delta",
    "commutes",
    "matrix_oracle",
    "phase_matrix",
    "commutes_by_matrix",
    "commutation_matrix",
    "build_pauli_graph",
]

DEFAULT_ORACLE_CAP = 16
DEFAULT_VERTEX_BUDGET = 10**4


@dataclass(frozen=True)
class Factorization:
    """Ordered tensor factors ``d_i >= 2`` of the Hilbert-space dimension."""

    factors: tuple[int, ...]

    def __init__(self, factors: Sequence[int] | int):
        if isinstance(factors, int):
            factors = (factors,)
        fs = tuple(int(d) for d in factors)
        if not fs:
            raise ValueError("factorization needs at least one factor")
        if any(d < 2 for d in fs):
            raise ValueError(f"factors must be >= 2, got {fs}")
        object.__setattr__(self, "factors", fs)

    @property
    def q(self) -> int:
        return prod(self.factors)

    @property
    def lcm(self) -> int:
        return reduce(lcm, self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        return "x".join(str(d) for d in self.factors)


def parse_factorization(text: str) -> Factorization:
    """Parse ``"4"``, ``"2x2"``, ``"2X3x4"``; factors must be integers >= 2."""
    if isinstance(text, Factorization):
        return text
    parts = re.split(r"[xX]", str(text).strip())
    if not all(re.fullmatch(r"\d+", p.strip()) for p in parts):
        raise ValueError(f"bad factorization {text!r}; expected integers joined by 'x'")
    return Factorization([int(p) for p in parts])


_QUBIT = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}


def _factor_label(b: int, c: int, d: int) -> str:
    if d == 2:
        return _QUBIT[(b, c)]
    if b == 0 and c == 0:
        return "I"
    s = ""
    if b:
        s += "X" if b == 1 else f"X^{b}"
    if c:
        s += "Z" if c == 1 else f"Z^{c}"
    return s


@dataclass(frozen=True, order=True)
class Observable:
    """Class of ``X^{b_1} Z^{c_1} (x) X^{b_2} Z^{c_2} (x) ...`` modulo phases.

    Ordering is lexicographic on the flattened exponents ``(b_1, c_1, b_2, c_2, ...)``.
    """

    exponents: tuple[tuple[int, int], ...]
    dims: tuple[int, ...]

    def __post_init__(self):
        if len(self.exponents) != len(self.dims):
            raise ValueError("one exponent pair per factor")
        for (b, c), d in zip(self.exponents, self.dims):
            if not (0 <= b < d and 0 <= c < d):
                raise ValueError(f"exponents ({b}, {c}) out of range for factor {d}")

    @classmethod
    def of(cls, f: Factorization | Sequence[int], *pairs: tuple[int, int]) -> "Observable":
        dims = f.factors if isinstance(f, Factorization) else tuple(f)
        return cls(tuple((b % d, c % d) for (b, c), d in zip(pairs, dims)), dims)

    @property
    def is_identity(self) -> bool:
        return all(b == 0 and c == 0 for b, c in self.exponents)

    @property
    def flat(self) -> tuple[int, ...]:
        return tuple(x for pair in self.exponents for x in pair)

    def __mul__(self, other: "Observable") -> "Observable":
        _check_same(self, other)
        return Observable(
            tuple(((b + b2) % d, (c + c2) % d) for (b, c), (b2, c2), d in zip(self.exponents, other.exponents, self.dims)),
            self.dims,
        )

    def __pow__(self, k: int) -> "Observable":
        return Observable(tuple(((k * b) % d, (k * c) % d) for (b, c), d in zip(self.exponents, self.dims)), self.dims)

    def __str__(self) -> str:
        parts = [_factor_label(b, c, d) for (b, c), d in zip(self.exponents, self.dims)]
        if all(d == 2 for d in self.dims):
            return "".join(parts)
        return ".".join(parts) if len(parts) > 1 else parts[0]


def _check_same(o1: Observable, o2: Observable, f: Factorization | None = None) -> None:
    if o1.dims != o2.dims:
        raise ValueError(f"observables live on different factorizations {o1.dims} and {o2.dims}")
    if f is not None and o1.dims != f.factors:
        raise ValueError(f"observables do not belong to factorization {f}")


def observables(f: Factorization) -> list[Observable]:
    """All ``q^2 - 1`` non-identity observables, in canonical order."""
    f = parse_factorization(f) if not isinstance(f, Factorization) else f
    per_factor = [list(itertools.product(range(d), range(d))) for d in f.factors]
    out = [Observable(tuple(pairs), f.factors) for pairs in itertools.product(*per_factor)]
    return out[1:]  # the identity comes first


def symplectic_delta(o1: Observable, o2: Observable, i: int) -> int:
    """Commutator exponent ``c_i b'_i - c'_i b_i`` on factor ``i``, reduced mod ``d_i``."""
    _check_same(o1, o2)
    (b, c), (b2, c2) = o1.exponents[i], o2.exponents[i]
    return (c * b2 - c2 * b) % o1.dims[i]


def commutes(o1: Observable, o2: Observable, f: Factorization | None = None) -> bool:
    """True iff the product of the per-factor commutator phases is 1.

    Factor ``i`` contributes ``exp(2 pi i Delta_i / d_i)``; with ``L`` the lcm of
    the factors this is ``sum_i Delta_i * (L / d_i) == 0 (mod L)``.
    """
    _check_same(o1, o2, f)
    L = reduce(lcm, o1.dims)
    total = sum(symplectic_delta(o1, o2, i) * (L // d) for i, d in enumerate(o1.dims))
    return total % L == 0


def _exponent_array(obs: Sequence[Observable]) -> np.ndarray:
    return np.array([o.exponents for o in obs], dtype=np.int64).reshape(len(obs), -1, 2)


def commutation_matrix(f: Factorization, obs: Sequence[Observable] | None = None) -> np.ndarray:
    """Boolean matrix ``M[i, j] = commutes(obs[i], obs[j])`` (vectorized)."""
    if obs is None:
        obs = observables(f)
    e = _exponent_array(obs)
    L = f.lcm
    total = np.zeros((len(obs), len(obs)), dtype=np.int64)
    for i, d in enumerate(f.factors):
        b = e[:, i, 0]
        c = e[:, i, 1]
        delta = (np.outer(c, b) - np.outer(b, c)) % d
        total += delta * (L // d)
    return total % L == 0


def build_pauli_graph(f: Factorization | str, *, vertex_budget: int = DEFAULT_VERTEX_BUDGET) -> Graph:
    """Commutation graph on the ``q^2 - 1`` observables (labels are the observables)."""
    f = parse_factorization(f)
    nv = f.q**2 - 1
    if nv > vertex_budget:
        raise BudgetExceeded("build_pauli_graph", vertex_budget, nv)
    obs = observables(f)
    adj = commutation_matrix(f, obs)
    np.fill_diagonal(adj, False)
    return Graph.from_matrix(adj, labels=obs)


# dense-matrix oracle


@dataclass(frozen=True)
class PhaseMatrix:
    """Monomial matrix whose nonzero entries are roots of unity ``exp(2 pi i e / L)``.

    ``exponents[r, s]`` is ``e`` mod ``modulus`` for a nonzero entry, -1 otherwise.
    """

    exponents: np.ndarray
    modulus: int

    def __matmul__(self, other: "PhaseMatrix") -> "PhaseMatrix":
        if self.modulus != other.modulus:
            raise ValueError("moduli differ")
        a, b = self.exponents, other.exponents
        q = a.shape[0]
        out = np.full((q, q), -1, dtype=np.int64)
        for r in range(q):
            (ks,) = np.nonzero(a[r] >= 0)
            if len(ks) != 1:
                raise ValueError("exact product implemented for monomial matrices only")
            k = ks[0]
            row = b[k]
            nz = row >= 0
            out[r, nz] = (a[r, k] + row[nz]) % self.modulus
        return PhaseMatrix(out, self.modulus)

    def to_complex(self) -> np.ndarray:
        m = np.zeros(self.exponents.shape, dtype=complex)
        nz = self.exponents >= 0
        m[nz] = np.exp(2j * np.pi * self.exponents[nz] / self.modulus)
        return m

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PhaseMatrix)
            and self.modulus == other.modulus
            and np.array_equal(self.exponents, other.exponents)
        )


def _check_cap(f: Factorization, cap: int) -> None:
    if f.q > cap:
        raise BudgetExceeded("matrix_oracle", cap, f.q)


def phase_matrix(o: Observable, f: Factorization, *, cap: int = DEFAULT_ORACLE_CAP) -> PhaseMatrix:
    """Exact form of ``(x)_i X^{b_i} Z^{c_i}`` with phases as exponents mod lcm."""
    _check_cap(f, cap)
    if o.dims != f.factors:
        raise ValueError("observable does not belong to factorization")
    L = f.lcm
    ex = np.zeros((1, 1), dtype=np.int64)
    for (b, c), d in zip(o.exponents, f.factors):
        # X^b Z^c |s> = w^{cs} |s + b>
        blk = np.full((d, d), -1, dtype=np.int64)
        for s in range(d):
            blk[(s + b) % d, s] = (c * s * (L // d)) % L
        big = np.full((ex.shape[0] * d, ex.shape[1] * d), -1, dtype=np.int64)
        for r in range(ex.shape[0]):
            for s in range(ex.shape[1]):
                if ex[r, s] >= 0:
                    sub = np.where(blk >= 0, (blk + ex[r, s]) % L, -1)
                    big[r * d : (r + 1) * d, s * d : (s + 1) * d] = sub
        ex = big
    return PhaseMatrix(ex, L)


def matrix_oracle(o: Observable, f: Factorization, *, cap: int = DEFAULT_ORACLE_CAP) -> np.ndarray:
    """Dense complex matrix of the observable, built from explicit shift and clock matrices."""
    _check_cap(f, cap)
    if o.dims != f.factors:
        raise ValueError("observable does not belong to factorization")
    out = np.eye(1, dtype=complex)
    for (b, c), d in zip(o.exponents, f.factors):
        x = np.roll(np.eye(d), 1, axis=0)
        z = np.diag(np.exp(2j * np.pi * np.arange(d) / d))
        out = np.kron(out, np.linalg.matrix_power(x, b) @ np.linalg.matrix_power(z, c))
    return out


def commutes_by_matrix(o1: Observable, o2: Observable, f: Factorization, *, exact: bool | None = None,
                       cap: int = DEFAULT_ORACLE_CAP) -> bool:
    """Commutation decided from explicit matrices.

    Exact phase bookkeeping is used when the lcm of the factors is at most 24,
    complex doubles with a 1e-9 zero tolerance otherwise.
    """
    if exact is None:
        exact = f.lcm <= 24
    if exact:
        m1, m2 = phase_matrix(o1, f, cap=cap), phase_matrix(o2, f, cap=cap)
        return m1 @ m2 == m2 @ m1
    m1, m2 = matrix_oracle(o1, f, cap=cap), matrix_oracle(o2, f, cap=cap)
    return bool(np.abs(m1 @ m2 - m2 @ m1).max() < 1e-9)
