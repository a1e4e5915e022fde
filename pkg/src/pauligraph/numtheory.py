"""Multiplicative arithmetic functions and local (p-adic) quantities on Z_q.

Everything here is exact integer arithmetic. The functions are small enough
that trial division is the right factorization method: dimensions studied in
this package never exceed a few thousand.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd, isqrt, prod

__all__ = [
    "FactoredInteger",
    "factorize",
    "sigma",
    "psi",
    "euler_phi",
    "jordan_j2",
    "p_valuation",
    "local_dimension",
    "sp2_order",
    "hyperbolic_counts",
    "is_prime",
    "is_squarefree",
]


@dataclass(frozen=True)
class FactoredInteger:
    """A positive integer together with its canonical prime factorization."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.value < 1:
            raise ValueError("value must be positive")
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)):
            raise ValueError("primes must be strictly increasing")
        if any(s < 1 for _, s in self.factors):
            raise ValueError("exponents must be >= 1")
        if prod(p**s for p, s in self.factors) != self.value:
            raise ValueError("factors do not multiply to value")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def exponent(self, p: int) -> int:
        for prime, s in self.factors:
            if prime == p:
                return s
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)


def factorize(q: int) -> FactoredInteger:
    """Prime factorization by trial division; ``factorize(1)`` has no factors."""
    q = int(q)
    if q < 1:
        raise ValueError(f"cannot factorize {q}; need q >= 1")
    n = q
    factors = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            s = 0
            while n % p == 0:
                n //= p
                s += 1
            factors.append((p, s))
        p += 1 if p == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return FactoredInteger(q, tuple(factors))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, isqrt(n) + 1))


def is_squarefree(q: int) -> bool:
    return all(s == 1 for _, s in factorize(q).factors)


def sigma(q: int) -> int:
    """Sum of the positive divisors of q."""
    return prod((p ** (s + 1) - 1) // (p - 1) for p, s in factorize(q).factors)


def psi(q: int) -> int:
    """Dedekind psi function, q * prod_{p | q} (1 + 1/p)."""
    return prod(p**s + p ** (s - 1) for p, s in factorize(q).factors)


def euler_phi(q: int) -> int:
    return prod(p**s - p ** (s - 1) for p, s in factorize(q).factors)


def jordan_j2(q: int) -> int:
    """Jordan totient J_2(q) = q^2 prod_{p | q} (1 - 1/p^2)."""
    return prod(p ** (2 * s) - p ** (2 * s - 2) for p, s in factorize(q).factors)


def p_valuation(p: int, x: int, q: int) -> int:
    """p-adic valuation of the residue ``x`` of Z_q.

    For ``x != 0`` this is the ordinary valuation of the integer x. The zero
    residue is divisible by every power of p present in the ring, so it gets
    the exponent of p in q.
    """
    s = factorize(q).exponent(p)
    if s == 0:
        raise ValueError(f"{p} does not divide {q}")
    x %= q
    if x == 0:
        return s
    t = 0
    while x % p == 0:
        x //= p
        t += 1
    return t


def local_dimension(q: int, v: tuple[int, int]) -> int:
    """Local dimension prod p_i^{t_i} of a nonzero vector (b, c) of Z_q^2.

    ``t_i`` is the smaller of the two coordinate valuations, each capped at the
    exponent of p_i in q. The result is 1 exactly for admissible vectors.
    """
    b, c = v[0] % q, v[1] % q
    if b == 0 and c == 0:
        raise ValueError("local dimension of the zero vector is undefined")
    out = 1
    for p, s in factorize(q).factors:
        t = min(p_valuation(p, b, q), p_valuation(p, c, q), s)
        out *= p**t
    return out


def sp2_order(q: int) -> int:
    """Order of Sp(2, Z_q) = SL(2, Z_q), namely q * J_2(q)."""
    return q * jordan_j2(q)


def hyperbolic_counts(p: int, n: int) -> tuple[int, int]:
    """Point and generator counts of the hyperbolic quadric Q+(2n-1, p)."""
    if n < 1:
        raise ValueError("rank must be >= 1")
    points = (p**n - 1) * (p ** (n - 1) + 1) // (p - 1)
    generators = prod(1 + p ** (i - 1) for i in range(1, n + 1))
    return points, generators


def gcd_all(*xs: int) -> int:
    return reduce(gcd, xs, 0)
