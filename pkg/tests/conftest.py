import itertools
from math import gcd

import pytest
from hypothesis import settings

settings.register_profile("ci", max_examples=60, deadline=None)
settings.load_profile("ci")


def brute_sigma(q):
    return sum(d for d in range(1, q + 1) if q % d == 0)


def brute_phi(q):
    return sum(1 for k in range(1, q + 1) if gcd(k, q) == 1)


def brute_j2(q):
    # pairs (b, c) mod q with gcd(b, c, q) = 1
    return sum(1 for b in range(q) for c in range(q) if gcd(gcd(b, c), q) == 1)


def ordered_factorizations(q, lo=2):
    """All ordered tuples of integers >= 2 with product q."""
    if q == 1:
        yield ()
        return
    for d in range(lo, q + 1):
        if q % d == 0:
            for rest in ordered_factorizations(q // d):
                yield (d,) + rest


@pytest.fixture(scope="session")
def small_factorizations():
    return [f for q in range(2, 13) for f in ordered_factorizations(q)]


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_RESULTS: dict[int, tuple[str, str, float]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        verdict, title, secs = ACCEPTANCE_RESULTS[n]
        terminalreporter.write_line(f"criterion {n}: {verdict}  {title}  ({secs:.1f} s)")
