import pytest

from pauligraph.errors import VerificationError
from pauligraph.numtheory import jordan_j2, local_dimension, psi, sigma
from pauligraph.zq import (
    admissible_vectors,
    clique_line_bijection,
    cyclic_submodule,
    is_admissible,
    is_perpendicular,
    isotropic_lines,
    lines_through,
    projective_line,
    projective_points_through,
)

# isotropic lines of Z_4^2, written out by hand
QUARTIT_LINES = {
    frozenset({(0, 2), (2, 0), (2, 2)}),
    frozenset({(0, 1), (0, 2), (0, 3)}),
    frozenset({(0, 2), (2, 1), (2, 3)}),
    frozenset({(1, 0), (2, 0), (3, 0)}),
    frozenset({(1, 1), (2, 2), (3, 3)}),
    frozenset({(1, 2), (2, 0), (3, 2)}),
    frozenset({(1, 3), (2, 2), (3, 1)}),
}


def test_quartit_lines_verbatim():
    lines = isotropic_lines(4)
    assert {l.points for l in lines} == QUARTIT_LINES
    nonfree = [l for l in lines if not l.free]
    assert [l.points for l in nonfree] == [frozenset({(0, 2), (2, 0), (2, 2)})]


@pytest.mark.parametrize("q", range(2, 31))
def test_line_counts(q):
    assert len(isotropic_lines(q)) == sigma(q)
    assert len(projective_line(q)) == psi(q)
    assert len(admissible_vectors(q)) == jordan_j2(q)


@pytest.mark.parametrize("q", [4, 8, 9, 12, 16, 18])
def test_free_lines_are_projective_points(q):
    lines = isotropic_lines(q)
    free = [l for l in lines if l.free]
    assert len(free) == psi(q)
    assert len(lines) - len(free) == sigma(q) - psi(q)
    pl = {frozenset(s - {(0, 0)}) for s in projective_line(q)}
    assert {l.points for l in free} == pl


@pytest.mark.parametrize("q", [4, 6, 8, 9, 12, 18])
def test_lines_through_point(q):
    lines = isotropic_lines(q)
    for b in range(q):
        for c in range(q):
            if (b, c) == (0, 0):
                continue
            assert lines_through(q, (b, c), lines) == sigma(local_dimension(q, (b, c)))


def test_projective_points_through_reports_mismatch():
    r = projective_points_through(4, (1, 1))
    assert r["agrees"] and r["enumerated"] == 1
    r = projective_points_through(4, (0, 2))
    assert r["enumerated"] == 2 and r["formula"] == 3 and not r["agrees"]


def test_perpendicular_and_submodules():
    assert is_perpendicular(4, (1, 1), (2, 2))
    assert not is_perpendicular(4, (1, 0), (0, 1))
    assert cyclic_submodule(4, (1, 2)) == frozenset({(0, 0), (1, 2), (2, 0), (3, 2)})
    assert is_admissible(4, (1, 2)) and not is_admissible(4, (2, 2))


@pytest.mark.parametrize("q", [4, 8, 9, 12, 16, 18])
def test_clique_line_bijection(q):
    m = clique_line_bijection(q)
    assert len(m) == sigma(q)


def test_bijection_needs_single_factor():
    with pytest.raises(ValueError):
        clique_line_bijection("2x2")
