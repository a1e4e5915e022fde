import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from pauligraph.errors import BudgetExceeded
from pauligraph.graphs import are_isomorphic, maximal_cliques
from pauligraph.pauli import (
    Factorization,
    Observable,
    build_pauli_graph,
    commutation_matrix,
    commutes,
    commutes_by_matrix,
    matrix_oracle,
    observables,
    parse_factorization,
    phase_matrix,
)


def test_parse():
    f = parse_factorization("2x3X4")
    assert f.factors == (2, 3, 4) and f.q == 24 and f.lcm == 12 and str(f) == "2x3x4"
    for bad in ("", "1x2", "2x", "ax3", "0"):
        with pytest.raises(ValueError):
            parse_factorization(bad)


def test_observable_count_and_order():
    f = parse_factorization("2x3")
    obs = observables(f)
    assert len(obs) == 35 and len(set(obs)) == 35
    assert obs == sorted(obs)


def test_labels():
    f = parse_factorization("2x2")
    assert str(Observable.of(f, (1, 0), (1, 1))) == "XY"
    assert str(Observable.of(parse_factorization("4"), (2, 1))) == "X^2Z"


def test_group_law():
    f = parse_factorization("3x4")
    a = Observable.of(f, (1, 2), (3, 1))
    b = Observable.of(f, (2, 2), (1, 3))
    assert (a * b).exponents == ((0, 1), (0, 0))
    assert (a ** 12).is_identity


def test_mismatched_dims():
    a = Observable.of(parse_factorization("2x3"), (1, 0), (0, 1))
    b = Observable.of(parse_factorization("3x2"), (1, 0), (0, 1))
    with pytest.raises(ValueError):
        commutes(a, b)


def _dense_commutation(f):
    obs = observables(f)
    mats = np.stack([matrix_oracle(o, f) for o in obs])
    ab = np.einsum("iab,jbc->ijac", mats, mats)
    comm = np.abs(ab - ab.transpose(1, 0, 2, 3)).max(axis=(2, 3)) < 1e-9
    return obs, comm


@pytest.mark.parametrize("dims", [(2,), (3,), (4,), (2, 2), (6,), (2, 3), (8,), (2, 4), (4, 2), (2, 2, 2), (9,), (3, 3)])
def test_symbolic_vs_dense(dims):
    f = Factorization(dims)
    obs, comm = _dense_commutation(f)
    sym = commutation_matrix(f, obs)
    assert np.array_equal(sym.astype(bool), comm)


@pytest.mark.parametrize("dims", [(4,), (2, 3), (2, 2, 3)])
def test_exact_phase_oracle(dims):
    f = Factorization(dims)
    obs = observables(f)
    rng = np.random.default_rng(7)
    for i, j in rng.integers(0, len(obs), size=(150, 2)):
        assert commutes_by_matrix(obs[i], obs[j], f) == commutes(obs[i], obs[j])


def test_phase_matrix_matches_complex():
    f = parse_factorization("2x3")
    for o in observables(f)[:10]:
        assert np.allclose(phase_matrix(o, f).to_complex(), matrix_oracle(o, f))


def test_oracle_cap():
    f = parse_factorization("17")
    with pytest.raises(BudgetExceeded):
        matrix_oracle(observables(parse_factorization("2"))[0], f)


def test_vertex_budget():
    with pytest.raises(BudgetExceeded):
        build_pauli_graph("2x2x2x2x2x2x2", vertex_budget=10**4)


@pytest.mark.parametrize("a,b", [("6", "2x3"), ("6", "3x2"), ("12", "3x4"), ("18", "2x9"), ("10", "2x5")])
def test_coprime_splitting_is_isomorphic(a, b):
    assert are_isomorphic(build_pauli_graph(a), build_pauli_graph(b))


def test_prime_power_not_split():
    g4, g22 = build_pauli_graph("4"), build_pauli_graph("2x2")
    assert g4.num_edges == 21 and g22.num_edges == 45
    assert not are_isomorphic(g4, g22)


@given(st.sampled_from(["2x3", "4", "2x4", "3x3", "2x2x3"]), st.data())
def test_commutation_symmetric_and_bilinear(spec, data):
    f = parse_factorization(spec)
    obs = observables(f)
    a, b, c = (data.draw(st.sampled_from(obs)) for _ in range(3))
    assert commutes(a, b) == commutes(b, a)
    # a commutes with both b and c  =>  a commutes with b*c
    if commutes(a, b) and commutes(a, c) and not (b * c).is_identity:
        assert commutes(a, b * c)


def test_maximal_cliques_have_size_q_minus_1():
    for spec in ("4", "2x2", "6", "2x4", "12", "24", "2x3x4"):
        f = parse_factorization(spec)
        sizes = maximal_cliques(build_pauli_graph(f)).by_size
        assert list(sizes) == [f.q - 1]
