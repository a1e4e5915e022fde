"""Exact graph machinery: bitset graphs, cliques, certified spectra, automorphisms."""

from .cliques import CliqueFamily, maximal_cliques, naive_maximal_cliques
from .core import Graph
from .iso import are_isomorphic, aut_order, automorphism_orbits, find_isomorphism, is_isomorphism
from .spectrum import Spectrum, certified_nullity, exact_rank, spectrum


def is_strongly_regular(g: Graph):
    return g.strongly_regular_parameters()


def connected_components(g: Graph) -> list[Graph]:
    return g.connected_components()


def complement(g: Graph) -> Graph:
    return g.complement()


__all__ = [
    "Graph",
    "CliqueFamily",
    "Spectrum",
    "maximal_cliques",
    "naive_maximal_cliques",
    "spectrum",
    "exact_rank",
    "certified_nullity",
    "is_strongly_regular",
    "connected_components",
    "complement",
    "are_isomorphic",
    "find_isomorphism",
    "is_isomorphism",
    "aut_order",
    "automorphism_orbits",
]
