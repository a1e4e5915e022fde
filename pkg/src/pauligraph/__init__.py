"""Commutation graphs of generalized Pauli observables and their finite geometry.

Observables of a q-dimensional system (q a product of qudit dimensions) are
vertices; edges join commuting pairs. Maximal commuting sets, their
intersection graphs and exact spectra/automorphism orders are computed with
certified integer arithmetic.
"""

from . import graphs
from .config import Config
from .errors import BudgetExceeded, SpectrumError, VerificationError
from .graphs import CliqueFamily, Graph, Spectrum, aut_order, maximal_cliques, spectrum
from .numtheory import (
    FactoredInteger,
    euler_phi,
    factorize,
    jordan_j2,
    local_dimension,
    p_valuation,
    psi,
    sigma,
    sp2_order,
)
from .pauli import (
    Factorization,
    Observable,
    build_pauli_graph,
    commutation_matrix,
    commutes,
    commutes_by_matrix,
    observables,
    parse_factorization,
)
from .polar import (
    PolarSpace,
    Spread,
    clique_split,
    dual_graph,
    find_spread,
    intersection_profile,
    k_intersection_graph,
    polar_space,
    puncture,
)
from .report import AnalysisReport, analyze, discrepancy_ledger, export, table1
from .zq import admissible_vectors, clique_line_bijection, isotropic_lines, projective_line

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_") and name not in ("annotations",)]
