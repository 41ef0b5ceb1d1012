"""Exact hard-core model statistics on small graphs.

Independence polynomials are counted with integer coefficients and every
derived quantity (occupancy, variance, mixture weights, clique-side
occupancy) is a :class:`fractions.Fraction`.  The ``verify`` module checks
the extremal occupancy and variance bounds exhaustively over all graphs of
small order.
"""

from .families import (FamilySpec, build, closed_form_E_G1, closed_form_E_Z,
                       closed_form_P_bounds, closed_form_V, parse_family)
from .graph import (Graph, canonical_label, complement, emit_graph6, enumerate_graphs,
                    independence_number, is_isomorphic, parse_graph6)
from .model import (free_energy, mixture_decomposition, occupancy_fraction, phi_statistics,
                    size_distribution, variance_fraction)
from .poly import IndependenceProfile, clique_profile, evaluate, independence_profile
from .report import VerificationReport
from .sampler import ChainConfig, glauber_run
from .symmetrization import clique_occupancy, symmetrize_pair, symmetrize_to_multipartite
from .verify import VerifyConfig, run_all

__all__ = [
    "FamilySpec", "build", "closed_form_E_G1", "closed_form_E_Z", "closed_form_P_bounds",
    "closed_form_V", "parse_family",
    "Graph", "canonical_label", "complement", "emit_graph6", "enumerate_graphs",
    "independence_number", "is_isomorphic", "parse_graph6",
    "free_energy", "mixture_decomposition", "occupancy_fraction", "phi_statistics",
    "size_distribution", "variance_fraction",
    "IndependenceProfile", "clique_profile", "evaluate", "independence_profile",
    "VerificationReport", "ChainConfig", "glauber_run",
    "clique_occupancy", "symmetrize_pair", "symmetrize_to_multipartite",
    "VerifyConfig", "run_all",
]
