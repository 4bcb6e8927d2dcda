"""Exact-arithmetic certificates for eigenvalue counts of structured graphs.

The package constructs signed matrices attached to Johnson graphs, Hamming
graphs and association schemes, verifies their spectral claims by exact
rational identities, and runs combinatorial lower-bound rules for the
minimum number of distinct eigenvalues q(G).
"""

from .exact import (
    ExactMatrix,
    PrimeFieldMatrix,
    SpectralSummary,
    rank_rational,
    minimal_polynomial_degree,
    annihilator_check,
    is_idempotent_scaled,
    rank_mod_p,
    gf2_kernel_with_odd_support,
    kronecker,
)
from .graphs import Graph, SignedGraph
from .johnson import boundary_W, laplacian_pair, signed_adjacency_A
from .obstruction import parity_certificate, phi, sign_exhaust
from .qbounds import QBoundReport, q_bounds, table1_reproduce

SPEC_VERSION = "1.0"

__all__ = [
    "ExactMatrix",
    "PrimeFieldMatrix",
    "SpectralSummary",
    "rank_rational",
    "minimal_polynomial_degree",
    "annihilator_check",
    "is_idempotent_scaled",
    "rank_mod_p",
    "gf2_kernel_with_odd_support",
    "kronecker",
    "Graph",
    "SignedGraph",
    "boundary_W",
    "laplacian_pair",
    "signed_adjacency_A",
    "phi",
    "parity_certificate",
    "sign_exhaust",
    "QBoundReport",
    "q_bounds",
    "table1_reproduce",
    "SPEC_VERSION",
]
