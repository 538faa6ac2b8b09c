"""Exact spectra and Kirchhoff indices of enhanced hypercubes Q_{n,k}."""

from .group_core import (
    DimensionMismatchError,
    EnhancedParams,
    GeneratingSet,
    GroupElement,
    ParameterError,
    build_enhanced_generating_set,
    character_value,
    eigenvalue_by_character,
    eigenvalue_by_weight,
)
from .kirchhoff import (
    CertificateError,
    DomainError,
    MonotonicityCertificate,
    asymptotic_sequences,
    bounds,
    delta_k,
    even_binomial_identity_sides,
    kf_closed_form,
    kf_folded,
    kf_from_laplacian,
    kf_k_max,
    limit_ratio,
    monotonicity_certificate,
)
from .oracle import (
    ExplicitGraph,
    ResistanceReport,
    bruteforce_spectrum,
    build_graph,
    effective_resistance_kf,
    graph_report,
)
from .spectrum import (
    RawFamilies,
    Spectrum,
    adjacency_spectrum,
    binom,
    folded_spectrum,
    is_bipartite_by_parity,
    laplacian_spectrum,
    raw_eigenvalue_families,
    spectral_gap,
)

__version__ = "0.1.0"
