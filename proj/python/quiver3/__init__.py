"""Rank-3 quiver mutation toolkit: classification, orbit enumeration, Coxeter
spectra, and Hochschild cohomology dimensions, with exact integer arithmetic."""

from ._core import (
    acyclic_representatives,
    apply_word,
    cartan,
    char_poly,
    component_of,
    component_table,
    coxeter,
    cyclic_representatives,
    descend,
    dim_h1,
    enumerate_orbit,
    export_dot,
    fundamental_representative,
    hereditary_candidates,
    in_fundamental_domain,
    in_open_domain,
    is_finite_orbit,
    m_case,
    m_minus,
    m_plus,
    markov_constant,
    mutate,
    mutate_to_cyclic,
    path_counts,
    permute,
    predicate_band,
    predicate_constant,
    singular_points,
    slice_classify,
    spectrum,
    summarize_orbit,
    verify_appendix_theorem,
    verify_harness,
)

__all__ = [
    "acyclic_representatives",
    "apply_word",
    "cartan",
    "char_poly",
    "component_of",
    "component_table",
    "coxeter",
    "cyclic_representatives",
    "descend",
    "dim_h1",
    "enumerate_orbit",
    "export_dot",
    "fundamental_representative",
    "hereditary_candidates",
    "in_fundamental_domain",
    "in_open_domain",
    "is_finite_orbit",
    "m_case",
    "m_minus",
    "m_plus",
    "markov_constant",
    "mutate",
    "mutate_to_cyclic",
    "path_counts",
    "permute",
    "predicate_band",
    "predicate_constant",
    "singular_points",
    "slice_classify",
    "spectrum",
    "summarize_orbit",
    "verify_appendix_theorem",
    "verify_harness",
]
