"""Hopf bands in positive arborescent Hopf plumbings.

For a finite tree T this package builds the quadratic form, Seifert matrix
and homological monodromy of the plumbed surface S_T, enumerates the
integral classes with q(x) = 1 and studies them up to the monodromy.
"""
from .enumeration import AffineFamily, affine_family, dn_solution_set, enumerate_norm_one, short_vectors
from .orbits import (
    AffineOrbitSignature,
    GrowthReport,
    OrbitPartition,
    affine_orbit_signature,
    affine_relation_at,
    coverage_check,
    d4tilde_scc_check,
    growth_classify,
    is_primitive,
    jordan_unit_circle_check,
    orbit_count_in_ball,
    orbit_partition,
    standard_hopf_bands,
)
from .plumbing import (
    PlumbingData,
    alexander_polynomial,
    boundary_components,
    build_plumbing,
    q_value,
    signature_profile,
    surface_genus,
    zero_signature_identity_check,
)
from .trees import (
    Kind,
    Tree,
    TreeClass,
    VertexMap,
    classify_tree,
    enumerate_paths,
    find_affine_subtree,
    named_tree,
    parse_tree,
)

__version__ = "0.1.0"
