"""Exact-arithmetic toolkit for quiver mutation, mutation classes, and
group folding of affine cluster patterns."""

from .backend import BACKEND_NAME
from .catalog import (
    DynkinType,
    GroupAction,
    apq_class_count,
    diagram,
    group_action,
    parse_type,
    recognize_type,
    standard_action,
    table1_triples,
    trivial_action,
)
from .document import export_dot, parse_document, serialize_document
from .errors import AffoldError
from .folding import (
    AdmissibilityReport,
    FoldedMatrix,
    fold,
    fold_commutes,
    g_admissible,
    g_invariant,
    globally_foldable,
    orbit_mutate,
    verify_invariance_equals_admissibility,
)
from .isomorphism import (
    CanonicalForm,
    are_isomorphic,
    automorphism_group,
    canonical_form,
    canonical_key,
    content_hash,
    is_automorphism,
)
from .laurent import LaurentPolynomial
from .matrix import (
    ExchangeMatrix,
    cartan_counterpart,
    is_acyclic,
    make_exchange_matrix,
    mutate,
    mutate_quiver_3step,
    restrict,
    transpose,
)
from .mutclass import (
    FinitenessVerdict,
    MutationClass,
    enumerate_class,
    facet_check,
    is_mutation_finite,
    labeled_class,
    reduces_to,
)
from .seeds import (
    Seed,
    initial_seed,
    mutate_seed,
    orbit_mutate_seed,
    positivity_audit,
    psi_project,
    verify_folded_pattern,
)

__version__ = "1.0.0"

__all__ = [
    "AdmissibilityReport",
    "AffoldError",
    "BACKEND_NAME",
    "CanonicalForm",
    "DynkinType",
    "ExchangeMatrix",
    "FinitenessVerdict",
    "FoldedMatrix",
    "GroupAction",
    "LaurentPolynomial",
    "MutationClass",
    "Seed",
    "apq_class_count",
    "are_isomorphic",
    "automorphism_group",
    "canonical_form",
    "canonical_key",
    "cartan_counterpart",
    "content_hash",
    "diagram",
    "enumerate_class",
    "export_dot",
    "facet_check",
    "fold",
    "fold_commutes",
    "g_admissible",
    "g_invariant",
    "globally_foldable",
    "group_action",
    "initial_seed",
    "is_acyclic",
    "is_automorphism",
    "is_mutation_finite",
    "labeled_class",
    "make_exchange_matrix",
    "mutate",
    "mutate_quiver_3step",
    "mutate_seed",
    "orbit_mutate",
    "orbit_mutate_seed",
    "parse_document",
    "parse_type",
    "positivity_audit",
    "psi_project",
    "recognize_type",
    "reduces_to",
    "restrict",
    "serialize_document",
    "standard_action",
    "table1_triples",
    "transpose",
    "trivial_action",
    "verify_folded_pattern",
    "verify_invariance_equals_admissibility",
]
